#pragma once

#include <vector>

#include "diagnoscope/graph.hpp"

namespace diagnoscope {

struct ConnectivityReport {
  int kappa = 0;
  int delta = 0;
  bool maximally_connected = false;
  /// A minimum vertex cut; empty for complete and for already-disconnected graphs.
  VertexSet witness_cut;
};

/// κ(G) by unit-vertex-capacity max flow (Even's scheme). κ(K_n) = n-1, κ = 0 when disconnected.
/// The witness is the source-side minimum cut of the first pair, in Even's order, that attains κ.
ConnectivityReport vertex_connectivity(const Graph& g);

using Path = std::vector<Vertex>;

struct DisjointPaths {
  int count = 0;
  /// Each path runs from u to v; internal vertices are pairwise disjoint.
  std::vector<Path> paths;
};

/// Maximum family of internally-disjoint u-v paths (the edge uv counts as a path when present).
DisjointPaths internally_disjoint_paths(const Graph& g, Vertex u, Vertex v);

/// Local connectivity between non-adjacent u and v: the minimum u-v separator size.
int local_connectivity(const Graph& g, Vertex u, Vertex v);

bool is_maximally_connected(const Graph& g);

struct CommonNeighbors {
  int value = 0;
  Vertex u = 0;
  Vertex v = 1;
};

/// C(G) = max |N(u) ∩ N(v)| over unordered pairs, with the lexicographically first achieving pair.
CommonNeighbors max_common_neighbors(const Graph& g);

}  // namespace diagnoscope
