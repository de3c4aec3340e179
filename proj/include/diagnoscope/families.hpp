#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "diagnoscope/budget.hpp"
#include "diagnoscope/graph.hpp"

namespace diagnoscope {

/// Full description of one member Γ_index(delta, l) of the exceptional family.
///
/// Vertex layout of the built graph: the core block first, then side block A (two vertices, Γ2 and
/// Γ3 only), then side block B (two vertices, Γ3 only), then the l independent-block vertices.
///
///   index  core size  side A        side B  independent vertex attaches to
///   1      delta      -             -       the whole core
///   2      delta-1    K2            -       the whole core + one vertex of side A (pick_a)
///   3      delta-2    H2            H2'     the whole core + one of A (pick_a) + one of B (pick_b)
///   4      delta      -             -       the whole core, then edge `extra` added and `removed` deleted
///   5      delta+1    -             -       `attach[i]`, of size delta or delta+1
struct GammaSpec {
  int index = 1;
  int delta = 3;
  int l = 4;
  /// Edges of the core block, in core-local ids.
  EdgeSet core;
  /// Edges of H2 (Γ3) in side-local ids 0..1. Γ2's side block is always the complete K2.
  EdgeSet side_a;
  EdgeSet side_b;
  /// Cross edges between the non-independent blocks, in layout ids (Γ2: core-side A; Γ3: any two
  /// of core, side A, side B).
  EdgeSet links;
  std::vector<int> pick_a;
  std::vector<int> pick_b;
  /// Γ4: the two independent vertices joined by the added edge, as independent-block indices.
  std::pair<int, int> extra{0, 1};
  /// Γ4: E0, in layout ids; each edge joins a core vertex to one of the two `extra` vertices.
  EdgeSet removed;
  /// Γ5: core-local neighbor set of each independent vertex.
  std::vector<VertexSet> attach;
};

int core_size(int index, int delta);
/// Vertices outside the independent block.
int block_size(int index, int delta);
int min_independent_size(int index, int delta);

/// Assembles the graph. Throws InvalidArgument naming the violated constraint: index/delta/l
/// range, block ids, the E0 rule, the Γ5 attachment sizes, or a built graph whose minimum degree
/// differs from delta.
Graph make_gamma(const GammaSpec& spec);

/// Random valid spec. Block subgraphs are complete when `complete_blocks`, otherwise uniformly
/// random spanning subgraphs; cross choices are random. Retries until make_gamma accepts.
GammaSpec random_gamma_spec(int index, int delta, int l, std::mt19937_64& rng, bool complete_blocks = false);

/// Spec with complete blocks and every link present; independent vertices alternate between the
/// side vertices, Γ4 joins independent vertices 0 and 1 with E0 empty, and each Γ5 attachment
/// misses one core vertex round-robin.
GammaSpec canonical_gamma_spec(int index, int delta, int l);

struct GammaMatch {
  GammaSpec spec;
  /// placement[v] is the layout id of input vertex v in make_gamma(spec).
  std::vector<Vertex> placement;
};

enum class RecognitionStatus { decided, cap_exceeded };

struct RecognitionResult {
  bool member = false;
  /// Smallest matching family index.
  std::optional<int> index;
  /// Every index 1..5 the graph matches (a graph can fit more than one template).
  std::vector<int> matches;
  std::optional<GammaMatch> witness;
  RecognitionStatus status = RecognitionStatus::decided;
};

/// Decides membership of g in the exceptional family for δ = δ(g) by template matching over
/// candidate block splits. Graphs with δ(g) < 3 are decided non-members.
RecognitionResult recognize_exceptional(const Graph& g, const Budget& budget = {});

/// Why the "not exceptional" hypothesis holds or does not.
enum class Exclusion {
  low_degree,         // δ < 3: the family is not defined
  regular,            // members are irregular
  common_neighbors,   // C(G) below every member's C value
  recognizer,         // exact search found no match
  member,             // g is in the family
  undecided,          // recognizer over cap
};

struct ExclusionCheck {
  bool excluded = false;
  Exclusion reason = Exclusion::undecided;
  std::optional<int> member_index;
};

/// Cheap sufficient conditions first (regularity; δ >= 3 and C <= δ-2; δ >= 4 and C <= δ-1),
/// then the recognizer.
ExclusionCheck exclude_exceptional(const Graph& g, const Budget& budget = {});

std::string to_string(Exclusion reason);

// Standard networks.

Graph hypercube(int dimension);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph petersen_graph();
/// Vertex i is adjacent to i ± c (mod n) for every connection c.
Graph circulant_graph(int n, const std::vector<int>& connections);
/// C_n × K2.
Graph prism_graph(int n);
/// Random graph on n vertices with κ >= t. Throws InvalidArgument when t >= n and CapExceeded
/// after `attempts` failed draws.
Graph random_t_connected(int n, int t, std::uint64_t seed, int attempts = 1000);

}  // namespace diagnoscope
