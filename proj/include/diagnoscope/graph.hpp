#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace diagnoscope {

using Vertex = int;

/// Hard capacity of a VertexSet; graphs larger than this cannot be represented.
inline constexpr int kMaxVertices = 64;

/// Subset of the vertices 0..63 stored as a single machine word.
class VertexSet {
public:
  using Word = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members);

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= kMaxVertices ? ~Word{0} : ((Word{1} << n) - 1));
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(Word{1} << v); }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr Vertex front() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= Word{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(Word{1} << v); }

  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Forward iteration over members in increasing order.
  class iterator {
  public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

  private:
    Word rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> members() const;

private:
  Word bits_ = 0;
};

/// Lexicographic order on the sorted member lists ({0,5} < {1} < {1,2}).
bool lex_less(VertexSet a, VertexSet b);

std::ostream& operator<<(std::ostream& os, VertexSet s);

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of edges.
using EdgeSet = std::vector<Edge>;

EdgeSet make_edge_set(std::span<const Edge> edges);

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
  Graph() = default;

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
  const EdgeSet& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

private:
  friend Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list);
  friend Graph from_edge_set(int n, EdgeSet edges);

  std::vector<VertexSet> adjacency_;
  EdgeSet edges_;
};

/// Builds a graph, collapsing duplicate and reversed pairs. Throws InvalidArgument naming the
/// offending pair on an out-of-range endpoint or a self-loop, and when n is outside 0..64.
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list);
Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list);
Graph from_edge_set(int n, EdgeSet edges);

/// Empty graph on n vertices (the complement of K_n).
Graph edgeless(int n);

Graph complement(const Graph& g);

/// Disjoint union; h's ids are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g, const Graph& h);

/// Disjoint union plus exactly the listed cross edges, each given as (vertex of g, vertex of h).
Graph star_r(const Graph& g, const Graph& h, std::span<const std::pair<Vertex, Vertex>> cross);

/// Disjoint union plus one cross edge per vertex v of g, to assign[v] in h.
Graph star_1(const Graph& g, const Graph& h, std::span<const Vertex> assign);

/// Removes the given edges; every member must be an edge of g.
Graph delete_edges(const Graph& g, std::span<const Edge> f);

/// Adds edges between existing vertices (duplicates collapse).
Graph add_edges(const Graph& g, std::span<const Edge> f);

struct InducedSubgraph {
  Graph graph;
  /// old id -> new id, -1 for vertices not kept
  std::vector<Vertex> remap;
  /// new id -> old id
  std::vector<Vertex> origin;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

/// Applies a vertex relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

struct DegreeProfile {
  int min_degree = 0;
  std::vector<int> degrees;  // sorted ascending
  bool regular = true;
};

/// Throws InvalidArgument on the null graph.
DegreeProfile degree_profile(const Graph& g);

/// δ(G); 0 for the null graph.
int min_degree(const Graph& g);

/// Edges of g with an endpoint at v.
EdgeSet incident_edges(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

/// True when g - removed is disconnected or has at most one vertex.
bool disconnects(const Graph& g, VertexSet removed);

}  // namespace diagnoscope
