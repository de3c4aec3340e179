#include "diagnoscope/graph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

#include "diagnoscope/error.hpp"

namespace diagnoscope {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  std::ostringstream os;
  os << "(" << u << "," << v << ")";
  return os.str();
}

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxVertices));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) insert(v);
}

std::vector<Vertex> VertexSet::members() const { return {begin(), end()}; }

bool lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

std::ostream& operator<<(std::ostream& os, VertexSet s) {
  os << "{";
  bool first = true;
  for (Vertex v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  return os << "}";
}

EdgeSet make_edge_set(std::span<const Edge> edges) {
  EdgeSet out(edges.begin(), edges.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph from_edge_set(int n, EdgeSet edges) {
  check_order(n);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g;
  g.adjacency_.assign(n, VertexSet{});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) throw InvalidArgument("endpoint out of range in pair " + pair_text(e.u, e.v));
    if (e.u == e.v) throw InvalidArgument("self-loop " + pair_text(e.u, e.v));
    g.adjacency_[e.u].insert(e.v);
    g.adjacency_[e.v].insert(e.u);
  }
  g.edges_ = std::move(edges);
  return g;
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  check_order(n);
  EdgeSet edges;
  edges.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("endpoint out of range in pair " + pair_text(u, v));
    }
    if (u == v) throw InvalidArgument("self-loop " + pair_text(u, v));
    edges.emplace_back(u, v);
  }
  return from_edge_set(n, std::move(edges));
}

Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()));
}

Graph edgeless(int n) { return from_edge_set(n, {}); }

Graph complement(const Graph& g) {
  EdgeSet edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return from_edge_set(g.order(), std::move(edges));
}

namespace {

EdgeSet union_edges(const Graph& g, const Graph& h) {
  EdgeSet edges = g.edges();
  const int shift = g.order();
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return edges;
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
  return from_edge_set(g.order() + h.order(), union_edges(g, h));
}

Graph join(const Graph& g, const Graph& h) {
  EdgeSet edges = union_edges(g, h);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) edges.emplace_back(u, g.order() + v);
  }
  return from_edge_set(g.order() + h.order(), std::move(edges));
}

Graph star_r(const Graph& g, const Graph& h, std::span<const std::pair<Vertex, Vertex>> cross) {
  EdgeSet edges = union_edges(g, h);
  for (auto [a, b] : cross) {
    if (a < 0 || a >= g.order() || b < 0 || b >= h.order()) {
      throw InvalidArgument("cross pair " + pair_text(a, b) + " must join a vertex of the left graph to one of the right");
    }
    edges.emplace_back(a, g.order() + b);
  }
  return from_edge_set(g.order() + h.order(), std::move(edges));
}

Graph star_1(const Graph& g, const Graph& h, std::span<const Vertex> assign) {
  if (static_cast<int>(assign.size()) != g.order()) {
    throw InvalidArgument("assignment covers " + std::to_string(assign.size()) + " of " +
                          std::to_string(g.order()) + " left vertices");
  }
  EdgeSet edges = union_edges(g, h);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (assign[u] < 0 || assign[u] >= h.order()) {
      throw InvalidArgument("assignment of vertex " + std::to_string(u) + " is not a right vertex");
    }
    edges.emplace_back(u, g.order() + assign[u]);
  }
  return from_edge_set(g.order() + h.order(), std::move(edges));
}

Graph delete_edges(const Graph& g, std::span<const Edge> f) {
  for (const Edge& e : f) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e)) {
      throw InvalidArgument("edge " + pair_text(e.u, e.v) + " is not an edge of the graph");
    }
  }
  EdgeSet removed = make_edge_set(f);
  EdgeSet kept;
  kept.reserve(g.edges().size());
  std::set_difference(g.edges().begin(), g.edges().end(), removed.begin(), removed.end(),
                      std::back_inserter(kept));
  return from_edge_set(g.order(), std::move(kept));
}

Graph add_edges(const Graph& g, std::span<const Edge> f) {
  EdgeSet edges = g.edges();
  edges.insert(edges.end(), f.begin(), f.end());
  return from_edge_set(g.order(), std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  InducedSubgraph out;
  out.remap.assign(g.order(), -1);
  keep &= g.vertices();
  for (Vertex v : keep) {
    out.remap[v] = static_cast<Vertex>(out.origin.size());
    out.origin.push_back(v);
  }
  EdgeSet edges;
  for (const Edge& e : g.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) edges.emplace_back(out.remap[e.u], out.remap[e.v]);
  }
  out.graph = from_edge_set(keep.size(), std::move(edges));
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidArgument("relabeling has wrong length");
  EdgeSet edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return from_edge_set(g.order(), std::move(edges));
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("degree profile of the null graph");
  DegreeProfile p;
  p.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
  std::sort(p.degrees.begin(), p.degrees.end());
  p.min_degree = p.degrees.front();
  p.regular = p.degrees.front() == p.degrees.back();
  return p;
}

int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

EdgeSet incident_edges(const Graph& g, Vertex v) {
  EdgeSet out;
  for (Vertex w : g.neighbors(v)) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

VertexSet component_of(const Graph& g, Vertex start, VertexSet allowed) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return component_of(g, 0, g.vertices()) == g.vertices();
}

bool disconnects(const Graph& g, VertexSet removed) {
  const VertexSet rest = g.vertices() - removed;
  if (rest.size() <= 1) return true;
  return component_of(g, rest.front(), rest) != rest;
}

}  // namespace diagnoscope
