#include "diagnoscope/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "diagnoscope/connectivity.hpp"
#include "diagnoscope/error.hpp"
#include "subsets.hpp"

namespace diagnoscope {

namespace {

int side_a_size(int index) { return index == 2 || index == 3 ? 2 : 0; }
int side_b_size(int index) { return index == 3 ? 2 : 0; }

[[noreturn]] void reject(const GammaSpec& spec, const std::string& what) {
  throw InvalidArgument("gamma " + std::to_string(spec.index) + "(" + std::to_string(spec.delta) + ", " +
                        std::to_string(spec.l) + "): " + what);
}

void check_local_edges(const GammaSpec& spec, const EdgeSet& edges, int size, const char* name) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= size || e.u == e.v) reject(spec, std::string(name) + " edge outside its block");
  }
}

void check_unused(const GammaSpec& spec, bool empty, const char* name) {
  if (!empty) reject(spec, std::string(name) + " is not used by this family member");
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

EdgeSet complete_edges(int size) {
  EdgeSet edges;
  for (Vertex u = 0; u < size; ++u) {
    for (Vertex v = u + 1; v < size; ++v) edges.emplace_back(u, v);
  }
  return edges;
}

/// Every cross edge a spec may list in `links`, in layout ids.
EdgeSet possible_links(int index, int c) {
  EdgeSet edges;
  if (index != 2 && index != 3) return edges;
  const int end = c + side_a_size(index) + side_b_size(index);
  auto block = [c](Vertex v) { return v < c ? 0 : (v < c + 2 ? 1 : 2); };
  for (Vertex u = 0; u < end; ++u) {
    for (Vertex v = u + 1; v < end; ++v) {
      if (block(u) != block(v)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

EdgeSet random_spanning(int size, std::mt19937_64& rng, bool complete) {
  EdgeSet edges;
  for (Vertex u = 0; u < size; ++u) {
    for (Vertex v = u + 1; v < size; ++v) {
      if (complete || draw(rng, 2) == 1) edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace

int core_size(int index, int delta) {
  switch (index) {
    case 1:
    case 4: return delta;
    case 2: return delta - 1;
    case 3: return delta - 2;
    case 5: return delta + 1;
    default: throw InvalidArgument("family index must be 1..5");
  }
}

int block_size(int index, int delta) { return core_size(index, delta) + side_a_size(index) + side_b_size(index); }

int min_independent_size(int index, int delta) { return index == 5 ? delta + 2 : delta + 1; }

Graph make_gamma(const GammaSpec& spec) {
  if (spec.index < 1 || spec.index > 5) throw InvalidArgument("family index must be 1..5");
  if (spec.delta < 3) reject(spec, "delta must be at least 3");
  if (spec.l < min_independent_size(spec.index, spec.delta)) {
    reject(spec, "l must be at least " + std::to_string(min_independent_size(spec.index, spec.delta)));
  }
  const int c = core_size(spec.index, spec.delta);
  const int sa = side_a_size(spec.index);
  const int sb = side_b_size(spec.index);
  const int first_independent = c + sa + sb;
  const int n = first_independent + spec.l;
  if (n > kMaxVertices) reject(spec, "too many vertices");
  auto independent = [&](int i) { return first_independent + i; };

  check_local_edges(spec, spec.core, c, "core");
  if (spec.index == 3) {
    check_local_edges(spec, spec.side_a, 2, "side A");
    check_local_edges(spec, spec.side_b, 2, "side B");
  } else {
    check_unused(spec, spec.side_a.empty(), "side A");
    check_unused(spec, spec.side_b.empty(), "side B");
  }
  if (spec.index != 2 && spec.index != 3) {
    check_unused(spec, spec.links.empty(), "links");
    check_unused(spec, spec.pick_a.empty(), "pick_a");
  }
  if (spec.index != 3) check_unused(spec, spec.pick_b.empty(), "pick_b");
  if (spec.index != 4) check_unused(spec, spec.removed.empty(), "removed");
  if (spec.index != 5) check_unused(spec, spec.attach.empty(), "attach");

  EdgeSet edges;
  for (const Edge& e : spec.core) edges.push_back(e);
  for (const Edge& e : spec.side_a) edges.emplace_back(c + e.u, c + e.v);
  for (const Edge& e : spec.side_b) edges.emplace_back(c + sa + e.u, c + sa + e.v);

  auto block_of = [&](Vertex v) { return v < c ? 0 : (v < c + sa ? 1 : (v < first_independent ? 2 : 3)); };
  if (spec.index == 2 || spec.index == 3) {
    for (const Edge& e : spec.links) {
      if (e.v >= first_independent) reject(spec, "links may not touch the independent block");
      const int bu = block_of(e.u);
      const int bv = block_of(e.v);
      if (bu == bv) reject(spec, "links must join two different blocks");
      if (spec.index == 2 && (bu != 0 || bv != 1)) reject(spec, "links must join the core to side A");
      edges.push_back(e);
    }
    auto attach_side = [&](const std::vector<int>& pick, int offset, const char* name) {
      if (static_cast<int>(pick.size()) != spec.l) reject(spec, std::string(name) + " needs one entry per independent vertex");
      for (int i = 0; i < spec.l; ++i) {
        if (pick[i] != 0 && pick[i] != 1) reject(spec, std::string(name) + " entries must be 0 or 1");
        edges.emplace_back(independent(i), offset + pick[i]);
      }
    };
    attach_side(spec.pick_a, c, "pick_a");
    if (spec.index == 3) attach_side(spec.pick_b, c + sa, "pick_b");
  }
  if (spec.index == 2) edges.emplace_back(c, c + 1);

  if (spec.index != 5) {
    for (int i = 0; i < spec.l; ++i) {
      for (Vertex h = 0; h < c; ++h) edges.emplace_back(h, independent(i));
    }
  } else {
    if (static_cast<int>(spec.attach.size()) != spec.l) reject(spec, "attach needs one entry per independent vertex");
    for (int i = 0; i < spec.l; ++i) {
      const VertexSet a = spec.attach[i];
      if (!a.subset_of(VertexSet::range(c))) reject(spec, "attach entries must name core vertices");
      if (a.size() < spec.delta || a.size() > spec.delta + 1) {
        reject(spec, "each independent vertex needs delta or delta+1 core neighbors");
      }
      for (Vertex h : a) edges.emplace_back(h, independent(i));
    }
  }

  if (spec.index == 4) {
    const auto [a, b] = spec.extra;
    if (a == b || a < 0 || b < 0 || a >= spec.l || b >= spec.l) reject(spec, "extra must name two distinct independent vertices");
    const Vertex u1 = independent(a);
    const Vertex u2 = independent(b);
    int at_u1 = 0;
    int at_u2 = 0;
    for (const Edge& e : spec.removed) {
      if (e.u >= c) reject(spec, "E0 edges must join the core to u1 or u2");
      if (e.v == u1) ++at_u1;
      else if (e.v == u2) ++at_u2;
      else reject(spec, "E0 edges must join the core to u1 or u2");
    }
    if (at_u1 > 1 || at_u2 > 1) reject(spec, "E0 removes at most one edge at each of u1, u2");
    edges.emplace_back(u1, u2);
    EdgeSet removed = make_edge_set(spec.removed);
    EdgeSet all = make_edge_set(edges);
    edges.clear();
    std::set_difference(all.begin(), all.end(), removed.begin(), removed.end(), std::back_inserter(edges));
  }

  Graph g = from_edge_set(n, std::move(edges));
  const int actual = min_degree(g);
  if (actual != spec.delta) reject(spec, "built graph has minimum degree " + std::to_string(actual) + ", not delta");
  return g;
}

GammaSpec canonical_gamma_spec(int index, int delta, int l) {
  GammaSpec spec;
  spec.index = index;
  spec.delta = delta;
  spec.l = l;
  const int c = core_size(index, delta);
  spec.core = complete_edges(c);
  spec.links = possible_links(index, c);
  if (index == 2 || index == 3) {
    for (int i = 0; i < l; ++i) spec.pick_a.push_back(i % 2);
  }
  if (index == 3) {
    spec.side_a = {Edge(0, 1)};
    spec.side_b = {Edge(0, 1)};
    for (int i = 0; i < l; ++i) spec.pick_b.push_back((i / 2) % 2);
  }
  if (index == 5) {
    for (int i = 0; i < l; ++i) spec.attach.push_back(VertexSet::range(c) - VertexSet::single(i % c));
  }
  return spec;
}

GammaSpec random_gamma_spec(int index, int delta, int l, std::mt19937_64& rng, bool complete_blocks) {
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    GammaSpec spec;
    spec.index = index;
    spec.delta = delta;
    spec.l = l;
    const int c = core_size(index, delta);
    spec.core = random_spanning(c, rng, complete_blocks);
    for (const Edge& e : possible_links(index, c)) {
      if (complete_blocks || draw(rng, 2) == 1) spec.links.push_back(e);
    }
    if (index == 2 || index == 3) {
      for (int i = 0; i < l; ++i) spec.pick_a.push_back(static_cast<int>(draw(rng, 2)));
      if (index == 3) {
        if (complete_blocks || draw(rng, 2) == 1) spec.side_a = {Edge(0, 1)};
        if (complete_blocks || draw(rng, 2) == 1) spec.side_b = {Edge(0, 1)};
        for (int i = 0; i < l; ++i) spec.pick_b.push_back(static_cast<int>(draw(rng, 2)));
      }
    }
    if (index == 4) {
      const int a = static_cast<int>(draw(rng, l));
      int b = static_cast<int>(draw(rng, l - 1));
      if (b >= a) ++b;
      spec.extra = {a, b};
      const int first_independent = block_size(index, delta);
      for (int u : {a, b}) {
        if (draw(rng, 2) == 1) spec.removed.emplace_back(static_cast<Vertex>(draw(rng, c)), first_independent + u);
      }
      std::sort(spec.removed.begin(), spec.removed.end());
    }
    if (index == 5) {
      for (int i = 0; i < l; ++i) {
        VertexSet a = VertexSet::range(c);
        if (draw(rng, 2) == 1) a.erase(static_cast<Vertex>(draw(rng, c)));
        spec.attach.push_back(a);
      }
    }
    try {
      make_gamma(spec);
      return spec;
    } catch (const InvalidArgument&) {
    }
  }
  throw InvalidArgument("no valid gamma spec found for index " + std::to_string(index));
}

// Recognition.

namespace {

struct Blocks {
  std::vector<Vertex> core;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  std::vector<Vertex> independent;
};

/// Reads a spec off g for the given block split and accepts it only if make_gamma rebuilds g
/// exactly under the induced placement.
std::optional<GammaMatch> try_blocks(const Graph& g, int index, int delta, const Blocks& b) {
  const int n = g.order();
  std::vector<Vertex> placement(n, -1);
  Vertex next = 0;
  for (const auto* block : {&b.core, &b.side_a, &b.side_b, &b.independent}) {
    for (Vertex v : *block) placement[v] = next++;
  }
  GammaSpec spec;
  spec.index = index;
  spec.delta = delta;
  spec.l = static_cast<int>(b.independent.size());
  const int c = static_cast<int>(b.core.size());
  const int first_independent = c + static_cast<int>(b.side_a.size() + b.side_b.size());
  auto block_of = [&](Vertex layout) {
    return layout < c ? 0 : (layout < c + 2 && !b.side_a.empty() ? 1 : (layout < first_independent ? 2 : 3));
  };

  VertexSet a_set;
  VertexSet b_set;
  for (Vertex v : b.side_a) a_set.insert(v);
  for (Vertex v : b.side_b) b_set.insert(v);

  for (const Edge& e : g.edges()) {
    const Edge p(placement[e.u], placement[e.v]);
    const int bu = block_of(p.u);
    const int bv = block_of(p.v);
    if (bu == 0 && bv == 0) spec.core.push_back(p);
    else if (bu == bv && bu == 1 && index == 3) spec.side_a.emplace_back(p.u - c, p.v - c);
    else if (bu == bv && bu == 2) spec.side_b.emplace_back(p.u - c - 2, p.v - c - 2);
    else if (bu != 3 && bv != 3 && bu != bv) spec.links.push_back(p);
  }
  std::sort(spec.core.begin(), spec.core.end());
  std::sort(spec.links.begin(), spec.links.end());

  for (int i = 0; i < spec.l; ++i) {
    const Vertex x = b.independent[i];
    const VertexSet nx = g.neighbors(x);
    if (index == 2 || index == 3) {
      if ((nx & a_set).size() != 1) return std::nullopt;
      spec.pick_a.push_back(placement[(nx & a_set).front()] - c);
      if (index == 3) {
        if ((nx & b_set).size() != 1) return std::nullopt;
        spec.pick_b.push_back(placement[(nx & b_set).front()] - c - 2);
      }
    }
    if (index == 5) {
      VertexSet local;
      for (Vertex v : nx) {
        if (placement[v] < c) local.insert(placement[v]);
      }
      spec.attach.push_back(local);
    }
  }

  if (index == 4) {
    std::vector<int> touched;
    for (int i = 0; i < spec.l; ++i) {
      for (int j = i + 1; j < spec.l; ++j) {
        if (g.adjacent(b.independent[i], b.independent[j])) {
          touched.push_back(i);
          touched.push_back(j);
        }
      }
    }
    if (touched.size() != 2) return std::nullopt;
    spec.extra = {touched[0], touched[1]};
    for (int u : touched) {
      for (Vertex h = 0; h < c; ++h) {
        if (!g.adjacent(b.core[h], b.independent[u])) spec.removed.emplace_back(h, first_independent + u);
      }
    }
    std::sort(spec.removed.begin(), spec.removed.end());
  }

  try {
    if (make_gamma(spec) == relabel(g, placement)) return GammaMatch{std::move(spec), std::move(placement)};
  } catch (const InvalidArgument&) {
  }
  return std::nullopt;
}

std::vector<Vertex> members_of(VertexSet s) { return s.members(); }

/// Tries every split of the remaining block vertices into core / side blocks for one template.
std::optional<GammaMatch> match_split(const Graph& g, int index, int delta, VertexSet rest) {
  const VertexSet l_set = g.vertices() - rest;
  Blocks b;
  b.independent = members_of(l_set);
  if (index == 1 || index == 4 || index == 5) {
    b.core = members_of(rest);
    return try_blocks(g, index, delta, b);
  }
  const auto r = members_of(rest);
  const int size = static_cast<int>(r.size());
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (index == 2) {
        if (!g.adjacent(r[i], r[j])) continue;
        b.side_a = {r[i], r[j]};
        b.core = members_of(rest - VertexSet{r[i], r[j]});
        if (auto m = try_blocks(g, index, delta, b)) return m;
        continue;
      }
      // index 3: side A = {r[i], r[j]}, side B any disjoint pair after r[i] to count each split once
      for (int p = i + 1; p < size; ++p) {
        if (p == j) continue;
        for (int q = p + 1; q < size; ++q) {
          if (q == j) continue;
          b.side_a = {r[i], r[j]};
          b.side_b = {r[p], r[q]};
          b.core = members_of(rest - VertexSet{r[i], r[j], r[p], r[q]});
          if (auto m = try_blocks(g, index, delta, b)) return m;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<GammaMatch> match_index(const Graph& g, int index, int delta) {
  const int n = g.order();
  const int blocks = block_size(index, delta);
  const int l = n - blocks;
  if (l < min_independent_size(index, delta)) return std::nullopt;
  const int max_l_degree = index >= 4 ? delta + 1 : delta;
  VertexSet forced;
  VertexSet optional_set;
  for (Vertex v = 0; v < n; ++v) {
    (g.degree(v) > max_l_degree ? forced : optional_set).insert(v);
  }
  if (forced.size() > blocks) return std::nullopt;
  const auto pool = optional_set.members();
  for (VertexSet pick : detail::combinations(static_cast<int>(pool.size()), blocks - forced.size())) {
    VertexSet rest = forced;
    for (Vertex i : pick) rest.insert(pool[i]);
    const VertexSet l_set = g.vertices() - rest;
    int inner = 0;
    for (Vertex x : l_set) inner += (g.neighbors(x) & l_set).size();
    if (inner != (index == 4 ? 2 : 0)) continue;
    if (auto m = match_split(g, index, delta, rest)) return m;
  }
  return std::nullopt;
}

}  // namespace

RecognitionResult recognize_exceptional(const Graph& g, const Budget& budget) {
  RecognitionResult result;
  if (g.order() > budget.recognizer_max_vertices) {
    result.status = RecognitionStatus::cap_exceeded;
    return result;
  }
  if (g.order() == 0) return result;
  const int delta = min_degree(g);
  if (delta < 3) return result;
  for (int index = 1; index <= 5; ++index) {
    if (auto m = match_index(g, index, delta)) {
      result.matches.push_back(index);
      if (!result.member) {
        result.member = true;
        result.index = index;
        result.witness = std::move(m);
      }
    }
  }
  return result;
}

ExclusionCheck exclude_exceptional(const Graph& g, const Budget& budget) {
  const auto profile = degree_profile(g);
  const int delta = profile.min_degree;
  if (delta < 3) return {true, Exclusion::low_degree, std::nullopt};
  if (profile.regular) return {true, Exclusion::regular, std::nullopt};
  const int c = max_common_neighbors(g).value;
  if (c <= delta - 2 || (delta >= 4 && c <= delta - 1)) return {true, Exclusion::common_neighbors, std::nullopt};
  const auto rec = recognize_exceptional(g, budget);
  if (rec.status == RecognitionStatus::cap_exceeded) return {false, Exclusion::undecided, std::nullopt};
  if (rec.member) return {false, Exclusion::member, rec.index};
  return {true, Exclusion::recognizer, std::nullopt};
}

std::string to_string(Exclusion reason) {
  switch (reason) {
    case Exclusion::low_degree: return "minimum degree below 3";
    case Exclusion::regular: return "regular graph";
    case Exclusion::common_neighbors: return "common-neighbor bound";
    case Exclusion::recognizer: return "exact recognizer";
    case Exclusion::member: return "member";
    case Exclusion::undecided: return "recognizer cap exceeded";
  }
  return "";
}

// Standard networks.

Graph hypercube(int dimension) {
  if (dimension < 0 || (1 << std::min(dimension, 7)) > kMaxVertices) throw InvalidArgument("hypercube dimension out of range");
  const int n = 1 << dimension;
  EdgeSet edges;
  for (Vertex v = 0; v < n; ++v) {
    for (int bit = 0; bit < dimension; ++bit) {
      const Vertex w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return from_edge_set(n, std::move(edges));
}

Graph complete_graph(int n) { return complement(edgeless(n)); }

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("part sizes must be non-negative");
  return join(edgeless(a), edgeless(b));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  EdgeSet edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return from_edge_set(n, std::move(edges));
}

Graph petersen_graph() {
  // outer 5-cycle 0..4, spokes i - i+5, inner pentagram on 5..9
  EdgeSet edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return from_edge_set(10, std::move(edges));
}

Graph circulant_graph(int n, const std::vector<int>& connections) {
  if (n < 1) throw InvalidArgument("circulant needs at least one vertex");
  EdgeSet edges;
  for (int c : connections) {
    if (c <= 0 || c >= n) throw InvalidArgument("circulant connection " + std::to_string(c) + " outside 1..n-1");
    for (Vertex v = 0; v < n; ++v) {
      const Vertex w = (v + c) % n;
      if (w != v) edges.emplace_back(v, w);
    }
  }
  return from_edge_set(n, std::move(edges));
}

Graph prism_graph(int n) {
  const Graph c = cycle_graph(n);
  std::vector<Vertex> matching(n);
  std::iota(matching.begin(), matching.end(), 0);
  return star_1(c, c, matching);
}

Graph random_t_connected(int n, int t, std::uint64_t seed, int attempts) {
  if (n < 1 || n > kMaxVertices) throw InvalidArgument("random graph order out of range");
  if (t < 0 || t >= n) throw InvalidArgument("a t-connected graph on n vertices needs 0 <= t < n");
  std::mt19937_64 rng(seed);
  // Start near the sparsest density that can reach min degree t and densify on failures.
  int percent = std::clamp(100 * (t + 1) / std::max(1, n - 1), 10, 95);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    EdgeSet edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
      }
    }
    Graph g = from_edge_set(n, std::move(edges));
    if (min_degree(g) >= t && vertex_connectivity(g).kappa >= t) return g;
    if (attempt % 10 == 9) percent = std::min(100, percent + 5);
  }
  throw CapExceeded("no " + std::to_string(t) + "-connected graph found in " + std::to_string(attempts) + " attempts");
}

}  // namespace diagnoscope
