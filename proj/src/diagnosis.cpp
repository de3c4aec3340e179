#include "diagnoscope/diagnosis.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <string>

#include "diagnoscope/error.hpp"
#include "parallel.hpp"
#include "subsets.hpp"

namespace diagnoscope {

void check_vertex_cap(const Graph& g, const Budget& budget) {
  const int cap = std::min(budget.max_vertices, kMaxVertices);
  if (g.order() > cap) {
    throw CapExceeded("graph has " + std::to_string(g.order()) + " vertices, cap is " + std::to_string(cap));
  }
}

std::string_view to_string(DiagModel model) { return model == DiagModel::PMC ? "pmc" : "mm"; }

std::optional<DiagModel> parse_model(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "pmc") return DiagModel::PMC;
  if (lower == "mm" || lower == "mm*" || lower == "mmstar") return DiagModel::MMstar;
  return std::nullopt;
}

namespace {

// The predicates below work on raw adjacency so the enumeration loop avoids the Graph accessors'
// bounds bookkeeping.

bool pmc_ok(const std::vector<VertexSet>& adj, VertexSet all, VertexSet f1, VertexSet f2) {
  const VertexSet outside = all - (f1 | f2);
  for (Vertex d : f1 ^ f2) {
    if (adj[d].intersects(outside)) return true;
  }
  return false;
}

bool two_neighbors_in(const std::vector<VertexSet>& adj, VertexSet part, VertexSet outside) {
  VertexSet once;
  VertexSet twice;
  for (Vertex a : part) {
    twice |= once & adj[a];
    once |= adj[a];
  }
  return twice.intersects(outside);
}

int mm_condition(const std::vector<VertexSet>& adj, VertexSet all, VertexSet f1, VertexSet f2) {
  const VertexSet outside = all - (f1 | f2);
  VertexSet touched;
  for (Vertex d : f1 ^ f2) touched |= adj[d];
  for (Vertex u : touched & outside) {
    if (adj[u].intersects(outside)) return 1;
  }
  if (two_neighbors_in(adj, f1 - f2, outside)) return 2;
  if (two_neighbors_in(adj, f2 - f1, outside)) return 3;
  return 0;
}

std::vector<VertexSet> adjacency_of(const Graph& g) {
  std::vector<VertexSet> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

void check_distinct(VertexSet f1, VertexSet f2) {
  if (f1 == f2) throw InvalidArgument("distinguishability is undefined for identical fault sets");
}

struct Failure {
  std::size_t later = std::numeric_limits<std::size_t>::max();
  std::size_t earlier = 0;
};

/// First failing pair whose later member has exactly `level` vertices; later == max when none.
Failure first_failure_at_level(const std::vector<VertexSet>& adj, int level, DiagModel model,
                               const std::vector<VertexSet>& ordered, unsigned jobs) {
  const int n = static_cast<int>(adj.size());
  const VertexSet all = VertexSet::range(n);
  std::size_t begin = 0;
  while (begin < ordered.size() && ordered[begin].size() < level) ++begin;
  std::size_t end = begin;
  while (end < ordered.size() && ordered[end].size() == level) ++end;

  std::atomic<std::size_t> bound{std::numeric_limits<std::size_t>::max()};
  std::vector<Failure> found(std::max(1U, jobs));
  detail::for_slices(end - begin, jobs, [&](std::size_t lo, std::size_t hi, std::size_t worker) {
    for (std::size_t j = begin + lo; j < begin + hi; ++j) {
      if (j > bound.load(std::memory_order_relaxed)) return;
      const VertexSet later = ordered[j];
      for (std::size_t i = 0; i < j; ++i) {
        const VertexSet earlier = ordered[i];
        const bool ok = model == DiagModel::PMC ? pmc_ok(adj, all, earlier, later)
                                                : mm_condition(adj, all, earlier, later) != 0;
        if (!ok) {
          found[worker] = {j, i};
          std::size_t current = bound.load();
          while (j < current && !bound.compare_exchange_weak(current, j)) {
          }
          return;
        }
      }
    }
  });
  Failure best;
  for (const Failure& f : found) {
    if (f.later < best.later) best = f;
  }
  return best;
}

}  // namespace

bool distinguishable_pmc(const Graph& g, VertexSet f1, VertexSet f2) {
  check_distinct(f1, f2);
  return pmc_ok(adjacency_of(g), g.vertices(), f1, f2);
}

MmDistinction distinguishable_mm(const Graph& g, VertexSet f1, VertexSet f2) {
  check_distinct(f1, f2);
  const int condition = mm_condition(adjacency_of(g), g.vertices(), f1, f2);
  return {condition != 0, condition};
}

bool distinguishable(const Graph& g, VertexSet f1, VertexSet f2, DiagModel model) {
  return model == DiagModel::PMC ? distinguishable_pmc(g, f1, f2) : distinguishable_mm(g, f1, f2).distinguishable;
}

DiagnosableResult is_t_diagnosable(const Graph& g, int t, DiagModel model, const Budget& budget) {
  if (t < 0) throw InvalidArgument("t must be non-negative");
  check_vertex_cap(g, budget);
  const int n = g.order();
  // Sets larger than n do not exist; pairs are exhausted once t reaches n.
  const int top = std::min(t, n);
  const auto adj = adjacency_of(g);
  const auto ordered = detail::subsets_up_to(n, top);
  for (int level = 1; level <= top; ++level) {
    const Failure f = first_failure_at_level(adj, level, model, ordered, budget.jobs);
    if (f.later != std::numeric_limits<std::size_t>::max()) {
      return {false, IndistinguishableWitness{ordered[f.earlier], ordered[f.later], model}};
    }
  }
  return {};
}

int diagnosability_cap(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("diagnosability of the null graph");
  return std::min(min_degree(g), (g.order() - 1) / 2);
}

int diagnosability(const Graph& g, DiagModel model, const Budget& budget) {
  return diagnosability_up_to(g, model, std::numeric_limits<int>::max(), budget);
}

int diagnosability_up_to(const Graph& g, DiagModel model, int limit, const Budget& budget) {
  const int cap = std::min(diagnosability_cap(g), std::max(limit, 0));
  check_vertex_cap(g, budget);
  const auto adj = adjacency_of(g);
  const auto ordered = detail::subsets_up_to(g.order(), cap);
  for (int level = 1; level <= cap; ++level) {
    const Failure f = first_failure_at_level(adj, level, model, ordered, budget.jobs);
    if (f.later != std::numeric_limits<std::size_t>::max()) return level - 1;
  }
  return cap;  // either t(G) == cap or t(G) >= limit == cap
}

}  // namespace diagnoscope
