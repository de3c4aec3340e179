#include "diagnoscope/tolerance.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "diagnoscope/connectivity.hpp"
#include "diagnoscope/error.hpp"
#include "diagnoscope/families.hpp"
#include "parallel.hpp"

namespace diagnoscope {

std::string_view to_string(ToleranceMethod method) {
  return method == ToleranceMethod::brute_force ? "brute_force" : "theorem";
}

namespace {

long long binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * (m - k + i) / i;
    if (out > std::numeric_limits<int>::max()) return std::numeric_limits<long long>::max();
  }
  return out;
}

/// All k-combinations of 0..m-1 in lexicographic order, flattened k entries per combination.
std::vector<int> edge_combinations(int m, int k, const Budget& budget) {
  const long long count = binomial(m, k);
  if (count > budget.max_scenarios) {
    throw CapExceeded(std::to_string(count) + " edge-fault scenarios exceed the cap of " +
                      std::to_string(budget.max_scenarios));
  }
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(count) * k);
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    flat.insert(flat.end(), pick.begin(), pick.end());
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return flat;
}

EdgeSet scenario_edges(const Graph& g, const std::vector<int>& flat, std::size_t index, int k) {
  EdgeSet edges;
  edges.reserve(k);
  for (int j = 0; j < k; ++j) edges.push_back(g.edges()[flat[index * k + j]]);
  return edges;
}

struct ScanResult {
  int value = std::numeric_limits<int>::max();
  std::size_t index = 0;
  EdgeSet scenario;
};

ScanResult scan_scenarios(const Graph& g, int size, DiagModel model, const Budget& budget) {
  check_vertex_cap(g, budget);
  const auto flat = edge_combinations(g.size(), size, budget);
  const std::size_t count = size == 0 ? 1 : flat.size() / size;
  Budget inner = budget;
  inner.jobs = 1;

  std::vector<ScanResult> found(std::max(1U, budget.jobs));
  detail::for_slices(count, budget.jobs, [&](std::size_t lo, std::size_t hi, std::size_t worker) {
    ScanResult& best = found[worker];
    for (std::size_t s = lo; s < hi && best.value > 0; ++s) {
      const Graph reduced = delete_edges(g, scenario_edges(g, flat, s, size));
      const int value = diagnosability_up_to(reduced, model, best.value, inner);
      if (value < best.value) {
        best.value = value;
        best.index = s;
      }
    }
  });
  ScanResult best;
  for (const ScanResult& r : found) {
    if (r.value < best.value || (r.value == best.value && r.index < best.index)) best = r;
  }
  best.scenario = scenario_edges(g, flat, best.index, size);
  return best;
}

}  // namespace

ToleranceResult edge_tolerable_diagnosability(const Graph& g, int h, DiagModel model, const Budget& budget) {
  if (h < 0) throw InvalidArgument("edge-fault budget must be non-negative");
  if (g.order() == 0) throw InvalidArgument("diagnosability of the null graph");
  ToleranceResult result;
  result.h = h;
  result.model = model;
  const int delta = min_degree(g);
  if (h > delta) {
    Vertex weakest = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == delta) {
        weakest = v;
        break;
      }
    }
    result.value = 0;
    result.worst_scenario = incident_edges(g, weakest);
    result.method = ToleranceMethod::theorem;
    return result;
  }
  const ScanResult scan = scan_scenarios(g, std::min(h, g.size()), model, budget);
  result.value = scan.value;
  result.worst_scenario = scan.scenario;
  return result;
}

int min_diagnosability_over_scenarios(const Graph& g, int size, DiagModel model, const Budget& budget) {
  if (size < 0 || size > g.size()) throw InvalidArgument("scenario size outside 0..|E|");
  return scan_scenarios(g, size, model, budget).value;
}

int edge_tolerable_diagnosability_by_definition(const Graph& g, int h, DiagModel model, const Budget& budget) {
  if (h < 0) throw InvalidArgument("edge-fault budget must be non-negative");
  check_vertex_cap(g, budget);
  Budget inner = budget;
  inner.jobs = 1;
  std::vector<Graph> scenarios;
  for (int size = 0; size <= std::min(h, g.size()); ++size) {
    const auto flat = edge_combinations(g.size(), size, budget);
    const std::size_t count = size == 0 ? 1 : flat.size() / size;
    for (std::size_t s = 0; s < count; ++s) scenarios.push_back(delete_edges(g, scenario_edges(g, flat, s, size)));
  }
  // Every scenario graph is (diagnosability_cap(g) + 1)-undiagnosable, so the loop terminates.
  for (int t = 1;; ++t) {
    for (const Graph& reduced : scenarios) {
      if (!is_t_diagnosable(reduced, t, model, inner).diagnosable) return t - 1;
    }
  }
}

// Bound calculator.

namespace {

std::string text(const auto&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

}  // namespace

BoundReport theoretical_bounds(const Graph& g, int h, DiagModel model, const Budget& budget) {
  if (h < 0) throw InvalidArgument("edge-fault budget must be non-negative");
  BoundReport report;
  const int n = g.order();
  const auto conn = vertex_connectivity(g);
  const int delta = conn.delta;
  const int kappa = conn.kappa;
  const bool connected = is_connected(g);
  auto row = [&](const char* claim, std::string condition, bool holds) {
    report.conditions.push_back({claim, std::move(condition), holds});
    return holds;
  };
  auto offer_lower = [&](int value, const char* by) {
    if (!report.lower || value > report.lower->value) report.lower = Bound{value, by};
  };
  auto offer_upper = [&](int value, const char* by) {
    if (!report.upper || value < report.upper->value) report.upper = Bound{value, by};
  };

  // h > δ: a vertex can be cut off from every neighbor.
  if (row(claim::kLargeBudget, text("h = ", h, " > delta = ", delta), h > delta)) {
    offer_lower(0, claim::kLargeBudget);
    offer_upper(0, claim::kLargeBudget);
  }

  {
    const bool c1 = row(claim::kMinDegreeUpper, "connected", connected);
    const bool c2 = row(claim::kMinDegreeUpper, text("0 <= h = ", h, " <= delta = ", delta), h <= delta);
    if (c1 && c2) {
      offer_upper(delta - h, claim::kMinDegreeUpper);
      if (delta == h) offer_lower(0, claim::kMinDegreeUpper);
    }
  }

  bool lower_claim = false;
  if (model == DiagModel::PMC) {
    const int t = std::min(kappa, h + (n - 1) / 2);
    const bool c1 = row(claim::kPmcLower, text("kappa = ", kappa, " >= t = ", t), t <= kappa);
    const bool c2 = row(claim::kPmcLower, text("0 <= h = ", h, " <= t = ", t), h <= t);
    const bool c3 = row(claim::kPmcLower, text("|V| = ", n, " >= 2(t-h)+1 = ", 2 * (t - h) + 1), n >= 2 * (t - h) + 1);
    if (c1 && c2 && c3) {
      offer_lower(t - h, claim::kPmcLower);
      lower_claim = true;
    }

    const bool e1 = row(claim::kPmcExact, text("maximally connected (kappa = ", kappa, ", delta = ", delta, ")"),
                        conn.maximally_connected);
    const bool e2 = row(claim::kPmcExact, text("|V| = ", n, " >= 2(delta-h)+1 = ", 2 * (delta - h) + 1),
                        n >= 2 * (delta - h) + 1);
    const bool e3 = row(claim::kPmcExact, text("0 <= h = ", h, " <= delta = ", delta), h <= delta);
    if (e1 && e2 && e3) {
      offer_lower(delta - h, claim::kPmcExact);
      offer_upper(delta - h, claim::kPmcExact);
      lower_claim = true;
    }
  } else {
    int t = -1;
    for (int candidate = kappa; candidate >= 3; --candidate) {
      if (n >= 2 * (candidate - h) + 3 && h <= (candidate - 1) / 2) {
        t = candidate;
        break;
      }
    }
    const bool usable = t >= 3;
    if (usable) {
      row(claim::kMmLower, text("3 <= t = ", t, " <= kappa = ", kappa), true);
      row(claim::kMmLower, text("|V| = ", n, " >= 2(t-h)+3 = ", 2 * (t - h) + 3), true);
      row(claim::kMmLower, text("0 <= h = ", h, " <= floor((t-1)/2) = ", (t - 1) / 2), true);
    } else {
      row(claim::kMmLower,
          text("some t in 3..kappa = ", kappa, " has |V| = ", n, " >= 2(t-h)+3 and h = ", h, " <= floor((t-1)/2)"),
          false);
    }

    const auto exclusion = exclude_exceptional(g, budget);
    std::string family_row = "not in the exceptional family (" + to_string(exclusion.reason);
    if (exclusion.member_index) family_row += text(", matches index ", *exclusion.member_index);
    family_row += ")";
    const bool c4 = row(claim::kMmLower, family_row, exclusion.excluded);
    if (usable && c4) {
      offer_lower(t - h, claim::kMmLower);
      lower_claim = true;
    }

    const bool e1 = row(claim::kMmExact, text("maximally connected (kappa = ", kappa, ", delta = ", delta, ")"),
                        conn.maximally_connected);
    const bool e2 = row(claim::kMmExact, text("delta = ", delta, " >= 3"), delta >= 3);
    const bool e3 = row(claim::kMmExact, text("|V| = ", n, " >= 2(delta-h)+3 = ", 2 * (delta - h) + 3),
                        n >= 2 * (delta - h) + 3);
    const bool e4 = row(claim::kMmExact, text("0 <= h = ", h, " <= floor((delta-1)/2) = ", (delta - 1) / 2),
                        h <= (delta - 1) / 2);
    const bool e5 = row(claim::kMmExact, family_row, exclusion.excluded);
    if (e1 && e2 && e3 && e4 && e5) {
      offer_lower(delta - h, claim::kMmExact);
      offer_upper(delta - h, claim::kMmExact);
      lower_claim = true;
    }
  }

  if (report.lower && report.upper && report.lower->value == report.upper->value) report.exact = report.lower->value;
  report.no_theorem_applies = !lower_claim && !report.exact;
  return report;
}

}  // namespace diagnoscope
