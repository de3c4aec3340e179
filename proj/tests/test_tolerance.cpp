#include <doctest.h>

#include <random>

#include "diagnoscope/connectivity.hpp"
#include "diagnoscope/error.hpp"
#include "diagnoscope/families.hpp"
#include "diagnoscope/tolerance.hpp"
#include "oracles.hpp"

using namespace diagnoscope;

namespace {

const DiagModel kModels[] = {DiagModel::PMC, DiagModel::MMstar};

std::vector<Graph> small_graphs() {
  return {hypercube(3),
          complete_graph(5),
          complete_bipartite(3, 3),
          cycle_graph(6),
          prism_graph(4),
          build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}),
          join(complete_graph(2), edgeless(3))};
}

bool has_claim_row(const BoundReport& r, const std::string& claim, bool holds) {
  return std::any_of(r.conditions.begin(), r.conditions.end(),
                     [&](const ConditionRow& row) { return row.claim == claim && row.holds == holds; });
}

}  // namespace

TEST_CASE("edge_tolerable_diagnosability examples") {
  const auto q3 = edge_tolerable_diagnosability(hypercube(3), 1, DiagModel::PMC);
  CHECK(q3.value == 2);
  CHECK(q3.method == ToleranceMethod::brute_force);
  CHECK(q3.worst_scenario.size() == 1);
  CHECK(diagnosability(delete_edges(hypercube(3), q3.worst_scenario), DiagModel::PMC) == 2);

  const auto p = edge_tolerable_diagnosability(petersen_graph(), 1, DiagModel::MMstar);
  CHECK(p.value == 2);

  for (const Graph& g : {hypercube(3), petersen_graph(), complete_graph(5)}) {
    for (DiagModel m : kModels) CHECK(edge_tolerable_diagnosability(g, min_degree(g), m).value == 0);
  }
}

TEST_CASE("budgets above the minimum degree use the isolating argument") {
  const auto r = edge_tolerable_diagnosability(hypercube(3), 4, DiagModel::MMstar);
  CHECK(r.value == 0);
  CHECK(r.method == ToleranceMethod::theorem);
  CHECK(r.worst_scenario == incident_edges(hypercube(3), 0));
  CHECK_THROWS_AS(edge_tolerable_diagnosability(hypercube(3), -1, DiagModel::PMC), InvalidArgument);
}

TEST_CASE("the worst scenario is the lexicographically smallest minimizer") {
  for (const Graph& g : small_graphs()) {
    for (DiagModel m : kModels) {
      for (int h = 1; h <= std::min(2, min_degree(g)); ++h) {
        const auto r = edge_tolerable_diagnosability(g, h, m);
        REQUIRE(static_cast<int>(r.worst_scenario.size()) == std::min(h, g.size()));
        CHECK(diagnosability(delete_edges(g, r.worst_scenario), m) == r.value);
        // every scenario before it in lexicographic index order does strictly better
        const int m_edges = g.size();
        std::vector<int> pick(h);
        for (int i = 0; i < h; ++i) pick[i] = i;
        while (true) {
          EdgeSet s;
          for (int i : pick) s.push_back(g.edges()[i]);
          if (s == r.worst_scenario) break;
          CHECK(diagnosability(delete_edges(g, s), m) > r.value);
          int i = h - 1;
          while (i >= 0 && pick[i] == m_edges - h + i) --i;
          REQUIRE(i >= 0);
          ++pick[i];
          for (int j = i + 1; j < h; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
    }
  }
}

TEST_CASE("brute force agrees with the all-sizes oracle") {
  for (const Graph& g : {complete_graph(4), cycle_graph(5), prism_graph(3), complete_bipartite(2, 3),
                         build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})}) {
    for (DiagModel m : kModels) {
      for (int h = 0; h <= 2; ++h) CHECK(edge_tolerable_diagnosability(g, h, m).value == oracle::tolerance(g, h, m));
    }
  }
}

TEST_CASE("the definition form equals the minimum form") {
  for (const Graph& g : small_graphs()) {
    if (g.size() > 12) continue;
    for (DiagModel m : kModels) {
      for (int h = 0; h <= 2; ++h) {
        CHECK(edge_tolerable_diagnosability_by_definition(g, h, m) == edge_tolerable_diagnosability(g, h, m).value);
      }
    }
  }
}

TEST_CASE("scenarios of size exactly h suffice") {
  for (const Graph& g : small_graphs()) {
    if (g.size() > 12) continue;
    for (DiagModel m : kModels) {
      for (int h = 1; h <= 2; ++h) {
        int all_sizes = g.order();
        for (int size = 0; size <= h; ++size) {
          all_sizes = std::min(all_sizes, min_diagnosability_over_scenarios(g, size, m));
        }
        CHECK(all_sizes == min_diagnosability_over_scenarios(g, h, m));
      }
    }
  }
}

TEST_CASE("tolerance is monotone in h, bounded by delta - h and ordered by model") {
  for (const Graph& g : small_graphs()) {
    const int delta = min_degree(g);
    int previous[2] = {g.order(), g.order()};
    for (int h = 0; h <= delta + 1; ++h) {
      const int pmc = edge_tolerable_diagnosability(g, h, DiagModel::PMC).value;
      const int mm = edge_tolerable_diagnosability(g, h, DiagModel::MMstar).value;
      CHECK(mm <= pmc);
      CHECK(pmc <= previous[0]);
      CHECK(mm <= previous[1]);
      if (h <= delta && is_connected(g)) CHECK(pmc <= delta - h);
      previous[0] = pmc;
      previous[1] = mm;
    }
  }
}

TEST_CASE("results do not depend on the job count") {
  Budget many;
  many.jobs = 3;
  for (const Graph& g : {hypercube(3), petersen_graph(), complete_bipartite(3, 4)}) {
    for (DiagModel m : kModels) {
      for (int h = 0; h <= 2; ++h) {
        const auto a = edge_tolerable_diagnosability(g, h, m);
        const auto b = edge_tolerable_diagnosability(g, h, m, many);
        CHECK(a.value == b.value);
        CHECK(a.worst_scenario == b.worst_scenario);
      }
    }
  }
}

TEST_CASE("scenario cap") {
  Budget tight;
  tight.max_scenarios = 10;
  CHECK_THROWS_AS(edge_tolerable_diagnosability(hypercube(3), 2, DiagModel::PMC, tight), CapExceeded);
}

TEST_CASE("theoretical_bounds examples") {
  const auto petersen = theoretical_bounds(petersen_graph(), 1, DiagModel::PMC);
  REQUIRE(petersen.lower.has_value());
  REQUIRE(petersen.upper.has_value());
  CHECK(petersen.lower->value == 2);
  CHECK(petersen.upper->value == 2);
  CHECK(petersen.exact == 2);
  CHECK(has_claim_row(petersen, claim::kPmcLower, true));

  const Graph g1 = make_gamma(canonical_gamma_spec(1, 3, 4));
  const auto gamma = theoretical_bounds(g1, 0, DiagModel::MMstar);
  REQUIRE(gamma.upper.has_value());
  CHECK(gamma.upper->value == 3);
  CHECK_FALSE(gamma.lower.has_value());
  CHECK_FALSE(gamma.exact.has_value());
  CHECK(gamma.no_theorem_applies);
  CHECK(has_claim_row(gamma, claim::kMmExact, false));
  const bool family_row_fails = std::any_of(gamma.conditions.begin(), gamma.conditions.end(), [](const ConditionRow& r) {
    return r.claim == claim::kMmExact && r.condition.find("exceptional family") != std::string::npos && !r.holds;
  });
  CHECK(family_row_fails);

  const auto q4 = theoretical_bounds(hypercube(4), 1, DiagModel::MMstar);
  CHECK(q4.exact == 3);
  for (const auto& row : q4.conditions) {
    if (row.claim == claim::kMmExact) CHECK(row.holds);
  }
}

TEST_CASE("large budgets report zero") {
  const auto r = theoretical_bounds(hypercube(3), 5, DiagModel::PMC);
  CHECK(r.exact == 0);
  CHECK(r.lower->by == claim::kLargeBudget);
}

TEST_CASE("MM* budgets beyond the lower-bound range fall back to brute force") {
  const auto r = theoretical_bounds(hypercube(4), 2, DiagModel::MMstar);
  CHECK_FALSE(r.exact.has_value());
  CHECK(r.no_theorem_applies);
  CHECK(r.upper->value == 2);
}

TEST_CASE("exact bounds agree with brute force") {
  for (const Graph& g : {hypercube(3), hypercube(4), petersen_graph(), complete_graph(5), complete_bipartite(3, 3),
                         complete_bipartite(4, 4), prism_graph(5), circulant_graph(8, {1, 2}),
                         make_gamma(canonical_gamma_spec(1, 3, 4)), make_gamma(canonical_gamma_spec(5, 3, 5))}) {
    for (DiagModel m : kModels) {
      for (int h = 0; h <= std::min(3, min_degree(g)); ++h) {
        const auto bounds = theoretical_bounds(g, h, m);
        const int value = edge_tolerable_diagnosability(g, h, m).value;
        if (bounds.exact) CHECK(*bounds.exact == value);
        if (bounds.lower) CHECK(bounds.lower->value <= value);
        if (bounds.upper) CHECK(value <= bounds.upper->value);
      }
    }
  }
}
