#include <doctest.h>

#include <random>

#include "diagnoscope/error.hpp"
#include "diagnoscope/families.hpp"
#include "diagnoscope/syndrome.hpp"

using namespace diagnoscope;

namespace {

const DiagModel kModels[] = {DiagModel::PMC, DiagModel::MMstar};

Graph random_graph(int n, int percent, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng() % 100) < percent) pairs.emplace_back(u, v);
    }
  }
  return build_graph(n, pairs);
}

std::vector<VertexSet> sets_up_to(int n, int t) {
  std::vector<VertexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (VertexSet(m).size() <= t) out.push_back(VertexSet(m));
  }
  return out;
}

bool set_order(VertexSet a, VertexSet b) { return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b); }

/// Literal union of decode over every syndrome the exhaustive adversary can produce.
std::vector<VertexSet> literal_reachable(const Graph& g, VertexSet faults, int t, DiagModel model) {
  std::vector<VertexSet> out;
  for_each_syndrome(g, faults, model, AdversaryPolicy::exhaustive(), Budget{}, [&](const Syndrome& s) {
    for (VertexSet c : decode(g, s, t)) {
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return true;
  });
  std::sort(out.begin(), out.end(), set_order);
  return out;
}

}  // namespace

TEST_CASE("fault-free systems produce the all-zero syndrome") {
  for (DiagModel m : kModels) {
    for (auto policy : {AdversaryPolicy::zeros(), AdversaryPolicy::ones(), AdversaryPolicy::random(5)}) {
      const Syndrome s = generate_syndrome(hypercube(3), VertexSet{}, m, policy);
      CHECK(model_of(s) == m);
      if (m == DiagModel::PMC) {
        const auto& tests = std::get<PmcSyndrome>(s).tests;
        CHECK(tests.size() == 24);
        CHECK(std::none_of(tests.begin(), tests.end(), [](const PmcTest& x) { return x.outcome; }));
      } else {
        const auto& tests = std::get<MmSyndrome>(s).tests;
        CHECK(tests.size() == 24);
        CHECK(std::none_of(tests.begin(), tests.end(), [](const MmTest& x) { return x.outcome; }));
      }
    }
  }
}

TEST_CASE("PMC semantics on a path") {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  const auto s = std::get<PmcSyndrome>(generate_syndrome(p3, VertexSet{1}, DiagModel::PMC, AdversaryPolicy::zeros()));
  const std::vector<PmcTest> expected{{0, 1, true}, {1, 0, false}, {1, 2, false}, {2, 1, true}};
  CHECK(s.tests == expected);
}

TEST_CASE("MM* semantics on a star") {
  const Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto s = std::get<MmSyndrome>(generate_syndrome(star, VertexSet{0}, DiagModel::MMstar, AdversaryPolicy::ones()));
  CHECK(s.tests.size() == 3);
  for (const MmTest& t : s.tests) {
    CHECK(t.comparator == 0);
    CHECK(t.outcome);
  }
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  const auto fault_free_comparator =
      std::get<MmSyndrome>(generate_syndrome(p3, VertexSet{2}, DiagModel::MMstar, AdversaryPolicy::zeros()));
  CHECK(fault_free_comparator.tests == std::vector<MmTest>{{1, 0, 2, true}});
}

TEST_CASE("decode examples") {
  const Graph q3 = hypercube(3);
  const Syndrome zero = generate_syndrome(q3, VertexSet{}, DiagModel::PMC, AdversaryPolicy::zeros());
  CHECK(decode(q3, zero, 3) == std::vector<VertexSet>{VertexSet{}});

  for (Vertex v = 0; v < 8; ++v) {
    const Syndrome s = generate_syndrome(q3, VertexSet::single(v), DiagModel::PMC, AdversaryPolicy::random(v + 100));
    CHECK(decode(q3, s, 3) == std::vector<VertexSet>{VertexSet::single(v)});
  }

  const Graph two = edgeless(2);
  const Syndrome empty = generate_syndrome(two, VertexSet{1}, DiagModel::PMC, AdversaryPolicy::random(1));
  CHECK(decode(two, empty, 1) == std::vector<VertexSet>{VertexSet{}, VertexSet{0}, VertexSet{1}});
}

TEST_CASE("decoding finds the injected fault set") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 8), 50, rng);
    const VertexSet faults(rng() & VertexSet::range(g.order()).bits() & rng());
    for (DiagModel m : kModels) {
      const Syndrome s = generate_syndrome(g, faults, m, AdversaryPolicy::random(rng()));
      CHECK(consistent(g, s, faults));
      const auto candidates = decode(g, s, faults.size());
      CHECK(std::find(candidates.begin(), candidates.end(), faults) != candidates.end());
      CHECK(std::is_sorted(candidates.begin(), candidates.end(), set_order));
    }
  }
}

TEST_CASE("unique decoding under every adversary matches t-diagnosability") {
  std::mt19937_64 rng(83);
  std::vector<Graph> graphs{complete_graph(4), cycle_graph(5), complete_bipartite(2, 3), hypercube(3)};
  for (int i = 0; i < 6; ++i) graphs.push_back(random_graph(4 + static_cast<int>(rng() % 3), 55, rng));
  Budget budget;
  budget.exhaustive_max_bits = 14;
  for (const Graph& g : graphs) {
    for (DiagModel m : kModels) {
      for (int t = 1; t <= 2; ++t) {
        bool all_unique = true;
        bool literal = true;
        for (VertexSet faults : sets_up_to(g.order(), t)) {
          if (adversary_bits(g, faults, m) > budget.exhaustive_max_bits) {
            literal = false;
            break;
          }
          for_each_syndrome(g, faults, m, AdversaryPolicy::exhaustive(), budget, [&](const Syndrome& s) {
            if (decode(g, s, t).size() != 1) all_unique = false;
            return all_unique;
          });
          if (!all_unique) break;
        }
        if (!literal) continue;
        CHECK(all_unique == is_t_diagnosable(g, t, m).diagnosable);
      }
    }
  }
}

TEST_CASE("symbolic reachability equals the literal union over every syndrome") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 4), 50, rng);
    const VertexSet faults(rng() & VertexSet::range(g.order()).bits() & rng());
    for (DiagModel m : kModels) {
      if (adversary_bits(g, faults, m) > 12) continue;
      for (int t = 0; t <= 3; ++t) CHECK(reachable_diagnoses(g, faults, t, m) == literal_reachable(g, faults, t, m));
    }
  }
}

TEST_CASE("indistinguishable witnesses yield a shared syndrome") {
  const std::vector<Graph> graphs{hypercube(3), petersen_graph(), make_gamma(canonical_gamma_spec(1, 3, 4)),
                                  complete_bipartite(3, 4)};
  for (const Graph& g : graphs) {
    for (DiagModel m : kModels) {
      const auto result = is_t_diagnosable(g, diagnosability(g, m) + 1, m);
      REQUIRE(result.witness.has_value());
      const Syndrome s = confusing_syndrome(g, result.witness->f1, result.witness->f2, m);
      CHECK(consistent(g, s, result.witness->f1));
      CHECK(consistent(g, s, result.witness->f2));
    }
  }
}

TEST_CASE("policies and caps") {
  const Graph q3 = hypercube(3);
  CHECK_THROWS_AS(generate_syndrome(q3, VertexSet{0}, DiagModel::PMC, AdversaryPolicy::exhaustive()), InvalidArgument);
  CHECK_THROWS_AS(generate_syndrome(q3, VertexSet{9}, DiagModel::PMC, AdversaryPolicy::zeros()), InvalidArgument);
  CHECK(adversary_bits(q3, VertexSet{0, 1}, DiagModel::PMC) == 6);
  CHECK(adversary_bits(q3, VertexSet{0, 1}, DiagModel::MMstar) == 6);
  Budget tight;
  tight.exhaustive_max_bits = 4;
  CHECK_THROWS_AS(for_each_syndrome(q3, VertexSet{0, 1}, DiagModel::PMC, AdversaryPolicy::exhaustive(), tight,
                                    [](const Syndrome&) { return true; }),
                  CapExceeded);
  int count = 0;
  for_each_syndrome(q3, VertexSet{0}, DiagModel::PMC, AdversaryPolicy::exhaustive(), Budget{}, [&](const Syndrome&) {
    ++count;
    return true;
  });
  CHECK(count == 8);
  const Syndrome a = generate_syndrome(q3, VertexSet{0, 5}, DiagModel::MMstar, AdversaryPolicy::random(3));
  const Syndrome b = generate_syndrome(q3, VertexSet{0, 5}, DiagModel::MMstar, AdversaryPolicy::random(3));
  CHECK(a == b);
}

TEST_CASE("syndrome text round-trips") {
  const Graph p = petersen_graph();
  for (DiagModel m : kModels) {
    const Syndrome s = generate_syndrome(p, VertexSet{1, 7}, m, AdversaryPolicy::random(9));
    const std::string text = to_text(s);
    CHECK(parse_syndrome(text, m) == s);
  }
  const std::string pmc = to_text(generate_syndrome(build_graph(2, {{0, 1}}), VertexSet{}, DiagModel::PMC,
                                                    AdversaryPolicy::zeros()));
  CHECK(pmc == "0 1 0\n1 0 0\n");
  try {
    parse_syndrome("0 1 0\n1 0 2\n", DiagModel::PMC);
    FAIL("expected an error");
  } catch (const FormatError& e) {
    CHECK(e.location() == 2);
  }
  CHECK_THROWS_AS(parse_syndrome("0 1 2 0\nx\n", DiagModel::MMstar), FormatError);
}

TEST_CASE("decode rejects a syndrome of the wrong shape") {
  const Syndrome s = generate_syndrome(hypercube(3), VertexSet{}, DiagModel::PMC, AdversaryPolicy::zeros());
  CHECK_THROWS_AS(decode(petersen_graph(), s, 1), InvalidArgument);
}
