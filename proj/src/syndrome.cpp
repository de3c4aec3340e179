#include "diagnoscope/syndrome.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "diagnoscope/error.hpp"
#include "subsets.hpp"

namespace diagnoscope {

DiagModel model_of(const Syndrome& s) {
  return std::holds_alternative<PmcSyndrome>(s) ? DiagModel::PMC : DiagModel::MMstar;
}

namespace {

// Faulty-vertex outcomes in layout order, drawn from the policy.
class OutcomeSource {
public:
  explicit OutcomeSource(AdversaryPolicy policy) : policy_(policy), rng_(policy.seed) {}
  bool next() {
    switch (policy_.kind) {
      case AdversaryPolicy::Kind::all_one: return true;
      case AdversaryPolicy::Kind::seeded_random: return (rng_() >> 17) & 1U;
      default: return false;
    }
  }

private:
  AdversaryPolicy policy_;
  std::mt19937_64 rng_;
};

PmcSyndrome pmc_syndrome(const Graph& g, VertexSet truth_for_free, VertexSet faulty, OutcomeSource& source) {
  PmcSyndrome s;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      const bool outcome = faulty.contains(u) ? source.next() : truth_for_free.contains(v);
      s.tests.push_back({u, v, outcome});
    }
  }
  return s;
}

MmSyndrome mm_syndrome(const Graph& g, VertexSet truth_for_free, VertexSet faulty, OutcomeSource& source) {
  MmSyndrome s;
  for (Vertex w = 0; w < g.order(); ++w) {
    const auto nbrs = g.neighbors(w).members();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const bool truth = truth_for_free.contains(nbrs[i]) || truth_for_free.contains(nbrs[j]);
        const bool outcome = faulty.contains(w) ? source.next() : truth;
        s.tests.push_back({w, nbrs[i], nbrs[j], outcome});
      }
    }
  }
  return s;
}

void check_faults(const Graph& g, VertexSet faults) {
  if (!faults.subset_of(g.vertices())) throw InvalidArgument("fault set names a vertex outside the graph");
}

/// Consistency checks against one syndrome in bitset form.
class Explainer {
public:
  Explainer(const Graph& g, const Syndrome& s) : n_(g.order()) {
    if (const auto* p = std::get_if<PmcSyndrome>(&s)) {
      reported_.assign(n_, VertexSet{});
      std::size_t k = 0;
      for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : g.neighbors(u)) {
          if (k >= p->tests.size() || p->tests[k].tester != u || p->tests[k].tested != v) shape_error();
          if (p->tests[k].outcome) reported_[u].insert(v);
          ++k;
        }
      }
      if (k != p->tests.size()) shape_error();
      adjacency_.resize(n_);
      for (Vertex u = 0; u < n_; ++u) adjacency_[u] = g.neighbors(u);
      pmc_ = true;
    } else {
      const auto& m = std::get<MmSyndrome>(s);
      zero_cover_.assign(n_, VertexSet{});
      disagreements_.assign(n_, {});
      std::size_t k = 0;
      for (Vertex w = 0; w < n_; ++w) {
        const auto nbrs = g.neighbors(w).members();
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
          for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (k >= m.tests.size() || m.tests[k].comparator != w || m.tests[k].u != nbrs[i] || m.tests[k].v != nbrs[j]) {
              shape_error();
            }
            const VertexSet pair{nbrs[i], nbrs[j]};
            if (m.tests[k].outcome) disagreements_[w].push_back(pair);
            else zero_cover_[w] |= pair;
            ++k;
          }
        }
      }
      if (k != m.tests.size()) shape_error();
    }
  }

  bool explains(VertexSet f) const {
    const VertexSet trusted = VertexSet::range(n_) - f;
    if (pmc_) {
      for (Vertex u : trusted) {
        if (reported_[u] != (adjacency_[u] & f)) return false;
      }
      return true;
    }
    for (Vertex w : trusted) {
      if (zero_cover_[w].intersects(f)) return false;
      for (VertexSet pair : disagreements_[w]) {
        if (!pair.intersects(f)) return false;
      }
    }
    return true;
  }

private:
  [[noreturn]] static void shape_error() { throw InvalidArgument("syndrome does not match the graph's test layout"); }

  int n_;
  bool pmc_ = false;
  std::vector<VertexSet> reported_;
  std::vector<VertexSet> adjacency_;
  std::vector<VertexSet> zero_cover_;
  std::vector<std::vector<VertexSet>> disagreements_;
};

}  // namespace

int adversary_bits(const Graph& g, VertexSet faults, DiagModel model) {
  int bits = 0;
  for (Vertex u : faults & g.vertices()) {
    const int d = g.degree(u);
    bits += model == DiagModel::PMC ? d : d * (d - 1) / 2;
  }
  return bits;
}

Syndrome generate_syndrome(const Graph& g, VertexSet faults, DiagModel model, AdversaryPolicy policy) {
  check_faults(g, faults);
  if (policy.kind == AdversaryPolicy::Kind::exhaustive) {
    throw InvalidArgument("the exhaustive policy yields a stream; use for_each_syndrome");
  }
  OutcomeSource source(policy);
  if (model == DiagModel::PMC) return pmc_syndrome(g, faults, faults, source);
  return mm_syndrome(g, faults, faults, source);
}

void for_each_syndrome(const Graph& g, VertexSet faults, DiagModel model, AdversaryPolicy policy,
                       const Budget& budget, const std::function<bool(const Syndrome&)>& visit) {
  if (policy.kind != AdversaryPolicy::Kind::exhaustive) {
    visit(generate_syndrome(g, faults, model, policy));
    return;
  }
  check_faults(g, faults);
  const int bits = adversary_bits(g, faults, model);
  if (bits > budget.exhaustive_max_bits || bits > 62) {
    throw CapExceeded("exhaustive adversary needs 2^" + std::to_string(bits) + " syndromes, cap is 2^" +
                      std::to_string(budget.exhaustive_max_bits));
  }
  Syndrome s = generate_syndrome(g, faults, model, AdversaryPolicy::zeros());
  std::vector<std::size_t> free_slots;
  std::visit(
      [&](auto& syn) {
        for (std::size_t k = 0; k < syn.tests.size(); ++k) {
          const auto& test = syn.tests[k];
          if constexpr (std::is_same_v<std::decay_t<decltype(syn)>, PmcSyndrome>) {
            if (faults.contains(test.tester)) free_slots.push_back(k);
          } else {
            if (faults.contains(test.comparator)) free_slots.push_back(k);
          }
        }
      },
      s);
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::visit(
        [&](auto& syn) {
          for (std::size_t b = 0; b < free_slots.size(); ++b) syn.tests[free_slots[b]].outcome = (mask >> b) & 1U;
        },
        s);
    if (!visit(s)) return;
  }
}

bool consistent(const Graph& g, const Syndrome& syndrome, VertexSet candidate) {
  check_faults(g, candidate);
  return Explainer(g, syndrome).explains(candidate);
}

std::vector<VertexSet> decode(const Graph& g, const Syndrome& syndrome, int t, const Budget& budget) {
  if (t < 0) throw InvalidArgument("t must be non-negative");
  check_vertex_cap(g, budget);
  const Explainer explainer(g, syndrome);
  std::vector<VertexSet> out;
  for (VertexSet f : detail::subsets_up_to(g.order(), std::min(t, g.order()))) {
    if (explainer.explains(f)) out.push_back(f);
  }
  return out;
}

std::vector<VertexSet> reachable_diagnoses(const Graph& g, VertexSet faults, int t, DiagModel model) {
  check_faults(g, faults);
  std::vector<VertexSet> out;
  for (VertexSet f : detail::subsets_up_to(g.order(), std::min(t, g.order()))) {
    bool ok = true;
    for (Vertex w : g.vertices() - (faults | f)) {
      const VertexSet nbrs = g.neighbors(w);
      if (model == DiagModel::PMC) {
        ok = (nbrs & faults) == (nbrs & f);
      } else {
        for (Vertex u : nbrs) {
          for (Vertex v : nbrs) {
            if (v <= u) continue;
            const VertexSet pair{u, v};
            if (pair.intersects(faults) != pair.intersects(f)) ok = false;
          }
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(f);
  }
  return out;
}

Syndrome confusing_syndrome(const Graph& g, VertexSet f1, VertexSet f2, DiagModel model) {
  check_faults(g, f1);
  check_faults(g, f2);
  // Testers outside f1 report the f1 truth; faulty testers outside f2 report the f2 truth;
  // testers faulty in both worlds report 0.
  OutcomeSource zeros(AdversaryPolicy::zeros());
  if (model == DiagModel::PMC) {
    PmcSyndrome s = pmc_syndrome(g, f1, VertexSet{}, zeros);
    for (auto& test : s.tests) {
      if (f1.contains(test.tester)) test.outcome = !f2.contains(test.tester) && f2.contains(test.tested);
    }
    return s;
  }
  MmSyndrome s = mm_syndrome(g, f1, VertexSet{}, zeros);
  for (auto& test : s.tests) {
    if (f1.contains(test.comparator)) {
      test.outcome = !f2.contains(test.comparator) && (f2.contains(test.u) || f2.contains(test.v));
    }
  }
  return s;
}

std::string to_text(const Syndrome& s) {
  std::ostringstream os;
  if (const auto* p = std::get_if<PmcSyndrome>(&s)) {
    auto tests = p->tests;
    std::sort(tests.begin(), tests.end());
    for (const auto& t : tests) os << t.tester << ' ' << t.tested << ' ' << (t.outcome ? 1 : 0) << '\n';
  } else {
    auto tests = std::get<MmSyndrome>(s).tests;
    std::sort(tests.begin(), tests.end());
    for (const auto& t : tests) os << t.comparator << ' ' << t.u << ' ' << t.v << ' ' << (t.outcome ? 1 : 0) << '\n';
  }
  return os.str();
}

Syndrome parse_syndrome(std::string_view text, DiagModel model) {
  PmcSyndrome pmc;
  MmSyndrome mm;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  const std::size_t fields = model == DiagModel::PMC ? 3 : 4;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields_in(line);
    std::vector<long long> values;
    std::string token;
    while (fields_in >> token) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw FormatError("line " + std::to_string(number) + ": not an integer: " + token, number);
      }
    }
    if (values.size() != fields) {
      throw FormatError("line " + std::to_string(number) + ": expected " + std::to_string(fields) + " fields", number);
    }
    const long long bit = values.back();
    if (bit != 0 && bit != 1) throw FormatError("line " + std::to_string(number) + ": outcome must be 0 or 1", number);
    for (std::size_t i = 0; i + 1 < fields; ++i) {
      if (values[i] < 0 || values[i] >= kMaxVertices) {
        throw FormatError("line " + std::to_string(number) + ": vertex id out of range", number);
      }
    }
    if (model == DiagModel::PMC) {
      pmc.tests.push_back({static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]), bit == 1});
    } else {
      Vertex u = static_cast<Vertex>(values[1]);
      Vertex v = static_cast<Vertex>(values[2]);
      if (u > v) std::swap(u, v);
      mm.tests.push_back({static_cast<Vertex>(values[0]), u, v, bit == 1});
    }
  }
  if (model == DiagModel::PMC) {
    std::sort(pmc.tests.begin(), pmc.tests.end());
    return pmc;
  }
  std::sort(mm.tests.begin(), mm.tests.end());
  return mm;
}

}  // namespace diagnoscope
