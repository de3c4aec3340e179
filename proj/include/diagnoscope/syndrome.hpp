#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diagnoscope/budget.hpp"
#include "diagnoscope/diagnosis.hpp"
#include "diagnoscope/graph.hpp"

namespace diagnoscope {

/// Outcome of `tester` testing the adjacent vertex `tested`; true means "reported faulty".
struct PmcTest {
  Vertex tester = 0;
  Vertex tested = 0;
  bool outcome = false;
  friend auto operator<=>(const PmcTest&, const PmcTest&) = default;
};

/// Outcome of `comparator` comparing its neighbors u < v; true means "disagree".
struct MmTest {
  Vertex comparator = 0;
  Vertex u = 0;
  Vertex v = 0;
  bool outcome = false;
  friend auto operator<=>(const MmTest&, const MmTest&) = default;
};

/// One entry per ordered adjacent pair, sorted by (tester, tested).
struct PmcSyndrome {
  std::vector<PmcTest> tests;
  friend bool operator==(const PmcSyndrome&, const PmcSyndrome&) = default;
};

/// One entry per comparator and unordered pair of its neighbors, sorted by (comparator, u, v).
struct MmSyndrome {
  std::vector<MmTest> tests;
  friend bool operator==(const MmSyndrome&, const MmSyndrome&) = default;
};

using Syndrome = std::variant<PmcSyndrome, MmSyndrome>;

DiagModel model_of(const Syndrome& s);

/// How a faulty tester or comparator fills in its outcomes.
struct AdversaryPolicy {
  enum class Kind { seeded_random, all_zero, all_one, exhaustive };
  Kind kind = Kind::all_zero;
  std::uint64_t seed = 0;

  static AdversaryPolicy random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }
  static AdversaryPolicy zeros() { return {Kind::all_zero, 0}; }
  static AdversaryPolicy ones() { return {Kind::all_one, 0}; }
  static AdversaryPolicy exhaustive() { return {Kind::exhaustive, 0}; }
};

/// Number of outcomes the faulty vertices control.
int adversary_bits(const Graph& g, VertexSet faults, DiagModel model);

/// Syndrome produced when exactly `faults` are faulty. PMC: a fault-free tester reports the true
/// status of the tested vertex. MM*: a fault-free comparator reports 0 iff both compared vertices
/// are fault-free. Faulty testers and comparators follow the policy. The exhaustive policy is
/// rejected here; use for_each_syndrome.
Syndrome generate_syndrome(const Graph& g, VertexSet faults, DiagModel model, AdversaryPolicy policy);

/// Streams every syndrome the policy can produce (2^adversary_bits of them for the exhaustive
/// policy, one otherwise). The callback returns false to stop early. Throws CapExceeded when the
/// exhaustive stream would exceed budget.exhaustive_max_bits.
void for_each_syndrome(const Graph& g, VertexSet faults, DiagModel model, AdversaryPolicy policy,
                       const Budget& budget, const std::function<bool(const Syndrome&)>& visit);

/// Every fault set F with |F| <= t that explains the syndrome under some choice of faulty outcomes,
/// in (size, lexicographic) order. Throws InvalidArgument when the syndrome's shape does not
/// match g.
std::vector<VertexSet> decode(const Graph& g, const Syndrome& syndrome, int t, const Budget& budget = {});

/// True when `candidate` could have produced `syndrome`.
bool consistent(const Graph& g, const Syndrome& syndrome, VertexSet candidate);

/// Union of decode(g, s, t) over every syndrome s that the fault set `faults` can produce, computed
/// without enumerating the syndromes: F' is reachable iff every entry fixed by `faults` agrees with
/// what F' predicts for testers outside F'.
std::vector<VertexSet> reachable_diagnoses(const Graph& g, VertexSet faults, int t, DiagModel model);

/// A syndrome produced by faults f1 (faulty testers outside f2 impersonate the f2 world) that also
/// fits f2 whenever the pair is indistinguishable.
Syndrome confusing_syndrome(const Graph& g, VertexSet f1, VertexSet f2, DiagModel model);

/// Line format: "u v bit" (PMC) or "w u v bit" (MM*), one entry per line, sorted.
std::string to_text(const Syndrome& s);
/// Inverse of to_text; throws FormatError with the 1-based line number.
Syndrome parse_syndrome(std::string_view text, DiagModel model);

}  // namespace diagnoscope
