#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagnoscope/budget.hpp"
#include "diagnoscope/diagnosis.hpp"
#include "diagnoscope/graph.hpp"
#include "diagnoscope/report.hpp"

namespace diagnoscope {

struct CorpusEntry {
  std::string name;
  Graph graph;
};

/// Q3, Q4, Petersen, K5, K6, K3,3, K4,4, the C5 prism, circulant C8(1,2), Petersen plus one chord,
/// three random members per family index at δ = 3 with the least legal l, one complete-block member
/// per index at δ = 4, and five seeded random t-connected graphs.
std::vector<CorpusEntry> default_corpus();

/// Every claim id the suite knows, in sorted order.
const std::vector<std::string>& claim_ids();

enum class Verdict { pass, fail, hypothesis_not_met, budget_exceeded };

std::string_view to_string(Verdict verdict);

struct Hypothesis {
  std::string condition;
  bool holds = false;
};

struct Recipe {
  std::string graph6;
  int h = 0;
  DiagModel model = DiagModel::PMC;
  EdgeSet scenario;
  std::optional<IndistinguishableWitness> witness;
};

struct VerificationRow {
  std::string graph;
  std::string claim;
  int h = 0;
  std::optional<DiagModel> model;
  std::vector<Hypothesis> hypotheses;
  /// Brute-force value the claim is compared against.
  std::optional<int> oracle;
  /// The asserted relation, e.g. ">= 2" or "== 3".
  std::string asserted;
  Verdict verdict = Verdict::hypothesis_not_met;
  std::optional<Recipe> recipe;
  std::string note;
};

/// Unasserted measurement: does MM* diagnosability of a family member drop below δ?
struct FamilyObservation {
  std::string graph;
  int index = 0;
  int delta = 0;
  int mm_diagnosability = 0;
  bool below_delta = false;
};

struct VerificationReport {
  /// Sorted by (graph, claim, h).
  std::vector<VerificationRow> rows;
  std::vector<FamilyObservation> observations;
  int passed = 0;
  int failed = 0;
  int not_met = 0;
  int over_budget = 0;
};

struct SuiteOptions {
  /// Empty selects every claim.
  std::vector<std::string> claims;
  /// Largest h swept; the sweep is 0..min(δ, h_max).
  int h_max = 3;
  Budget budget;
};

/// Throws InvalidArgument on an unknown claim id.
VerificationReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options);

Json to_json(const VerificationReport& report);
/// One line per row followed by its hypothesis checks, then the observations and the summary.
std::string to_table(const VerificationReport& report);

}  // namespace diagnoscope
