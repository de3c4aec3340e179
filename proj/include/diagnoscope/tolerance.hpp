#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagnoscope/budget.hpp"
#include "diagnoscope/diagnosis.hpp"
#include "diagnoscope/graph.hpp"

namespace diagnoscope {

enum class ToleranceMethod { brute_force, theorem };

std::string_view to_string(ToleranceMethod method);

struct ToleranceResult {
  int h = 0;
  DiagModel model = DiagModel::PMC;
  /// t_h^e(G): the least diagnosability over all graphs G - F_e with |F_e| <= h.
  int value = 0;
  /// Lexicographically smallest minimizing edge set (brute force), or the edges of a minimum-degree
  /// vertex (theorem path for h > δ).
  EdgeSet worst_scenario;
  ToleranceMethod method = ToleranceMethod::brute_force;
};

/// Exhaustive over the scenarios of size min(h, |E|) (smaller scenarios never do worse since
/// deleting edges cannot raise diagnosability). h > δ(G) short-circuits to 0.
ToleranceResult edge_tolerable_diagnosability(const Graph& g, int h, DiagModel model, const Budget& budget = {});

/// The same quantity computed literally as "the largest t such that every G - F_e with |F_e| <= h,
/// of every size, is t-diagnosable", using only is_t_diagnosable. Slow; for cross-checking.
int edge_tolerable_diagnosability_by_definition(const Graph& g, int h, DiagModel model, const Budget& budget = {});

/// Least diagnosability over the scenarios of exactly `size` edges.
int min_diagnosability_over_scenarios(const Graph& g, int size, DiagModel model, const Budget& budget = {});

/// Claims the bound calculator can invoke. Names describe the statement, not where it comes from.
namespace claim {
inline constexpr const char* kMinDegreeUpper = "min-degree-upper-bound";   // t_h^e <= δ - h, connected G
inline constexpr const char* kLargeBudget = "isolating-budget";            // h >= δ forces 0
inline constexpr const char* kPmcLower = "pmc-lower-bound";                // t-connected, |V| >= 2(t-h)+1
inline constexpr const char* kPmcExact = "pmc-exact";                      // maximally connected
inline constexpr const char* kMmLower = "mm-lower-bound";                  // t >= 3, |V| >= 2(t-h)+3, h <= ⌊(t-1)/2⌋, not exceptional
inline constexpr const char* kMmExact = "mm-exact";                        // maximally connected, δ >= 3
}  // namespace claim

struct Bound {
  int value = 0;
  std::string by;
};

struct ConditionRow {
  std::string claim;
  std::string condition;
  bool holds = false;
};

struct BoundReport {
  std::optional<Bound> lower;
  std::optional<Bound> upper;
  /// Present exactly when lower and upper meet.
  std::optional<int> exact;
  std::vector<ConditionRow> conditions;
  /// True when no lower-bound claim covers this (model, h).
  bool no_theorem_applies = false;
};

/// Evaluates each claim's hypotheses on g exactly and combines whichever apply.
///
/// Lower bounds pick the largest admissible t <= κ(G): for PMC the largest t with h <= t and
/// |V| >= 2(t-h)+1, for MM* the largest t >= 3 with |V| >= 2(t-h)+3 and h <= ⌊(t-1)/2⌋.
BoundReport theoretical_bounds(const Graph& g, int h, DiagModel model, const Budget& budget = {});

}  // namespace diagnoscope
