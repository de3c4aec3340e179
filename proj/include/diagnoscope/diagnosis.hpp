#pragma once

#include <optional>
#include <string_view>

#include "diagnoscope/budget.hpp"
#include "diagnoscope/graph.hpp"

namespace diagnoscope {

enum class DiagModel { PMC, MMstar };

std::string_view to_string(DiagModel model);
/// Accepts "pmc", "mm", "mm*" and "mmstar" (any case).
std::optional<DiagModel> parse_model(std::string_view text);

/// A pair of distinct candidate fault sets no syndrome can tell apart.
struct IndistinguishableWitness {
  VertexSet f1;
  VertexSet f2;
  DiagModel model = DiagModel::PMC;
};

/// PMC: some edge joins V - (f1 ∪ f2) to f1 △ f2. Throws InvalidArgument when f1 == f2.
bool distinguishable_pmc(const Graph& g, VertexSet f1, VertexSet f2);

struct MmDistinction {
  bool distinguishable = false;
  /// First satisfied comparison condition (1, 2 or 3), 0 when none holds.
  ///  1: an outside vertex u has a neighbor in f1 △ f2 and another outside neighbor;
  ///  2: an outside vertex has two neighbors in f1 - f2;
  ///  3: an outside vertex has two neighbors in f2 - f1.
  int condition = 0;
};

/// MM*: at least one of the three comparison conditions holds. Throws InvalidArgument when f1 == f2.
MmDistinction distinguishable_mm(const Graph& g, VertexSet f1, VertexSet f2);

bool distinguishable(const Graph& g, VertexSet f1, VertexSet f2, DiagModel model);

struct DiagnosableResult {
  bool diagnosable = true;
  std::optional<IndistinguishableWitness> witness;
};

/// Exhaustive check over all unordered pairs of distinct sets of size <= t.
///
/// Pairs are visited level by level: level k holds the pairs whose larger member has exactly k
/// vertices. Within a level, the later set F2 runs over k-subsets in lexicographic order and the
/// earlier set F1 over every set preceding F2 in (size, lexicographic) order. The witness is the
/// first failing pair in that order, whatever the job count.
DiagnosableResult is_t_diagnosable(const Graph& g, int t, DiagModel model, const Budget& budget = {});

/// min(δ(G), ⌊(n-1)/2⌋): no graph is diagnosable beyond it.
int diagnosability_cap(const Graph& g);

/// t(G): ascends from t = 1 and stops at the first failing level or at diagnosability_cap.
int diagnosability(const Graph& g, DiagModel model, const Budget& budget = {});

/// min(t(G), limit), without enumerating levels above the limit.
int diagnosability_up_to(const Graph& g, DiagModel model, int limit, const Budget& budget = {});

}  // namespace diagnoscope
