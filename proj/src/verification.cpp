#include "diagnoscope/verification.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "diagnoscope/connectivity.hpp"
#include "diagnoscope/error.hpp"
#include "diagnoscope/families.hpp"
#include "diagnoscope/io.hpp"
#include "diagnoscope/tolerance.hpp"

namespace diagnoscope {

namespace {

constexpr const char* kPmcTDiagnosable = "pmc-t-diagnosable";
constexpr const char* kRegularPmcExact = "regular-pmc-exact";
constexpr const char* kRegularMmTDiagnosable = "regular-mm-t-diagnosable";
constexpr const char* kRegularMmExact = "regular-mm-exact";
constexpr const char* kCommonNeighborMmExact = "common-neighbor-mm-exact";
constexpr const char* kEdgeDeletionConnectivity = "edge-deletion-connectivity";
constexpr const char* kFamilyIrregular = "family-irregular";
constexpr const char* kFamilyCommonNeighbors = "family-common-neighbors";
constexpr const char* kFamilyCommonNeighborsDelta4 = "family-common-neighbors-delta4";

std::string text(const auto&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

/// Per-graph facts computed once and shared by every claim.
struct Facts {
  const CorpusEntry* entry = nullptr;
  int n = 0;
  int m = 0;
  int kappa = 0;
  int delta = 0;
  int common = 0;
  bool regular = false;
  bool connected = false;
  bool maximally_connected = false;
  ExclusionCheck exclusion;
  RecognitionResult recognition;
  std::map<std::pair<DiagModel, int>, ToleranceResult> oracle;
};

struct Evaluation {
  std::vector<Hypothesis> hypotheses;
  bool holds() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
  }
  bool check(std::string condition, bool value) {
    hypotheses.push_back({std::move(condition), value});
    return value;
  }
};

enum class Relation { at_least, equal, at_most };

std::string relation_text(Relation relation, int value) {
  const char* op = relation == Relation::at_least ? ">= " : relation == Relation::equal ? "== " : "<= ";
  return op + std::to_string(value);
}

bool satisfied(Relation relation, int oracle, int value) {
  switch (relation) {
    case Relation::at_least: return oracle >= value;
    case Relation::equal: return oracle == value;
    case Relation::at_most: return oracle <= value;
  }
  return false;
}

class Suite {
public:
  explicit Suite(const SuiteOptions& options) : options_(options) {}

  void run_graph(const CorpusEntry& entry, VerificationReport& report, const std::vector<std::string>& claims) {
    Facts facts = gather(entry);
    const int sweep = std::min(facts.delta, options_.h_max);
    auto selected = [&](const char* id) { return std::find(claims.begin(), claims.end(), id) != claims.end(); };

    for (int h = 0; h <= sweep; ++h) {
      if (selected(claim::kPmcLower)) report.rows.push_back(pmc_lower(facts, h));
      if (selected(claim::kPmcExact)) report.rows.push_back(pmc_exact(facts, h));
      if (selected(kRegularPmcExact)) report.rows.push_back(regular_pmc_exact(facts, h));
      if (selected(claim::kMmLower)) report.rows.push_back(mm_lower(facts, h));
      if (selected(claim::kMmExact)) report.rows.push_back(mm_exact(facts, h));
      if (selected(kRegularMmExact)) report.rows.push_back(regular_mm_exact(facts, h));
      if (selected(kCommonNeighborMmExact)) report.rows.push_back(common_neighbor_mm_exact(facts, h));
      if (selected(kEdgeDeletionConnectivity)) report.rows.push_back(edge_deletion_connectivity(facts, h));
    }
    if (selected(claim::kMinDegreeUpper)) {
      for (int h = 0; h <= sweep; ++h) {
        for (DiagModel model : {DiagModel::PMC, DiagModel::MMstar}) report.rows.push_back(min_degree_upper(facts, h, model));
      }
      if (facts.delta > sweep) {
        for (DiagModel model : {DiagModel::PMC, DiagModel::MMstar}) {
          report.rows.push_back(min_degree_upper(facts, facts.delta, model));
        }
      }
    }
    if (selected(kPmcTDiagnosable)) report.rows.push_back(pmc_t_diagnosable(facts));
    if (selected(kRegularMmTDiagnosable)) report.rows.push_back(regular_mm_t_diagnosable(facts));
    if (selected(kFamilyIrregular)) report.rows.push_back(family_row(facts, kFamilyIrregular));
    if (selected(kFamilyCommonNeighbors)) report.rows.push_back(family_row(facts, kFamilyCommonNeighbors));
    if (selected(kFamilyCommonNeighborsDelta4)) report.rows.push_back(family_row(facts, kFamilyCommonNeighborsDelta4));

    if (facts.recognition.member && facts.recognition.index) {
      FamilyObservation obs;
      obs.graph = entry.name;
      obs.index = *facts.recognition.index;
      obs.delta = facts.delta;
      try {
        obs.mm_diagnosability = oracle(facts, DiagModel::MMstar, 0).value;
        obs.below_delta = obs.mm_diagnosability < facts.delta;
        report.observations.push_back(obs);
      } catch (const CapExceeded&) {
      }
    }
  }

private:
  Facts gather(const CorpusEntry& entry) {
    Facts f;
    f.entry = &entry;
    const Graph& g = entry.graph;
    f.n = g.order();
    f.m = g.size();
    const auto conn = vertex_connectivity(g);
    f.kappa = conn.kappa;
    f.delta = conn.delta;
    f.maximally_connected = conn.maximally_connected;
    f.common = f.n >= 2 ? max_common_neighbors(g).value : 0;
    f.regular = degree_profile(g).regular;
    f.connected = is_connected(g);
    f.exclusion = exclude_exceptional(g, options_.budget);
    f.recognition = recognize_exceptional(g, options_.budget);
    return f;
  }

  const ToleranceResult& oracle(Facts& f, DiagModel model, int h) {
    const auto key = std::make_pair(model, h);
    auto it = f.oracle.find(key);
    if (it == f.oracle.end()) {
      it = f.oracle.emplace(key, edge_tolerable_diagnosability(f.entry->graph, h, model, options_.budget)).first;
    }
    return it->second;
  }

  VerificationRow base(const Facts& f, const char* claim_id, int h, std::optional<DiagModel> model) {
    VerificationRow row;
    row.graph = f.entry->name;
    row.claim = claim_id;
    row.h = h;
    row.model = model;
    return row;
  }

  /// Compares the brute-force t_h^e against the asserted relation once the hypotheses hold.
  VerificationRow compare(Facts& f, const char* claim_id, int h, DiagModel model, Evaluation eval, Relation relation,
                          int value) {
    VerificationRow row = base(f, claim_id, h, model);
    const bool applies = eval.holds();
    row.hypotheses = std::move(eval.hypotheses);
    row.asserted = relation_text(relation, value);
    if (!applies) {
      row.verdict = Verdict::hypothesis_not_met;
      return row;
    }
    try {
      const ToleranceResult& result = oracle(f, model, h);
      row.oracle = result.value;
      if (satisfied(relation, result.value, value)) {
        row.verdict = Verdict::pass;
      } else {
        row.verdict = Verdict::fail;
        row.recipe = recipe(f, h, model, result);
      }
    } catch (const CapExceeded& e) {
      row.verdict = Verdict::budget_exceeded;
      row.note = e.what();
    }
    return row;
  }

  Recipe recipe(const Facts& f, int h, DiagModel model, const ToleranceResult& result) {
    Recipe r;
    r.graph6 = emit_graph6(f.entry->graph);
    r.h = h;
    r.model = model;
    r.scenario = result.worst_scenario;
    const Graph reduced = delete_edges(f.entry->graph, result.worst_scenario);
    const auto check = is_t_diagnosable(reduced, result.value + 1, model, options_.budget);
    if (check.witness) r.witness = check.witness;
    return r;
  }

  void family_condition(Evaluation& eval, const Facts& f) {
    std::string row = "not in the exceptional family (" + to_string(f.exclusion.reason);
    if (f.exclusion.member_index) row += text(", matches index ", *f.exclusion.member_index);
    eval.check(row + ")", f.exclusion.excluded);
  }

  VerificationRow pmc_lower(Facts& f, int h) {
    Evaluation eval;
    const int t = std::min(f.kappa, h + (f.n - 1) / 2);
    eval.check(text("kappa = ", f.kappa, " >= t = ", t), t <= f.kappa);
    eval.check(text("0 <= h = ", h, " <= t = ", t), h <= t);
    eval.check(text("|V| = ", f.n, " >= 2(t-h)+1 = ", 2 * (t - h) + 1), f.n >= 2 * (t - h) + 1);
    return compare(f, claim::kPmcLower, h, DiagModel::PMC, std::move(eval), Relation::at_least, t - h);
  }

  VerificationRow pmc_exact(Facts& f, int h) {
    Evaluation eval;
    eval.check(text("maximally connected (kappa = ", f.kappa, ", delta = ", f.delta, ")"), f.maximally_connected);
    eval.check(text("|V| = ", f.n, " >= 2(delta-h)+1 = ", 2 * (f.delta - h) + 1), f.n >= 2 * (f.delta - h) + 1);
    eval.check(text("0 <= h = ", h, " <= delta = ", f.delta), h <= f.delta);
    return compare(f, claim::kPmcExact, h, DiagModel::PMC, std::move(eval), Relation::equal, f.delta - h);
  }

  VerificationRow regular_pmc_exact(Facts& f, int h) {
    Evaluation eval;
    const int k = f.delta;
    eval.check(text("regular of degree k = ", k), f.regular);
    eval.check(text("k-connected (kappa = ", f.kappa, ")"), f.kappa >= k);
    eval.check(text("|V| = ", f.n, " >= 2(k-h)+1 = ", 2 * (k - h) + 1), f.n >= 2 * (k - h) + 1);
    eval.check(text("0 <= h = ", h, " <= k = ", k), h <= k);
    return compare(f, kRegularPmcExact, h, DiagModel::PMC, std::move(eval), Relation::equal, k - h);
  }

  VerificationRow mm_lower(Facts& f, int h) {
    Evaluation eval;
    int t = -1;
    for (int candidate = f.kappa; candidate >= 3; --candidate) {
      if (f.n >= 2 * (candidate - h) + 3 && h <= (candidate - 1) / 2) {
        t = candidate;
        break;
      }
    }
    if (t >= 3) {
      eval.check(text("3 <= t = ", t, " <= kappa = ", f.kappa), true);
      eval.check(text("|V| = ", f.n, " >= 2(t-h)+3 = ", 2 * (t - h) + 3), true);
      eval.check(text("0 <= h = ", h, " <= floor((t-1)/2) = ", (t - 1) / 2), true);
    } else {
      eval.check(text("some t in 3..kappa = ", f.kappa, " has |V| = ", f.n, " >= 2(t-h)+3 and h = ", h,
                      " <= floor((t-1)/2)"),
                 false);
    }
    family_condition(eval, f);
    return compare(f, claim::kMmLower, h, DiagModel::MMstar, std::move(eval), Relation::at_least, t - h);
  }

  void mm_exact_conditions(Evaluation& eval, const Facts& f, int h) {
    eval.check(text("maximally connected (kappa = ", f.kappa, ", delta = ", f.delta, ")"), f.maximally_connected);
    eval.check(text("delta = ", f.delta, " >= 3"), f.delta >= 3);
    eval.check(text("|V| = ", f.n, " >= 2(delta-h)+3 = ", 2 * (f.delta - h) + 3), f.n >= 2 * (f.delta - h) + 3);
    eval.check(text("0 <= h = ", h, " <= floor((delta-1)/2) = ", (f.delta - 1) / 2), h <= (f.delta - 1) / 2);
  }

  VerificationRow mm_exact(Facts& f, int h) {
    Evaluation eval;
    mm_exact_conditions(eval, f, h);
    family_condition(eval, f);
    return compare(f, claim::kMmExact, h, DiagModel::MMstar, std::move(eval), Relation::equal, f.delta - h);
  }

  VerificationRow regular_mm_exact(Facts& f, int h) {
    Evaluation eval;
    const int k = f.delta;
    eval.check(text("regular of degree k = ", k), f.regular);
    eval.check(text("k-connected (kappa = ", f.kappa, ")"), f.kappa >= k);
    eval.check(text("k = ", k, " >= 3"), k >= 3);
    eval.check(text("|V| = ", f.n, " >= 2(k-h)+3 = ", 2 * (k - h) + 3), f.n >= 2 * (k - h) + 3);
    eval.check(text("0 <= h = ", h, " <= floor((k-1)/2) = ", (k - 1) / 2), h <= (k - 1) / 2);
    return compare(f, kRegularMmExact, h, DiagModel::MMstar, std::move(eval), Relation::equal, k - h);
  }

  VerificationRow common_neighbor_mm_exact(Facts& f, int h) {
    Evaluation eval;
    mm_exact_conditions(eval, f, h);
    const bool shortcut = (f.delta >= 3 && f.common <= f.delta - 2) || (f.delta >= 4 && f.common <= f.delta - 1);
    eval.check(text("C(G) = ", f.common, " <= delta-2, or delta >= 4 and C(G) <= delta-1 (delta = ", f.delta, ")"),
               shortcut);
    return compare(f, kCommonNeighborMmExact, h, DiagModel::MMstar, std::move(eval), Relation::equal, f.delta - h);
  }

  VerificationRow min_degree_upper(Facts& f, int h, DiagModel model) {
    Evaluation eval;
    eval.check("connected", f.connected);
    eval.check(text("0 <= h = ", h, " <= delta = ", f.delta), h <= f.delta);
    return compare(f, claim::kMinDegreeUpper, h, model, std::move(eval), Relation::at_most, f.delta - h);
  }

  VerificationRow pmc_t_diagnosable(Facts& f) {
    Evaluation eval;
    const int t = std::min(f.kappa, (f.n - 1) / 2);
    eval.check(text("t = ", t, " >= 2"), t >= 2);
    eval.check(text("t-connected (kappa = ", f.kappa, ")"), f.kappa >= t);
    eval.check(text("|V| = ", f.n, " >= 2t+1 = ", 2 * t + 1), f.n >= 2 * t + 1);
    return compare(f, kPmcTDiagnosable, 0, DiagModel::PMC, std::move(eval), Relation::at_least, t);
  }

  VerificationRow regular_mm_t_diagnosable(Facts& f) {
    Evaluation eval;
    const int t = f.delta;
    eval.check(text("regular of degree t = ", t), f.regular);
    eval.check(text("t-connected (kappa = ", f.kappa, ")"), f.kappa >= t);
    eval.check(text("t = ", t, " > 2"), t > 2);
    eval.check(text("|V| = ", f.n, " >= 2t+3 = ", 2 * t + 3), f.n >= 2 * t + 3);
    return compare(f, kRegularMmTDiagnosable, 0, DiagModel::MMstar, std::move(eval), Relation::at_least, t);
  }

  VerificationRow edge_deletion_connectivity(Facts& f, int h) {
    VerificationRow row = base(f, kEdgeDeletionConnectivity, h, std::nullopt);
    const Graph& g = f.entry->graph;
    row.hypotheses.push_back({text("|F_e| = h = ", h, " <= |E| = ", f.m), h <= f.m});
    row.asserted = relation_text(Relation::at_least, f.kappa - h);
    if (h > f.m) {
      row.verdict = Verdict::hypothesis_not_met;
      return row;
    }
    long long count = 1;
    for (int i = 1; i <= h; ++i) count = count * (f.m - h + i) / i;
    if (count > options_.budget.max_scenarios) {
      row.verdict = Verdict::budget_exceeded;
      row.note = text(count, " edge-fault scenarios exceed the cap of ", options_.budget.max_scenarios);
      return row;
    }
    std::vector<int> pick(h);
    for (int i = 0; i < h; ++i) pick[i] = i;
    int least = f.n;
    EdgeSet worst;
    while (true) {
      EdgeSet removed;
      for (int i : pick) removed.push_back(g.edges()[i]);
      const int k = vertex_connectivity(delete_edges(g, removed)).kappa;
      if (k < least) {
        least = k;
        worst = removed;
      }
      int i = h - 1;
      while (i >= 0 && pick[i] == f.m - h + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < h; ++j) pick[j] = pick[j - 1] + 1;
    }
    row.oracle = least;
    row.verdict = least >= f.kappa - h ? Verdict::pass : Verdict::fail;
    if (row.verdict == Verdict::fail) row.recipe = Recipe{emit_graph6(g), h, DiagModel::PMC, worst, std::nullopt};
    return row;
  }

  VerificationRow family_row(Facts& f, const char* claim_id) {
    VerificationRow row = base(f, claim_id, 0, std::nullopt);
    if (f.recognition.status == RecognitionStatus::cap_exceeded) {
      row.hypotheses.push_back({"member of the exceptional family (recognizer over its vertex cap)", false});
      row.verdict = Verdict::budget_exceeded;
      return row;
    }
    const bool member = f.recognition.member;
    std::string membership = "member of the exceptional family";
    if (member) membership += text(" (index ", *f.recognition.index, ")");
    row.hypotheses.push_back({membership, member});
    bool holds = false;
    if (claim_id == std::string(kFamilyIrregular)) {
      row.asserted = "irregular";
      const auto profile = degree_profile(f.entry->graph);
      row.note = text("degrees ", profile.degrees.front(), "..", profile.degrees.back());
      holds = !profile.regular;
    } else if (claim_id == std::string(kFamilyCommonNeighbors)) {
      row.asserted = relation_text(Relation::at_least, f.delta - 1);
      row.oracle = f.common;
      holds = f.common >= f.delta - 1;
    } else {
      row.hypotheses.push_back({text("delta = ", f.delta, " >= 4"), f.delta >= 4});
      row.asserted = relation_text(Relation::at_least, f.delta);
      row.oracle = f.common;
      holds = f.common >= f.delta;
    }
    const bool applies = std::all_of(row.hypotheses.begin(), row.hypotheses.end(), [](const Hypothesis& x) { return x.holds; });
    if (!applies) {
      row.verdict = Verdict::hypothesis_not_met;
    } else if (holds) {
      row.verdict = Verdict::pass;
    } else {
      row.verdict = Verdict::fail;
      row.recipe = Recipe{emit_graph6(f.entry->graph), 0, DiagModel::MMstar, {}, std::nullopt};
    }
    return row;
  }

  const SuiteOptions& options_;
};

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out{claim::kPmcLower,          claim::kPmcExact,        kPmcTDiagnosable,
                                 kRegularPmcExact,          claim::kMmLower,         claim::kMmExact,
                                 kRegularMmTDiagnosable,    kRegularMmExact,         kCommonNeighborMmExact,
                                 kEdgeDeletionConnectivity, claim::kMinDegreeUpper,  kFamilyIrregular,
                                 kFamilyCommonNeighbors,    kFamilyCommonNeighborsDelta4};
    std::sort(out.begin(), out.end());
    return out;
  }();
  return ids;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::hypothesis_not_met: return "hypothesis_not_met";
    case Verdict::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> corpus{
      {"Q3", hypercube(3)},
      {"Q4", hypercube(4)},
      {"petersen", petersen_graph()},
      {"K5", complete_graph(5)},
      {"K6", complete_graph(6)},
      {"K3,3", complete_bipartite(3, 3)},
      {"K4,4", complete_bipartite(4, 4)},
      {"prism-C5", prism_graph(5)},
      {"circulant-C8(1,2)", circulant_graph(8, {1, 2})},
      {"petersen+chord", add_edges(petersen_graph(), EdgeSet{Edge(0, 2)})},
  };
  for (int index = 1; index <= 5; ++index) {
    std::mt19937_64 rng(1000 + index);
    const int l = min_independent_size(index, 3);
    for (int k = 0; k < 3; ++k) {
      corpus.push_back({text("gamma", index, "-d3-r", k), make_gamma(random_gamma_spec(index, 3, l, rng))});
    }
    corpus.push_back({text("gamma", index, "-d4"), make_gamma(canonical_gamma_spec(index, 4, min_independent_size(index, 4)))});
  }
  const std::vector<std::tuple<int, int, std::uint64_t>> randoms{{8, 3, 1}, {9, 3, 2}, {10, 3, 3}, {11, 4, 4}, {12, 4, 5}};
  for (const auto& [n, t, seed] : randoms) {
    corpus.push_back({text("random-n", n, "-t", t, "-s", seed), random_t_connected(n, t, seed)});
  }
  return corpus;
}

VerificationReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options) {
  std::vector<std::string> claims = options.claims.empty() ? claim_ids() : options.claims;
  for (const auto& id : claims) {
    if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end()) {
      throw InvalidArgument("unknown claim id: " + id);
    }
  }
  VerificationReport report;
  Suite suite(options);
  for (const auto& entry : corpus) {
    if (entry.graph.order() > options.budget.max_vertices) {
      for (const auto& id : claims) {
        VerificationRow row;
        row.graph = entry.name;
        row.claim = id;
        row.verdict = Verdict::budget_exceeded;
        row.note = text(entry.graph.order(), " vertices exceed the cap of ", options.budget.max_vertices);
        report.rows.push_back(std::move(row));
      }
      continue;
    }
    suite.run_graph(entry, report, claims);
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const VerificationRow& a, const VerificationRow& b) {
    return std::tie(a.graph, a.claim, a.h) < std::tie(b.graph, b.claim, b.h);
  });
  std::sort(report.observations.begin(), report.observations.end(),
            [](const FamilyObservation& a, const FamilyObservation& b) { return a.graph < b.graph; });
  for (const auto& row : report.rows) {
    switch (row.verdict) {
      case Verdict::pass: ++report.passed; break;
      case Verdict::fail: ++report.failed; break;
      case Verdict::hypothesis_not_met: ++report.not_met; break;
      case Verdict::budget_exceeded: ++report.over_budget; break;
    }
  }
  return report;
}

Json to_json(const VerificationReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r{{"graph", row.graph}, {"claim", row.claim}, {"h", row.h}};
    if (row.model) r["model"] = std::string(to_string(*row.model));
    Json hyps = Json::array();
    for (const auto& h : row.hypotheses) hyps.push_back(Json{{"condition", h.condition}, {"holds", h.holds}});
    r["hypotheses"] = std::move(hyps);
    if (row.oracle) r["oracle"] = *row.oracle;
    if (!row.asserted.empty()) r["asserted"] = row.asserted;
    r["verdict"] = std::string(to_string(row.verdict));
    if (row.recipe) {
      Json recipe{{"graph6", row.recipe->graph6},
                  {"h", row.recipe->h},
                  {"model", std::string(to_string(row.recipe->model))},
                  {"scenario", to_json(row.recipe->scenario)}};
      if (row.recipe->witness) {
        recipe["witness"] = Json{{"f1", to_json(row.recipe->witness->f1)}, {"f2", to_json(row.recipe->witness->f2)}};
      }
      r["recipe"] = std::move(recipe);
    }
    if (!row.note.empty()) r["note"] = row.note;
    rows.push_back(std::move(r));
  }
  Json observations = Json::array();
  for (const auto& o : report.observations) {
    observations.push_back(Json{{"graph", o.graph},
                                {"index", o.index},
                                {"delta", o.delta},
                                {"mm_diagnosability", o.mm_diagnosability},
                                {"below_delta", o.below_delta}});
  }
  return Json{{"rows", std::move(rows)},
              {"observations", std::move(observations)},
              {"summary",
               {{"pass", report.passed},
                {"fail", report.failed},
                {"hypothesis_not_met", report.not_met},
                {"budget_exceeded", report.over_budget}}}};
}

std::string to_table(const VerificationReport& report) {
  std::ostringstream os;
  std::size_t graph_width = 5;
  std::size_t claim_width = 5;
  for (const auto& row : report.rows) {
    graph_width = std::max(graph_width, row.graph.size());
    claim_width = std::max(claim_width, row.claim.size());
  }
  auto pad = [](const std::string& s, std::size_t width) { return s + std::string(width - std::min(width, s.size()), ' '); };
  os << pad("graph", graph_width) << "  " << pad("claim", claim_width) << "  h  model  oracle  asserted  verdict\n";
  for (const auto& row : report.rows) {
    os << pad(row.graph, graph_width) << "  " << pad(row.claim, claim_width) << "  " << row.h << "  "
       << pad(row.model ? std::string(to_string(*row.model)) : "-", 5) << "  "
       << pad(row.oracle ? std::to_string(*row.oracle) : "-", 6) << "  " << pad(row.asserted.empty() ? "-" : row.asserted, 8)
       << "  " << to_string(row.verdict) << '\n';
    for (const auto& h : row.hypotheses) os << "    [" << (h.holds ? "x" : " ") << "] " << h.condition << '\n';
    if (!row.note.empty()) os << "    note: " << row.note << '\n';
    if (row.recipe) {
      os << "    recipe: graph6 " << row.recipe->graph6 << ", h " << row.recipe->h << ", model "
         << to_string(row.recipe->model) << ", scenario";
      for (const Edge& e : row.recipe->scenario) os << ' ' << e.u << '-' << e.v;
      if (row.recipe->witness) os << ", witness " << row.recipe->witness->f1 << " vs " << row.recipe->witness->f2;
      os << '\n';
    }
  }
  if (!report.observations.empty()) {
    os << "\nfamily members: MM* diagnosability against delta\n";
    for (const auto& o : report.observations) {
      os << "  " << pad(o.graph, graph_width) << "  index " << o.index << "  delta " << o.delta << "  t_mm "
         << o.mm_diagnosability << (o.below_delta ? "  below delta" : "  not below delta") << '\n';
    }
  }
  os << "\nsummary: " << report.passed << " pass, " << report.failed << " fail, " << report.not_met
     << " hypothesis_not_met, " << report.over_budget << " budget_exceeded\n";
  return os.str();
}

}  // namespace diagnoscope
