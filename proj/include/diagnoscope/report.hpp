#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "diagnoscope/budget.hpp"
#include "diagnoscope/diagnosis.hpp"
#include "diagnoscope/graph.hpp"
#include "diagnoscope/io.hpp"
#include "diagnoscope/tolerance.hpp"

namespace diagnoscope {

using Json = nlohmann::ordered_json;

enum class AnalyzeMethod { brute, bounds, automatic };

std::optional<AnalyzeMethod> parse_method(std::string_view text);

struct AnalyzeOptions {
  std::vector<DiagModel> models{DiagModel::PMC, DiagModel::MMstar};
  int h_max = 0;
  AnalyzeMethod method = AnalyzeMethod::automatic;
  Budget budget;
};

struct ResultRow {
  DiagModel model = DiagModel::PMC;
  int h = 0;
  /// Absent when only bounds were requested and they do not meet.
  std::optional<int> value;
  std::optional<ToleranceMethod> method;
  std::optional<EdgeSet> worst_scenario;
  BoundReport bounds;
};

struct FamilyStatus {
  bool member = false;
  std::optional<int> index;
  /// "decided" or "cap_exceeded".
  std::string status = "decided";
};

struct DiagReport {
  std::string name;
  int n = 0;
  int m = 0;
  GraphFormat format = GraphFormat::graph6;
  std::string graph6;
  int kappa = 0;
  int delta = 0;
  int max_common_neighbors = 0;
  bool regular = false;
  bool maximally_connected = false;
  FamilyStatus family;
  /// Sorted by (model, h).
  std::vector<ResultRow> results;
};

DiagReport analyze(const Graph& g, std::string name, GraphFormat format, const AnalyzeOptions& options);

Json to_json(const DiagReport& report);
Json to_json(const BoundReport& bounds);
Json to_json(const EdgeSet& edges);
Json to_json(VertexSet set);

}  // namespace diagnoscope
