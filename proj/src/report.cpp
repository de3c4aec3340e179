#include "diagnoscope/report.hpp"

#include <algorithm>
#include <cctype>

#include "diagnoscope/connectivity.hpp"
#include "diagnoscope/families.hpp"

namespace diagnoscope {

std::optional<AnalyzeMethod> parse_method(std::string_view text) {
  if (text == "brute") return AnalyzeMethod::brute;
  if (text == "bounds") return AnalyzeMethod::bounds;
  if (text == "auto") return AnalyzeMethod::automatic;
  return std::nullopt;
}

DiagReport analyze(const Graph& g, std::string name, GraphFormat format, const AnalyzeOptions& options) {
  check_vertex_cap(g, options.budget);
  DiagReport report;
  report.name = std::move(name);
  report.n = g.order();
  report.m = g.size();
  report.format = format;
  report.graph6 = emit_graph6(g);
  const auto conn = vertex_connectivity(g);
  report.kappa = conn.kappa;
  report.delta = conn.delta;
  report.max_common_neighbors = g.order() >= 2 ? max_common_neighbors(g).value : 0;
  report.regular = degree_profile(g).regular;
  report.maximally_connected = conn.maximally_connected;

  const auto exclusion = exclude_exceptional(g, options.budget);
  report.family.member = exclusion.reason == Exclusion::member;
  report.family.index = exclusion.member_index;
  report.family.status = exclusion.reason == Exclusion::undecided ? "cap_exceeded" : "decided";

  auto models = options.models;
  std::sort(models.begin(), models.end());
  models.erase(std::unique(models.begin(), models.end()), models.end());
  for (DiagModel model : models) {
    for (int h = 0; h <= options.h_max; ++h) {
      ResultRow row;
      row.model = model;
      row.h = h;
      row.bounds = theoretical_bounds(g, h, model, options.budget);
      const bool use_bounds = options.method != AnalyzeMethod::brute && row.bounds.exact.has_value();
      if (use_bounds) {
        row.value = *row.bounds.exact;
        row.method = ToleranceMethod::theorem;
      } else if (options.method != AnalyzeMethod::bounds) {
        const auto result = edge_tolerable_diagnosability(g, h, model, options.budget);
        row.value = result.value;
        row.method = result.method;
        row.worst_scenario = result.worst_scenario;
      }
      report.results.push_back(std::move(row));
    }
  }
  return report;
}

Json to_json(VertexSet set) {
  Json out = Json::array();
  for (Vertex v : set) out.push_back(v);
  return out;
}

Json to_json(const EdgeSet& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
  return out;
}

Json to_json(const BoundReport& bounds) {
  Json out = Json::object();
  auto bound = [](const Bound& b) { return Json{{"value", b.value}, {"by", b.by}}; };
  if (bounds.lower) out["lower"] = bound(*bounds.lower);
  if (bounds.upper) out["upper"] = bound(*bounds.upper);
  if (bounds.exact) out["exact"] = *bounds.exact;
  Json rows = Json::array();
  for (const auto& row : bounds.conditions) {
    rows.push_back(Json{{"claim", row.claim}, {"condition", row.condition}, {"holds", row.holds}});
  }
  out["conditions"] = std::move(rows);
  out["no_theorem_applies"] = bounds.no_theorem_applies;
  return out;
}

Json to_json(const DiagReport& report) {
  Json family{{"member", report.family.member}};
  if (report.family.index) family["index"] = *report.family.index;
  family["status"] = report.family.status;

  Json results = Json::array();
  for (const auto& row : report.results) {
    Json r{{"model", std::string(to_string(row.model))}, {"h", row.h}};
    if (row.value) r["value"] = *row.value;
    if (row.method) r["method"] = std::string(to_string(*row.method));
    if (row.worst_scenario) r["worst_scenario"] = to_json(*row.worst_scenario);
    r["bounds"] = to_json(row.bounds);
    results.push_back(std::move(r));
  }

  return Json{
      {"graph",
       {{"name", report.name},
        {"n", report.n},
        {"m", report.m},
        {"format_echo", {{"format", std::string(to_string(report.format))}, {"graph6", report.graph6}}}}},
      {"kappa", report.kappa},
      {"delta", report.delta},
      {"max_common_neighbors", report.max_common_neighbors},
      {"regular", report.regular},
      {"maximally_connected", report.maximally_connected},
      {"exceptional_family", std::move(family)},
      {"results", std::move(results)},
  };
}

}  // namespace diagnoscope
