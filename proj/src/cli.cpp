#include "diagnoscope/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "diagnoscope/connectivity.hpp"
#include "diagnoscope/error.hpp"
#include "diagnoscope/families.hpp"
#include "diagnoscope/io.hpp"
#include "diagnoscope/report.hpp"
#include "diagnoscope/syndrome.hpp"
#include "diagnoscope/verification.hpp"

namespace diagnoscope {

namespace {

int to_int(const std::string& word, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw InvalidArgument(std::string(what) + " must be an integer, got \"" + word + "\"");
  }
  return value;
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

/// Shared resource flags.
struct Limits {
  std::optional<int> cap;
  unsigned jobs = 1;

  Budget budget() const {
    Budget b;
    std::optional<int> limit = cap;
    if (!limit) {
      if (const char* env = std::getenv("DIAGNOSCOPE_CAP"); env && *env) limit = to_int(env, "DIAGNOSCOPE_CAP");
    }
    if (limit) {
      if (*limit < 1 || *limit > kMaxVertices) {
        throw InvalidArgument("vertex cap must lie in 1.." + std::to_string(kMaxVertices));
      }
      b.max_vertices = *limit;
    }
    b.jobs = std::max(1U, jobs);
    return b;
  }

  void attach(CLI::App* app) {
    app->add_option("--cap", cap, "largest graph accepted (default 64, or DIAGNOSCOPE_CAP)");
    app->add_option("--jobs", jobs, "worker threads; results do not depend on it")->check(CLI::PositiveNumber);
  }
};

std::vector<ReadGraph> load(const std::string& path, std::istream& in, bool strict, const Budget& budget,
                            std::ostream& err) {
  auto graphs = read_graphs(read_source(path, in), EdgeListOptions{strict});
  for (const auto& g : graphs) {
    for (const auto& w : g.warnings) err << "warning: " << w << '\n';
    check_vertex_cap(g.graph, budget);
  }
  return graphs;
}

VertexSet parse_vertices(const std::string& text, int n) {
  VertexSet out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    const int v = to_int(item, "vertex id");
    if (v < 0 || v >= n) throw InvalidArgument("vertex " + item + " out of range 0.." + std::to_string(n - 1));
    out.insert(v);
  }
  return out;
}

std::string display_name(const std::string& name, const std::string& path, std::size_t index, std::size_t count) {
  std::string base = !name.empty() ? name : path == "-" ? "stdin" : path;
  if (count > 1) base += "#" + std::to_string(index + 1);
  return base;
}

// gen

struct GenArgs {
  std::string kind;
  std::vector<std::string> params;
  std::string format = "graph6";
  std::optional<std::uint64_t> seed;
  std::string spec_path;
  bool emit_spec = false;
};

std::vector<int> ints(const std::vector<std::string>& params, std::size_t count, const std::string& kind) {
  if (count != static_cast<std::size_t>(-1) && params.size() != count) {
    throw InvalidArgument(kind + " takes " + std::to_string(count) + " integer parameter(s)");
  }
  std::vector<int> out;
  for (const auto& p : params) out.push_back(to_int(p, "parameter"));
  return out;
}

int run_gen(const GenArgs& a, std::istream& in, std::ostream& out) {
  Graph g;
  std::optional<GammaSpec> spec;
  const auto& k = a.kind;
  if (k == "hypercube") {
    const auto p = ints(a.params, 1, k);
    if (p[0] < 0 || p[0] > 6) throw InvalidArgument("hypercube dimension must lie in 0..6");
    g = hypercube(p[0]);
  } else if (k == "complete") {
    g = complete_graph(ints(a.params, 1, k)[0]);
  } else if (k == "bipartite") {
    const auto p = ints(a.params, 2, k);
    g = complete_bipartite(p[0], p[1]);
  } else if (k == "cycle") {
    g = cycle_graph(ints(a.params, 1, k)[0]);
  } else if (k == "petersen") {
    ints(a.params, 0, k);
    g = petersen_graph();
  } else if (k == "circulant") {
    auto p = ints(a.params, static_cast<std::size_t>(-1), k);
    if (p.empty()) throw InvalidArgument("circulant takes n followed by its connections");
    const int n = p.front();
    p.erase(p.begin());
    g = circulant_graph(n, p);
  } else if (k == "prism") {
    g = prism_graph(ints(a.params, 1, k)[0]);
  } else if (k == "random") {
    const auto p = ints(a.params, 2, k);
    g = random_t_connected(p[0], p[1], a.seed.value_or(1));
  } else if (k == "gamma") {
    if (!a.spec_path.empty()) {
      if (!a.params.empty()) throw InvalidArgument("gamma takes either --spec or index delta l");
      spec = parse_gamma_spec(read_source(a.spec_path, in));
    } else {
      const auto p = ints(a.params, 3, k);
      if (a.seed) {
        std::mt19937_64 rng(*a.seed);
        spec = random_gamma_spec(p[0], p[1], p[2], rng);
      } else {
        spec = canonical_gamma_spec(p[0], p[1], p[2]);
      }
    }
    g = make_gamma(*spec);
  } else {
    throw InvalidArgument("unknown graph kind \"" + k +
                          "\" (hypercube, complete, bipartite, cycle, petersen, circulant, prism, random, gamma)");
  }
  if (a.emit_spec) {
    if (!spec) throw InvalidArgument("--emit-spec applies to gamma only");
    out << to_text(*spec);
  } else if (a.format == "edge-list") {
    out << emit_edge_list(g);
  } else {
    out << emit_graph6(g) << '\n';
  }
  return exit_code::ok;
}

// analyze

struct AnalyzeArgs {
  std::string input = "-";
  std::string model = "both";
  int h_max = 0;
  std::string method = "auto";
  std::optional<std::uint64_t> seed;
  std::string name;
  bool strict = false;
  Limits limits;
};

std::vector<DiagModel> parse_models(const std::string& text) {
  if (text == "both") return {DiagModel::PMC, DiagModel::MMstar};
  if (const auto m = parse_model(text)) return {*m};
  throw InvalidArgument("--model must be pmc, mm or both");
}

int run_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  AnalyzeOptions options;
  options.models = parse_models(a.model);
  if (a.h_max < 0) throw InvalidArgument("--h-max must be non-negative");
  options.h_max = a.h_max;
  const auto method = parse_method(a.method);
  if (!method) throw InvalidArgument("--method must be brute, bounds or auto");
  options.method = *method;
  options.budget = a.limits.budget();
  const auto graphs = load(a.input, in, a.strict, options.budget, err);
  Json output = Json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto name = display_name(a.name, a.input, i, graphs.size());
    output.push_back(to_json(analyze(graphs[i].graph, name, graphs[i].format, options)));
  }
  out << (graphs.size() == 1 ? output.front() : output).dump(2) << '\n';
  return exit_code::ok;
}

// recognize

struct InputArgs {
  std::string input = "-";
  bool strict = false;
  Limits limits;
};

Json recognition_json(const Graph& g, const Budget& budget) {
  const auto result = recognize_exceptional(g, budget);
  Json j{{"member", result.member}};
  if (result.index) j["index"] = *result.index;
  j["matches"] = result.matches;
  j["status"] = result.status == RecognitionStatus::decided ? "decided" : "cap_exceeded";
  const auto exclusion = exclude_exceptional(g, budget);
  j["exclusion"] = to_string(exclusion.reason);
  if (result.witness) {
    j["witness"] = Json{{"spec", to_text(result.witness->spec)}, {"placement", result.witness->placement}};
  }
  return j;
}

int run_recognize(const InputArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const Budget budget = a.limits.budget();
  const auto graphs = load(a.input, in, a.strict, budget, err);
  Json output = Json::array();
  for (const auto& g : graphs) output.push_back(recognition_json(g.graph, budget));
  out << (graphs.size() == 1 ? output.front() : output).dump(2) << '\n';
  return exit_code::ok;
}

// syndrome

struct SyndromeArgs {
  std::string input = "-";
  std::string model = "pmc";
  std::string faults;
  std::string policy = "random";
  std::uint64_t seed = 1;
  std::optional<int> t;
  std::string decode_path;
  bool strict = false;
  Limits limits;
};

Json sets_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(to_json(s));
  return out;
}

Json lines_json(const std::string& text) {
  Json out = Json::array();
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) out.push_back(line);
  return out;
}

int run_syndrome(const SyndromeArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto model = parse_model(a.model);
  if (!model) throw InvalidArgument("--model must be pmc or mm");
  const Budget budget = a.limits.budget();
  const auto graphs = load(a.input, in, a.strict, budget, err);
  if (graphs.size() != 1) throw InvalidArgument("syndrome takes exactly one graph");
  const Graph& g = graphs.front().graph;

  Json j{{"model", std::string(to_string(*model))}};
  if (!a.decode_path.empty()) {
    const Syndrome s = parse_syndrome(read_source(a.decode_path, in), *model);
    const int t = a.t.value_or(diagnosability_cap(g));
    const auto candidates = decode(g, s, t, budget);
    j["t"] = t;
    j["candidates"] = sets_json(candidates);
    j["unique"] = candidates.size() == 1;
    out << j.dump(2) << '\n';
    return exit_code::ok;
  }

  const VertexSet faults = parse_vertices(a.faults, g.order());
  const int t = a.t.value_or(faults.size());
  j["faults"] = to_json(faults);
  j["policy"] = a.policy;
  j["t"] = t;
  AdversaryPolicy policy;
  if (a.policy == "random") {
    policy = AdversaryPolicy::random(a.seed);
    j["seed"] = a.seed;
  } else if (a.policy == "zeros") {
    policy = AdversaryPolicy::zeros();
  } else if (a.policy == "ones") {
    policy = AdversaryPolicy::ones();
  } else if (a.policy == "exhaustive") {
    policy = AdversaryPolicy::exhaustive();
  } else {
    throw InvalidArgument("--policy must be random, zeros, ones or exhaustive");
  }

  if (policy.kind != AdversaryPolicy::Kind::exhaustive) {
    const Syndrome s = generate_syndrome(g, faults, *model, policy);
    const auto candidates = decode(g, s, t, budget);
    j["syndrome"] = lines_json(to_text(s));
    j["candidates"] = sets_json(candidates);
    j["injected_found"] = std::find(candidates.begin(), candidates.end(), faults) != candidates.end();
    j["unique"] = candidates.size() == 1;
  } else {
    long long count = 0;
    long long ambiguous = 0;
    bool injected_always = true;
    std::vector<VertexSet> seen;
    for_each_syndrome(g, faults, *model, policy, budget, [&](const Syndrome& s) {
      ++count;
      const auto candidates = decode(g, s, t, budget);
      if (candidates.size() != 1) ++ambiguous;
      if (std::find(candidates.begin(), candidates.end(), faults) == candidates.end()) injected_always = false;
      for (VertexSet c : candidates) {
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
      }
      return true;
    });
    std::sort(seen.begin(), seen.end(), [](VertexSet x, VertexSet y) {
      return x.size() != y.size() ? x.size() < y.size() : lex_less(x, y);
    });
    j["adversary_bits"] = adversary_bits(g, faults, *model);
    j["syndromes"] = count;
    j["ambiguous_syndromes"] = ambiguous;
    j["injected_found"] = injected_always;
    j["unique"] = ambiguous == 0;
    j["candidates"] = sets_json(seen);
  }
  out << j.dump(2) << '\n';
  return exit_code::ok;
}

// verify

struct VerifyArgs {
  std::string claims;
  std::string format = "table";
  int h_max = 3;
  bool list_claims = false;
  Limits limits;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.list_claims) {
    for (const auto& id : claim_ids()) out << id << '\n';
    return exit_code::ok;
  }
  SuiteOptions options;
  std::stringstream stream(a.claims);
  std::string id;
  while (std::getline(stream, id, ',')) {
    if (!id.empty()) options.claims.push_back(id);
  }
  if (a.h_max < 0) throw InvalidArgument("--h-max must be non-negative");
  options.h_max = a.h_max;
  options.budget = a.limits.budget();
  if (a.format != "table" && a.format != "json") throw InvalidArgument("--format must be table or json");
  const auto report = run_suite(default_corpus(), options);
  if (a.format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_table(report);
  }
  return report.failed == 0 ? exit_code::ok : exit_code::verify_failed;
}

// paths

struct PathsArgs {
  std::string input = "-";
  std::vector<int> pair;
  bool strict = false;
  Limits limits;
};

int run_paths(const PathsArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const Budget budget = a.limits.budget();
  const auto graphs = load(a.input, in, a.strict, budget, err);
  if (graphs.size() != 1) throw InvalidArgument("paths takes exactly one graph");
  const Graph& g = graphs.front().graph;
  if (g.order() == 0) throw InvalidArgument("connectivity of the null graph");
  const auto conn = vertex_connectivity(g);
  Json j{{"kappa", conn.kappa},
         {"delta", conn.delta},
         {"maximally_connected", conn.maximally_connected},
         {"witness_cut", to_json(conn.witness_cut)}};
  if (g.order() >= 2) {
    const auto c = max_common_neighbors(g);
    j["max_common_neighbors"] = Json{{"value", c.value}, {"pair", Json::array({c.u, c.v})}};
  }
  if (!a.pair.empty()) {
    if (a.pair.size() != 2) throw InvalidArgument("--pair takes two vertex ids");
    for (int v : a.pair) {
      if (v < 0 || v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
    const auto paths = internally_disjoint_paths(g, a.pair[0], a.pair[1]);
    j["pair"] = Json{{"u", a.pair[0]}, {"v", a.pair[1]}, {"count", paths.count}, {"paths", paths.paths}};
  }
  out << j.dump(2) << '\n';
  return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diagnosability and edge-fault tolerant diagnosability under the PMC and MM* models", "diagnoscope"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a standard graph or an exceptional-family member");
  gen_cmd->add_option("kind", gen.kind, "hypercube d | complete n | bipartite a b | cycle n | petersen | "
                                        "circulant n c... | prism n | random n t | gamma i delta l")
      ->required();
  gen_cmd->add_option("params", gen.params, "integer parameters");
  gen_cmd->add_option("--format", gen.format, "graph6 or edge-list")->check(CLI::IsMember({"graph6", "edge-list"}));
  gen_cmd->add_option("--seed", gen.seed, "seed for random graphs and random gamma specs");
  gen_cmd->add_option("--spec", gen.spec_path, "gamma spec file");
  gen_cmd->add_flag("--emit-spec", gen.emit_spec, "print the gamma spec instead of the graph");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "diagnosability report as JSON");
  analyze_cmd->add_option("input", analyze_args.input, "edge-list or graph6 file, - for stdin");
  analyze_cmd->add_option("--model", analyze_args.model, "pmc, mm or both");
  analyze_cmd->add_option("--h-max", analyze_args.h_max, "largest edge-fault budget");
  analyze_cmd->add_option("--method", analyze_args.method, "brute, bounds or auto");
  analyze_cmd->add_option("--seed", analyze_args.seed, "accepted for interface stability; the analysis is deterministic");
  analyze_cmd->add_option("--name", analyze_args.name, "graph name in the report");
  analyze_cmd->add_flag("--strict", analyze_args.strict, "reject duplicate edges");
  analyze_args.limits.attach(analyze_cmd);

  InputArgs recognize_args;
  auto* recognize_cmd = app.add_subcommand("recognize", "exceptional-family membership");
  recognize_cmd->add_option("input", recognize_args.input, "edge-list or graph6 file, - for stdin");
  recognize_cmd->add_flag("--strict", recognize_args.strict, "reject duplicate edges");
  recognize_args.limits.attach(recognize_cmd);

  SyndromeArgs syndrome_args;
  auto* syndrome_cmd = app.add_subcommand("syndrome", "inject faults, generate a syndrome and decode it");
  syndrome_cmd->add_option("input", syndrome_args.input, "edge-list or graph6 file, - for stdin");
  syndrome_cmd->add_option("--model", syndrome_args.model, "pmc or mm");
  syndrome_cmd->add_option("--faults", syndrome_args.faults, "comma-separated faulty vertices");
  syndrome_cmd->add_option("--policy", syndrome_args.policy, "random, zeros, ones or exhaustive");
  syndrome_cmd->add_option("--seed", syndrome_args.seed, "seed of the random policy");
  syndrome_cmd->add_option("--t", syndrome_args.t, "decoding budget (default |faults|)");
  syndrome_cmd->add_option("--decode", syndrome_args.decode_path, "decode this syndrome file instead");
  syndrome_cmd->add_flag("--strict", syndrome_args.strict, "reject duplicate edges");
  syndrome_args.limits.attach(syndrome_cmd);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check every claim against brute force on the default corpus");
  verify_cmd->add_option("--claims", verify_args.claims, "comma-separated claim ids (default all)");
  verify_cmd->add_option("--format", verify_args.format, "table or json");
  verify_cmd->add_option("--h-max", verify_args.h_max, "largest h swept (capped at delta)");
  verify_cmd->add_flag("--list-claims", verify_args.list_claims, "print the claim ids");
  verify_args.limits.attach(verify_cmd);

  PathsArgs paths_args;
  auto* paths_cmd = app.add_subcommand("paths", "vertex connectivity and internally-disjoint paths");
  paths_cmd->add_option("input", paths_args.input, "edge-list or graph6 file, - for stdin");
  paths_cmd->add_option("--pair", paths_args.pair, "two vertices to connect")->expected(2)->allow_extra_args(false);
  paths_cmd->add_flag("--strict", paths_args.strict, "reject duplicate edges");
  paths_args.limits.attach(paths_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, in, out);
    if (*analyze_cmd) return run_analyze(analyze_args, in, out, err);
    if (*recognize_cmd) return run_recognize(recognize_args, in, out, err);
    if (*syndrome_cmd) return run_syndrome(syndrome_args, in, out, err);
    if (*verify_cmd) return run_verify(verify_args, out);
    if (*paths_cmd) return run_paths(paths_args, in, out, err);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::format;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::cap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace diagnoscope
