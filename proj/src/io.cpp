#include "diagnoscope/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "diagnoscope/error.hpp"

namespace diagnoscope {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

bool skippable(std::string_view line) {
  const auto words = split_words(line);
  return words.empty() || words.front().front() == '#';
}

bool to_int(std::string_view word, long long& out) {
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what, line);
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text, EdgeListOptions options) {
  const auto lines = split_lines(text);
  ParsedGraph out;
  long long n = -1;
  long long m = -1;
  long long seen = 0;
  EdgeSet distinct;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t number = i + 1;
    if (skippable(lines[i])) continue;
    const auto words = split_words(lines[i]);
    long long a = 0;
    long long b = 0;
    if (words.size() != 2 || !to_int(words[0], a) || !to_int(words[1], b)) {
      line_error(number, n < 0 ? "expected header \"n m\"" : "expected \"u v\"");
    }
    if (n < 0) {
      if (a < 0 || b < 0) line_error(number, "negative count in header");
      if (a > kMaxVertices) {
        throw CapExceeded("line " + std::to_string(number) + ": " + std::to_string(a) + " vertices exceed the limit of " +
                          std::to_string(kMaxVertices));
      }
      n = a;
      m = b;
      continue;
    }
    if (seen == m) line_error(number, "more edge lines than the header's m = " + std::to_string(m));
    ++seen;
    if (a < 0 || b < 0 || a >= n || b >= n) line_error(number, "vertex id out of range 0.." + std::to_string(n - 1));
    if (a == b) line_error(number, "self-loop at vertex " + std::to_string(a));
    const Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (std::find(distinct.begin(), distinct.end(), e) != distinct.end()) {
      if (options.strict) line_error(number, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
      out.warnings.push_back("line " + std::to_string(number) + ": duplicate edge " + std::to_string(e.u) + " " +
                             std::to_string(e.v) + " ignored");
      continue;
    }
    distinct.push_back(e);
  }
  if (n < 0) line_error(lines.size(), "missing header \"n m\"");
  if (seen < m) {
    line_error(lines.size(), "header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
  }
  out.graph = from_edge_set(static_cast<int>(n), std::move(distinct));
  return out;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

namespace {

constexpr int kBias = 63;

[[noreturn]] void byte_error(std::size_t offset, const std::string& what) {
  throw FormatError("graph6 byte " + std::to_string(offset) + ": " + what, offset);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t base = 0;
  if (line.starts_with(header)) base = header.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  auto byte = [&](std::size_t i) -> int {
    if (i >= line.size()) byte_error(i, "truncated input");
    const int c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > kBias + 63) byte_error(i, "byte value " + std::to_string(c) + " outside 63..126");
    return c - kBias;
  };
  std::size_t pos = base;
  long long n = byte(pos++);
  if (n == 63) {
    // 18-bit form; the 36-bit form starts with a second 126 and is far beyond any supported size
    if (byte(pos) == 63) throw CapExceeded("graph6 vertex count exceeds the limit of " + std::to_string(kMaxVertices));
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte(pos++);
  }
  if (n > kMaxVertices) throw CapExceeded("graph6 vertex count " + std::to_string(n) + " exceeds the limit of " + std::to_string(kMaxVertices));
  const long long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() < pos + bytes) byte_error(line.size(), "truncated bit stream");
  if (line.size() > pos + bytes) byte_error(pos + bytes, "trailing bytes after the bit stream");
  EdgeSet edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = byte(pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return from_edge_set(static_cast<int>(n), std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

std::string_view to_string(GraphFormat format) { return format == GraphFormat::graph6 ? "graph6" : "edge-list"; }

ReadGraph read_graph(std::string_view text, EdgeListOptions options) {
  for (std::string_view line : split_lines(text)) {
    if (skippable(line)) continue;
    const auto words = split_words(line);
    const char first = words.front().front();
    if (first >= '0' && first <= '9') {
      auto parsed = parse_edge_list(text, options);
      return {std::move(parsed.graph), GraphFormat::edge_list, std::move(parsed.warnings)};
    }
    // offset of the line inside the text so graph6 byte positions stay absolute
    const std::size_t offset = static_cast<std::size_t>(words.front().data() - text.data());
    try {
      return {parse_graph6(words.front()), GraphFormat::graph6, {}};
    } catch (const FormatError& e) {
      throw FormatError(e.what(), offset + e.location());
    }
  }
  throw FormatError("line 1: empty input", 1);
}

std::vector<ReadGraph> read_graphs(std::string_view text, EdgeListOptions options) {
  std::vector<ReadGraph> out;
  out.push_back(read_graph(text, options));
  if (out.front().format == GraphFormat::edge_list) return out;
  out.clear();
  for (std::string_view line : split_lines(text)) {
    if (skippable(line)) continue;
    const auto word = split_words(line).front();
    const std::size_t offset = static_cast<std::size_t>(word.data() - text.data());
    try {
      out.push_back({parse_graph6(word), GraphFormat::graph6, {}});
    } catch (const FormatError& e) {
      throw FormatError(e.what(), offset + e.location());
    }
  }
  return out;
}

// GammaSpec text.

namespace {

void put_edges(std::ostream& os, const char* key, const EdgeSet& edges) {
  if (edges.empty()) return;
  os << key;
  for (const Edge& e : edges) os << ' ' << e.u << '-' << e.v;
  os << '\n';
}

void put_ints(std::ostream& os, const char* key, const std::vector<int>& values) {
  if (values.empty()) return;
  os << key;
  for (int v : values) os << ' ' << v;
  os << '\n';
}

}  // namespace

std::string to_text(const GammaSpec& spec) {
  std::ostringstream os;
  os << "gamma " << spec.index << ' ' << spec.delta << ' ' << spec.l << '\n';
  put_edges(os, "core", spec.core);
  put_edges(os, "side_a", spec.side_a);
  put_edges(os, "side_b", spec.side_b);
  put_edges(os, "links", spec.links);
  put_ints(os, "pick_a", spec.pick_a);
  put_ints(os, "pick_b", spec.pick_b);
  if (spec.index == 4) os << "extra " << spec.extra.first << ' ' << spec.extra.second << '\n';
  put_edges(os, "removed", spec.removed);
  if (!spec.attach.empty()) {
    os << "attach";
    for (VertexSet a : spec.attach) {
      os << ' ';
      bool first = true;
      for (Vertex v : a) {
        os << (first ? "" : ",") << v;
        first = false;
      }
    }
    os << '\n';
  }
  return os.str();
}

GammaSpec parse_gamma_spec(std::string_view text) {
  GammaSpec spec;
  bool have_header = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t number = i + 1;
    if (skippable(lines[i])) continue;
    const auto words = split_words(lines[i]);
    const std::string_view key = words.front();
    auto integer = [&](std::string_view w) {
      long long v = 0;
      if (!to_int(w, v) || v < -1'000'000 || v > 1'000'000) line_error(number, "not an integer: " + std::string(w));
      return static_cast<int>(v);
    };
    auto edge = [&](std::string_view w) {
      const auto dash = w.find('-');
      if (dash == std::string_view::npos || dash == 0) line_error(number, "expected u-v, got " + std::string(w));
      return Edge(integer(w.substr(0, dash)), integer(w.substr(dash + 1)));
    };
    auto edges = [&] {
      EdgeSet out;
      for (std::size_t k = 1; k < words.size(); ++k) out.push_back(edge(words[k]));
      std::sort(out.begin(), out.end());
      return out;
    };
    auto ints = [&] {
      std::vector<int> out;
      for (std::size_t k = 1; k < words.size(); ++k) out.push_back(integer(words[k]));
      return out;
    };
    if (key == "gamma") {
      if (words.size() != 4) line_error(number, "expected \"gamma <index> <delta> <l>\"");
      spec.index = integer(words[1]);
      spec.delta = integer(words[2]);
      spec.l = integer(words[3]);
      have_header = true;
    } else if (!have_header) {
      line_error(number, "spec must start with a gamma line");
    } else if (key == "core") {
      spec.core = edges();
    } else if (key == "side_a") {
      spec.side_a = edges();
    } else if (key == "side_b") {
      spec.side_b = edges();
    } else if (key == "links") {
      spec.links = edges();
    } else if (key == "pick_a") {
      spec.pick_a = ints();
    } else if (key == "pick_b") {
      spec.pick_b = ints();
    } else if (key == "extra") {
      const auto v = ints();
      if (v.size() != 2) line_error(number, "extra takes two independent-vertex indices");
      spec.extra = {v[0], v[1]};
    } else if (key == "removed") {
      spec.removed = edges();
    } else if (key == "attach") {
      for (std::size_t k = 1; k < words.size(); ++k) {
        VertexSet a;
        std::string_view rest = words[k];
        while (!rest.empty()) {
          const auto comma = rest.find(',');
          const int v = integer(rest.substr(0, comma));
          if (v < 0 || v >= kMaxVertices) line_error(number, "attach vertex out of range");
          a.insert(v);
          rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        spec.attach.push_back(a);
      }
    } else {
      line_error(number, "unknown key " + std::string(key));
    }
  }
  if (!have_header) line_error(lines.size(), "missing gamma line");
  return spec;
}

}  // namespace diagnoscope
