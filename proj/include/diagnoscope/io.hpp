#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diagnoscope/families.hpp"
#include "diagnoscope/graph.hpp"

namespace diagnoscope {

struct EdgeListOptions {
  /// Reject repeated edges instead of collapsing them with a warning.
  bool strict = false;
};

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

/// "n m" header, then m lines "u v" with 0-based ids; blank lines and lines starting with '#' are
/// skipped. Throws FormatError carrying the 1-based line number.
ParsedGraph parse_edge_list(std::string_view text, EdgeListOptions options = {});
std::string emit_edge_list(const Graph& g);

/// One graph6 line (an optional ">>graph6<<" prefix is accepted). Throws FormatError carrying the
/// 0-based byte offset of the offending byte.
Graph parse_graph6(std::string_view line);
/// graph6 encoding without a trailing newline.
std::string emit_graph6(const Graph& g);

enum class GraphFormat { edge_list, graph6 };

std::string_view to_string(GraphFormat format);

struct ReadGraph {
  Graph graph;
  GraphFormat format = GraphFormat::edge_list;
  std::vector<std::string> warnings;
};

/// Detects the format: text whose first meaningful line starts with a digit is an edge list,
/// anything else a single graph6 line.
ReadGraph read_graph(std::string_view text, EdgeListOptions options = {});

/// Like read_graph, but a graph6 file yields one graph per non-blank line.
std::vector<ReadGraph> read_graphs(std::string_view text, EdgeListOptions options = {});

/// Line-oriented GammaSpec text:
///
///   gamma <index> <delta> <l>
///   core <u>-<v> ...
///   side_a <u>-<v> ...        (Γ3)
///   side_b <u>-<v> ...        (Γ3)
///   links <u>-<v> ...         (Γ2, Γ3; layout ids)
///   pick_a <0|1> ...          (Γ2, Γ3)
///   pick_b <0|1> ...          (Γ3)
///   extra <i> <j>             (Γ4)
///   removed <u>-<v> ...       (Γ4; layout ids)
///   attach <v>,<v>,... ...    (Γ5; one group per independent vertex)
///
/// Keys other than `gamma` may be omitted when empty; `#` starts a comment line.
std::string to_text(const GammaSpec& spec);
GammaSpec parse_gamma_spec(std::string_view text);

}  // namespace diagnoscope
