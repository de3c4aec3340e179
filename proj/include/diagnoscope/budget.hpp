#pragma once

#include "diagnoscope/graph.hpp"

namespace diagnoscope {

/// Caps for the exponential routines. Every brute-force entry point checks its input against these
/// and throws CapExceeded rather than running away.
struct Budget {
  /// Largest graph any brute-force search accepts (never above kMaxVertices).
  int max_vertices = kMaxVertices;
  /// Largest graph the exceptional-family recognizer decides; beyond it the status is cap_exceeded.
  int recognizer_max_vertices = 20;
  /// Most adversary-controlled syndrome bits the exhaustive policy will enumerate.
  int exhaustive_max_bits = 16;
  /// Most edge-fault scenarios a tolerance search will enumerate.
  long long max_scenarios = 2'000'000;
  /// Worker threads for data-parallel enumeration; results do not depend on it.
  unsigned jobs = 1;
};

/// Throws CapExceeded when g is larger than budget.max_vertices.
void check_vertex_cap(const Graph& g, const Budget& budget);

}  // namespace diagnoscope
