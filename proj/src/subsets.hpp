#pragma once

#include <vector>

#include "diagnoscope/graph.hpp"

namespace diagnoscope::detail {

/// All k-subsets of {0..n-1} in lexicographic order of their sorted member lists.
inline std::vector<VertexSet> combinations(int n, int k) {
  std::vector<VertexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<Vertex> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    VertexSet s;
    for (Vertex v : pick) s.insert(v);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// Subsets of size <= k ordered by size, then lexicographically.
inline std::vector<VertexSet> subsets_up_to(int n, int k) {
  std::vector<VertexSet> out;
  for (int size = 0; size <= k && size <= n; ++size) {
    auto level = combinations(n, size);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace diagnoscope::detail
