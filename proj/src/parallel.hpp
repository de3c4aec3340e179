#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace diagnoscope::detail {

/// Runs body(begin, end) over `jobs` contiguous slices of [0, count). Slice order is fixed so callers
/// can merge per-slice results deterministically.
template <class Body>
void for_slices(std::size_t count, unsigned jobs, Body&& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (workers == 1) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  const std::size_t step = (count + workers - 1) / workers;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * step);
    const std::size_t end = std::min(count, begin + step);
    threads.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
}

}  // namespace diagnoscope::detail
