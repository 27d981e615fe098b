#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace landau::detail {

// Runs body(begin, end) over contiguous chunks of [0, count). Every index is
// written by exactly one chunk, so results do not depend on the partition.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  constexpr std::size_t min_chunk = 256;
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, (count + min_chunk - 1) / min_chunk);
  if (workers <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

}  // namespace landau::detail
