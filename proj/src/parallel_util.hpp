#pragma once

// Minimal block-partitioned parallel loop. Workers get disjoint index
// ranges, so callers that write into preallocated per-index slots need no
// locking and results are independent of the worker count.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace dopoly::detail {

template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& body) {
  if (n == 0) return;
  if (jobs <= 1 || n == 1) {
    body(std::size_t{0}, n);
    return;
  }
  unsigned workers = std::min<std::size_t>(jobs, n);
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace dopoly::detail
