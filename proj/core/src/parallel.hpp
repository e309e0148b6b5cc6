#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace specpair::detail {

// Runs fn(i) for i in [0, n) on up to hardware_concurrency threads. Each
// index is visited exactly once; fn must only write state owned by i.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t min_per_thread = 8, std::size_t max_workers = 0) {
  std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (max_workers > 0) hw = std::min(hw, max_workers);
  const std::size_t workers = std::min(hw, std::max<std::size_t>(1, n / min_per_thread));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
}

}  // namespace specpair::detail
