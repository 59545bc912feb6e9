#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace vct {

/// Runs fn(0..count-1) across up to `threads` workers. Callers collect
/// results into preallocated index slots so output order stays deterministic
/// regardless of scheduling.
inline void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  int workers = std::min(threads, count);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace vct
