#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace emsim {

// Runs fn(i) for i in [0, n).  Work items must write only to their own output
// slots; combined with per-index derived RNG streams this makes results
// independent of the schedule.  threads <= 1 runs inline.
template <class Fn>
void parallel_for(int64_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  int workers = static_cast<int>(std::min<int64_t>(threads, n));
  std::atomic<int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int64_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace emsim
