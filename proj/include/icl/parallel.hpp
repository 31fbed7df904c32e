#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace icl {

// Calls fn(index, worker) for every index in [0, count) on up to `threads`
// workers. Callers reduce per-worker state themselves so that results do not
// depend on scheduling. The first exception thrown by fn is rethrown.
template <class Fn>
void parallel_for(std::uint64_t count, int threads, Fn&& fn) {
  const int workers = static_cast<int>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(count, static_cast<std::uint64_t>(std::max(threads, 1)))));
  if (workers == 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = next++; i < count; i = next++) fn(i, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

inline int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace icl
