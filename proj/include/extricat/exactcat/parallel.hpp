#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace extricat {

// Worker count for verification sweeps; 0 means hardware concurrency.
inline int& worker_count() {
  static int n = 0;
  return n;
}

// Run f(i) for i in [0, n) on a small pool. Results go wherever f puts them (index them by i
// to keep output deterministic). The exception from the lowest failing index is rethrown.
template <class F>
void parallel_for(std::size_t n, F f) {
  int hw = worker_count() > 0 ? worker_count() : static_cast<int>(std::thread::hardware_concurrency());
  std::size_t w = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, hw)));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t bad = n;
  std::exception_ptr err;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < w; ++t)
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next++;
        if (i >= n) return;
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(mu);
          if (i < bad) {
            bad = i;
            err = std::current_exception();
          }
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace extricat
