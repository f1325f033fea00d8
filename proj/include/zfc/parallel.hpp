#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zfc {

/// Worker count used when a caller passes 0.
inline std::size_t default_threads() {
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

/**
 * Calls f(i) for i in [0, n) on up to `threads` workers. Results must be
 * written to slot i by the caller so aggregation order does not depend on
 * scheduling. The first exception is rethrown after all workers stop.
 */
template <class F>
void parallel_for(std::size_t n, std::size_t threads, F&& f) {
  if (threads == 0) threads = default_threads();
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; !stop && (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          stop = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// parallel_for that collects f(i) into a vector in index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, std::size_t threads, F&& f) {
  std::vector<T> out(n);
  parallel_for(n, threads, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace zfc
