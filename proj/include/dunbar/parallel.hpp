#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dunbar {

/// Upper bound on worker threads used by the parallel loops. 0 means
/// "hardware concurrency".
void set_max_threads(unsigned n) noexcept;
unsigned max_threads() noexcept;

/// Runs `body(worker, i)` for every i in [0, count) on up to max_threads()
/// workers. Indices are handed out dynamically, so `body` must not depend on
/// visiting order; `worker` is in [0, workers) and identifies per-thread
/// scratch. The first exception thrown by any body is rethrown.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(max_threads(), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(0u, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&](unsigned worker) {
    try {
      for (std::size_t i = next++; i < count; i = next++) body(worker, i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Number of per-thread scratch slots a parallel_for over `count` items needs.
inline unsigned worker_slots(std::size_t count) noexcept {
  return static_cast<unsigned>(std::min<std::size_t>(max_threads(), std::max<std::size_t>(count, 1)));
}

}  // namespace dunbar
