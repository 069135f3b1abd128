#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace batchhl::detail {

/// Runs fn(worker, task) for task in [0, tasks) on up to `workers` threads.
/// Tasks are claimed dynamically; callers must make results independent of the
/// claiming order. The first exception thrown by any task is rethrown.
template <typename Fn>
void parallel_tasks(std::size_t tasks, unsigned workers, Fn&& fn) {
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1u), std::max<std::size_t>(tasks, 1)));
  if (threads <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(0u, t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&](unsigned worker) {
    for (std::size_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) {
      try {
        fn(worker, t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(body, w);
  body(0);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace batchhl::detail
