#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gmconn {

// Runs body(i) for i in [0, count) on up to `jobs` threads. Work is handed
// out by index, so callers that write to slot i of a presized vector get
// output independent of the thread count. If bodies throw, the exception
// from the lowest failing index is rethrown after all threads join, as a
// sequential loop would.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::size_t limit = count;
  std::exception_ptr error;
  std::mutex error_mu;
  auto run = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      {
        std::lock_guard<std::mutex> lock(error_mu);
        if (i >= limit) return;
      }
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (i < limit) {
          limit = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t k = 0; k < workers; ++k) threads.emplace_back(run);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace gmconn
