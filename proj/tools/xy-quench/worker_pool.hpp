#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace xyq::cli {

/// Evaluates task(i) for i in [0, count) on up to `workers` threads and
/// returns the results in index order. If any task throws, the exception of
/// the lowest failing index is rethrown, so failures are reproducible too.
template <typename Result>
std::vector<Result> run_indexed(std::size_t count, int workers,
                                const std::function<Result(std::size_t)>& task) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count);
  if (threads <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(drain);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace xyq::cli
