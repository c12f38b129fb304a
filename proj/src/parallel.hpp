#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hermspec::detail {

// Split [0, count) into `jobs` contiguous chunks, run fn(begin, end) for each
// on its own thread and return the per-chunk results in chunk order, so that
// concatenating them reproduces the sequential order.
template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::uint64_t count, std::size_t jobs, Fn fn) {
  jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(count, 1)));
  std::vector<Result> results(jobs);
  if (jobs == 1) {
    results[0] = fn(std::uint64_t{0}, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t j = 0; j < jobs; ++j) {
    const std::uint64_t begin = count * j / jobs;
    const std::uint64_t end = count * (j + 1) / jobs;
    workers.emplace_back([&, j, begin, end] {
      try {
        results[j] = fn(begin, end);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace hermspec::detail
