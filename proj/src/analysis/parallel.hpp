#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "spirallike/analysis.hpp"

namespace spirallike::detail {

/// Splits [0, n) into contiguous chunks, runs `chunk(begin, end)` on each
/// (one chunk per worker thread) and returns the per-chunk results in order.
template <typename Result, typename Chunk>
std::vector<Result> run_chunks(std::size_t n, Chunk&& chunk) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(worker_threads(), n));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = chunk(std::size_t{0}, n);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        results[w] = chunk(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace spirallike::detail
