#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cyclicgv {

/// Splits [0, count) into `threads` contiguous chunks and runs
/// fn(chunk_index, begin, end) on each. Returns once all chunks finish; the
/// first exception thrown by any chunk is rethrown. Chunk boundaries depend
/// only on (count, threads), so callers that merge per-chunk results in
/// chunk order get output independent of scheduling.
template <typename Fn>
void parallel_chunks(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count == 0 ? 1 : count));
  if (threads == 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = count * t / threads;
    const std::size_t end = count * (t + 1) / threads;
    workers.emplace_back([&, t, begin, end] {
      try {
        fn(t, begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  workers.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace cyclicgv
