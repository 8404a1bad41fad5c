#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gelfandpark {

inline unsigned default_workers() {
  unsigned const hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

// Splits [0, count) into contiguous chunks, one per worker, and calls
// body(worker, begin, end). The first exception thrown by any worker is
// rethrown on the calling thread after all workers have joined.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    body(0u, std::size_t{0}, count);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t const step = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t const lo = std::min(count, w * step);
    std::size_t const hi = std::min(count, lo + step);
    pool.emplace_back([&, w, lo, hi] {
      try {
        body(w, lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace gelfandpark
