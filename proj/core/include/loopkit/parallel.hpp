#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace loopkit::detail {

// Runs fn(begin, end) over [0, n) split into contiguous chunks, one per
// worker. threads <= 1 runs inline. Results must not depend on the
// schedule; callers make output deterministic by canonical post-sorting
// or least-index witness reduction.
template <typename Fn>
void parallel_chunks(int n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    fn(0, n);
    return;
  }
  if (threads > n) threads = n;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int lo = t * chunk;
    int hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace loopkit::detail
