#pragma once

// Shared work splitter for the exhaustive sweeps (census, moments, counts).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "persym/census.hpp"

namespace persym::detail {

inline int worker_count(const CensusOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(lo, hi, tally) over [0, range) split into chunks, one tally per
/// worker, and returns the element-wise sum.
template <class Body>
std::vector<std::uint64_t> run_sharded(std::uint64_t range, std::size_t tally_size, const CensusOptions& opts,
                                       Body body) {
  const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(worker_count(opts)),
                                                               std::max<std::uint64_t>(range, 1)));
  const std::uint64_t chunks = std::min<std::uint64_t>(range, static_cast<std::uint64_t>(workers) * 16);
  std::vector<std::vector<std::uint64_t>> tallies(static_cast<std::size_t>(workers),
                                                  std::vector<std::uint64_t>(tally_size, 0));
  std::atomic<std::uint64_t> next{0};
  auto work = [&](int w) {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) break;
      const std::uint64_t lo = range / chunks * c + std::min(c, range % chunks);
      const std::uint64_t hi = lo + range / chunks + (c < range % chunks ? 1 : 0);
      body(lo, hi, tallies[static_cast<std::size_t>(w)]);
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> sum(tally_size, 0);
  for (const auto& t : tallies)
    for (std::size_t i = 0; i < tally_size; ++i) sum[i] += t[i];
  return sum;
}

}  // namespace persym::detail
