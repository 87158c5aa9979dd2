#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "apw/report.hpp"
#include "apw/sampling.hpp"

namespace apw::detail {

inline constexpr std::uint64_t kChunkTrials = 4096;

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits `trials` into fixed-size chunks; chunk i draws from Rng(seed + i).
// body(count, rng, report) fills a partial report per chunk. Partials merge
// in chunk order, so the result does not depend on `threads`.
template <class Body>
ExperimentReport run_chunked(ExperimentReport base, std::uint64_t trials, std::uint64_t seed,
                             unsigned threads, Body body) {
  const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<ExperimentReport> partial(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const auto chunk = next.fetch_add(1);
      if (chunk >= chunks) return;
      try {
        Rng rng(seed + chunk);
        const auto count = std::min(kChunkTrials, trials - chunk * kChunkTrials);
        body(count, rng, partial[chunk]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
      }
    }
  };

  const unsigned n = std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(chunks, 1));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  base.seed = seed;
  for (const auto& p : partial) base.merge(p);
  return base;
}

}  // namespace apw::detail
