#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace permlab {

// Runs body(i) for i in [0, count) on up to `threads` workers. Work is handed
// out in index order; the body must only write to slots owned by i.
template <class Body>
void parallel_for(std::int64_t count, int threads, Body&& body) {
  if (threads <= 1 || count < 2) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  const int workers = static_cast<int>(std::min<std::int64_t>(threads, count));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::int64_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next.store(count);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Deterministic reduction: items are grouped into fixed chunks of
// `chunk` indices, each chunk folded into its own partial, and partials merged
// in chunk order. The grouping does not depend on the thread count, so
// floating point results are reproducible across --threads values.
template <class Partial, class Make, class Fold, class Merge>
Partial chunked_reduce(std::int64_t count, std::int64_t chunk, int threads, Make make,
                       Fold fold, Merge merge) {
  if (chunk < 1) chunk = 1;
  const std::int64_t nchunks = (count + chunk - 1) / chunk;
  std::vector<Partial> partials;
  partials.reserve(static_cast<std::size_t>(nchunks));
  for (std::int64_t c = 0; c < nchunks; ++c) partials.push_back(make());
  parallel_for(nchunks, threads, [&](std::int64_t c) {
    const std::int64_t lo = c * chunk;
    const std::int64_t hi = std::min(count, lo + chunk);
    for (std::int64_t i = lo; i < hi; ++i) fold(partials[static_cast<std::size_t>(c)], i);
  });
  Partial out = make();
  for (auto& p : partials) merge(out, p);
  return out;
}

}  // namespace permlab
