#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace ringlcp::par {

/// Resolves a requested worker count: 0 means RINGLCP_THREADS or the
/// hardware concurrency, clamped to [1, 64].
int resolve_threads(int requested);

/// Splits [0, total) into one contiguous range per worker and folds each with
/// `body(begin, end, Local&)`. Locals are merged IN RANGE ORDER with `merge`,
/// so the result is independent of scheduling.
template <class Local, class Body, class Merge>
Local parallel_fold(uint64_t total, int threads, Local init, Body body,
                    Merge merge) {
  threads = resolve_threads(threads);
  if (total == 0) return init;
  uint64_t nchunks = std::min<uint64_t>(threads, total);
  if (nchunks <= 1) {
    Local local = init;
    body(0, total, local);
    return local;
  }
  std::vector<Local> locals(nchunks, init);
  std::vector<std::thread> pool;
  uint64_t per = total / nchunks, extra = total % nchunks;
  uint64_t begin = 0;
  for (uint64_t c = 0; c < nchunks; ++c) {
    uint64_t len = per + (c < extra ? 1 : 0);
    uint64_t b = begin, e = begin + len;
    begin = e;
    pool.emplace_back([&, c, b, e] { body(b, e, locals[c]); });
  }
  for (auto& t : pool) t.join();
  Local out = init;
  for (uint64_t c = 0; c < nchunks; ++c) merge(out, locals[c]);
  return out;
}

/// Searches [0, total) for the first index accepted by `pred` (in index
/// order), in parallel. Ranges beyond an already-successful earlier range
/// abort early; the returned index equals the sequential first hit.
template <class Pred>
std::optional<uint64_t> parallel_find_first(uint64_t total, int threads,
                                            Pred pred) {
  threads = resolve_threads(threads);
  if (total == 0) return std::nullopt;
  uint64_t nchunks = std::min<uint64_t>(threads, total);
  if (nchunks <= 1) {
    for (uint64_t i = 0; i < total; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::vector<std::optional<uint64_t>> hits(nchunks);
  std::atomic<uint64_t> stop_chunk{nchunks};
  std::vector<std::thread> pool;
  uint64_t per = total / nchunks, extra = total % nchunks;
  uint64_t begin = 0;
  for (uint64_t c = 0; c < nchunks; ++c) {
    uint64_t len = per + (c < extra ? 1 : 0);
    uint64_t b = begin, e = begin + len;
    begin = e;
    pool.emplace_back([&, c, b, e] {
      for (uint64_t i = b; i < e; ++i) {
        if (stop_chunk.load(std::memory_order_relaxed) < c) return;
        if (pred(i)) {
          hits[c] = i;
          uint64_t cur = stop_chunk.load();
          while (c < cur && !stop_chunk.compare_exchange_weak(cur, c)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (uint64_t c = 0; c < nchunks; ++c)
    if (hits[c]) return hits[c];
  return std::nullopt;
}

}  // namespace ringlcp::par
