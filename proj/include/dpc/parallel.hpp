#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace dpc {

// Smallest index in [0, count) for which pred holds, evaluated by `threads`
// workers. Indices are handed out in ascending blocks and work above the best
// hit so far is skipped, so the answer never depends on scheduling.
template <typename Pred>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t count, unsigned threads,
                                                 Pred&& pred) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  if (threads <= 1 || count < 2) {
    for (std::uint64_t k = 0; k < count; ++k) {
      if (pred(k)) return k;
    }
    return std::nullopt;
  }

  const std::uint64_t block = std::max<std::uint64_t>(1, std::min<std::uint64_t>(64, count / (8 * threads)));
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kNone};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t start = next.fetch_add(block);
        if (start >= count || start >= best.load()) return;
        const std::uint64_t stop = std::min(count, start + block);
        for (std::uint64_t k = start; k < stop && k < best.load(); ++k) {
          if (pred(k)) {
            std::uint64_t cur = best.load();
            while (k < cur && !best.compare_exchange_weak(cur, k)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

// Runs body(k) for every k in [0, count) across `threads` workers.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count < 2) {
    for (std::uint64_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::uint64_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) body(k);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace dpc
