#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace absorb::detail {

/// Runs `work(part)` for every part in [0, parts) on up to `jobs` threads.
/// `work` returns std::optional<T>; the result of the lowest-numbered part
/// that produced a value is returned, so the answer does not depend on
/// scheduling. Parts above an already successful part are skipped.
template <typename T, typename Work>
std::optional<std::pair<std::size_t, T>> first_hit(std::size_t parts, unsigned jobs,
                                                    Work&& work) {
  std::vector<std::optional<T>> results(parts);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t part = next.fetch_add(1);
      if (part >= parts || part > best.load()) return;
      try {
        auto r = work(part);
        if (r) {
          results[part] = std::move(r);
          std::size_t cur = best.load();
          while (part < cur && !best.compare_exchange_weak(cur, part)) {
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        best.store(0);
        return;
      }
    }
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1U, jobs), std::max<std::size_t>(parts, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  for (std::size_t i = 0; i < parts; ++i)
    if (results[i]) return std::make_pair(i, std::move(*results[i]));
  return std::nullopt;
}

/// Runs `work(i)` for every i in [0, count) on up to `jobs` threads.
template <typename Work>
void for_each_index(std::size_t count, unsigned jobs, Work&& work) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1U, jobs), std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace absorb::detail
