#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace sphere_search {

/// Worker count: SPHERE_SEARCH_THREADS when set to a positive integer,
/// otherwise the hardware concurrency.
std::size_t worker_count();

/// Splits [0, n) into at most worker_count() contiguous chunks and runs
/// body(chunk, begin, end) for each, one thread per chunk. Returns the
/// number of chunks used.
std::size_t parallel_chunks(
    std::size_t n,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

/// out[i] = fn(i) for i in [0, n). Results do not depend on the schedule.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  parallel_chunks(n, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
  });
  return out;
}

/// Smallest index i in [0, n) with pred(i), regardless of the schedule.
template <typename Pred>
std::optional<std::size_t> parallel_find_first(std::size_t n, Pred&& pred) {
  std::vector<std::optional<std::size_t>> per_chunk(std::max<std::size_t>(worker_count(), 1));
  parallel_chunks(n, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (pred(i)) {
        per_chunk[chunk] = i;
        return;
      }
    }
  });
  // Chunks are ordered, so the first chunk with a hit holds the minimum.
  for (const auto& hit : per_chunk) {
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace sphere_search
