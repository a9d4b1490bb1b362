#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

#include "partgraph/partition.hpp"

namespace partgraph {

/// Streams the partitions of n in decreasing lexicographic order.
///
/// A stream can be restricted to the partitions whose largest part equals a
/// given value. Concatenating the restricted streams for k = n, n-1, ..., 1
/// reproduces the unrestricted stream exactly, which is what the parallel
/// scans use as their chunking.
///
///   PartitionStream stream(6);
///   do { use(stream.parts()); } while (stream.advance());
class PartitionStream {
 public:
  /// All partitions of n. Throws InvalidInput for n < 1.
  explicit PartitionStream(Int n);

  /// Partitions of n with largest part exactly `largest` (1 <= largest <= n).
  static PartitionStream with_largest_part(Int n, Int largest);

  /// Current partition as a view; valid until the next call to advance().
  std::span<const Int> parts() const noexcept { return parts_; }
  Partition current() const { return Partition::from_sorted_unchecked(parts_); }

  /// Moves to the next partition; returns false once the stream is exhausted.
  bool advance();

  Int n() const noexcept { return n_; }

 private:
  PartitionStream(Int n, Int largest, bool pinned);

  Int n_;
  bool pinned_;
  std::vector<Int> parts_;
};

/// Number of partitions of n by Euler's pentagonal recurrence. p(0) = 1.
Int partition_count(Int n);

/// Calls `f(std::span<const Int>)` for every partition of n in stream order.
template <class F>
void for_each_partition(Int n, F&& f) {
  PartitionStream stream(n);
  do {
    f(stream.parts());
  } while (stream.advance());
}

std::vector<Partition> all_partitions(Int n);

/// Runs `work(largest)` for each chunk largest = n, ..., 1 on up to `jobs`
/// threads and returns the per-chunk results in chunk order, so callers can
/// merge deterministically whatever the scheduling was.
template <class Work>
auto map_partition_chunks(Int n, int jobs, Work&& work) -> std::vector<decltype(work(Int{1}))> {
  using Result = decltype(work(Int{1}));
  if (n < 1) throw InvalidInput("n must be at least 1");
  const auto chunks = static_cast<std::size_t>(n);
  std::vector<Result> results(chunks);
  const auto width = static_cast<std::size_t>(std::max(1, jobs));
  if (width == 1) {
    for (std::size_t i = 0; i < chunks; ++i) results[i] = work(n - static_cast<Int>(i));
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::min(width, chunks); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < chunks; i = next++) results[i] = work(n - static_cast<Int>(i));
    });
  }
  pool.clear();
  return results;
}

}  // namespace partgraph
