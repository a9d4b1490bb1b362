#include "partgraph/enumerate.hpp"

namespace partgraph {

namespace {

// Appends the lexicographically largest partition of `remaining` with parts <= cap.
void fill_greedy(std::vector<Int>& parts, Int remaining, Int cap) {
  while (remaining > 0) {
    const Int v = std::min(cap, remaining);
    parts.push_back(v);
    remaining -= v;
  }
}

}  // namespace

PartitionStream::PartitionStream(Int n) : PartitionStream(n, n, false) {}

PartitionStream::PartitionStream(Int n, Int largest, bool pinned) : n_(n), pinned_(pinned) {
  if (n < 1) throw InvalidInput("partitions are only enumerated for n >= 1");
  if (largest < 1 || largest > n)
    throw InvalidInput("largest part must lie in [1, n], got " + std::to_string(largest));
  parts_.reserve(static_cast<std::size_t>(n));
  parts_.push_back(largest);
  fill_greedy(parts_, n - largest, largest);
}

PartitionStream PartitionStream::with_largest_part(Int n, Int largest) {
  return PartitionStream(n, largest, true);
}

bool PartitionStream::advance() {
  // Rightmost part exceeding 1; everything after it is a 1.
  std::size_t i = parts_.size();
  while (i > 0 && parts_[i - 1] == 1) --i;
  if (i == 0) return false;
  --i;
  if (pinned_ && i == 0) return false;
  const Int ones = static_cast<Int>(parts_.size() - i - 1);
  const Int v = parts_[i] - 1;
  parts_.resize(i);
  parts_.push_back(v);
  fill_greedy(parts_, ones + 1, v);
  return true;
}

Int partition_count(Int n) {
  if (n < 0) return 0;
  std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (Int m = 1; m <= n; ++m) {
    Int total = 0;
    for (Int k = 1;; ++k) {
      const Int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const Int sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      const Int g2 = k * (3 * k + 1) / 2;
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

std::vector<Partition> all_partitions(Int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const Int> parts) {
    out.push_back(Partition::from_sorted_unchecked({parts.begin(), parts.end()}));
  });
  return out;
}

}  // namespace partgraph
