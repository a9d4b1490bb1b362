#include "partgraph/transfer_graph.hpp"

#include <algorithm>

#include "partgraph/enumerate.hpp"

namespace partgraph {

namespace {

constexpr auto kNewPart = std::vector<Int>::size_type(-1);

// Moves one unit from parts[donor] to parts[recipient] (recipient == kNewPart
// means a new part of size 1) and returns the re-sorted result.
std::vector<Int> apply_transfer(std::span<const Int> parts, std::size_t donor, std::size_t recipient) {
  std::vector<Int> out(parts.begin(), parts.end());
  --out[donor];
  if (recipient == kNewPart)
    out.push_back(1);
  else
    ++out[recipient];
  std::erase(out, Int{0});
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

NeighborSet finish(const Partition& origin, std::vector<std::vector<Int>> raw) {
  std::sort(raw.begin(), raw.end(), std::greater<>());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  NeighborSet set{origin, {}};
  set.neighbors.reserve(raw.size());
  for (auto& parts : raw) {
    if (parts == origin.parts()) continue;
    set.neighbors.push_back(Partition::from_sorted_unchecked(std::move(parts)));
  }
  return set;
}

}  // namespace

NeighborSet neighbors(const Partition& p) {
  const auto& parts = p.parts();
  // First and last index of every distinct size.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0 || parts[i] != parts[i - 1])
      blocks.push_back({i, i});
    else
      blocks.back().second = i;
  }
  std::vector<std::vector<Int>> raw;
  for (const auto& donor : blocks) {
    for (const auto& recipient : blocks) {
      if (&donor == &recipient) {
        if (donor.first != donor.second) raw.push_back(apply_transfer(parts, donor.first, donor.second));
      } else {
        raw.push_back(apply_transfer(parts, donor.first, recipient.first));
      }
    }
    raw.push_back(apply_transfer(parts, donor.first, kNewPart));
  }
  return finish(p, std::move(raw));
}

NeighborSet neighbors_naive(const Partition& p) {
  const auto& parts = p.parts();
  std::vector<std::vector<Int>> raw;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (i != j) raw.push_back(apply_transfer(parts, i, j));
    raw.push_back(apply_transfer(parts, i, kNewPart));
  }
  return finish(p, std::move(raw));
}

Int degree_oracle(const Partition& p) { return neighbors(p).degree(); }

DegreeData degree_data(std::span<const Int> parts) {
  DegreeData d;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j + 1 < parts.size() && parts[j + 1] == parts[i]) ++j;
    ++d.support;
    if (j > i) ++d.profile.b;
    const Int below = j + 1 < parts.size() ? parts[j + 1] : 0;
    if (parts[i] - below > 1) ++d.profile.a;
    i = j + 1;
  }
  return d;
}

Int degree_formula(const Partition& p) {
  const auto c = compress(p);
  const auto r = static_cast<Int>(c.support());
  const auto profile = bonus_profile(c);
  return r * (r - 1) + profile.a + profile.b;
}

void check_cap(Int n, Int cap, const char* what) {
  if (cap < 1) throw InvalidInput("cap must be at least 1");
  const Int count = partition_count(n);
  if (count > cap)
    throw ResourceLimit(std::string(what) + ": p(" + std::to_string(n) + ") = " + std::to_string(count) +
                            " exceeds the enumeration cap",
                        cap);
}

std::map<Int, Int> degree_spectrum(Int n, const SpectrumOptions& options) {
  if (n < 1) throw InvalidInput("degree_spectrum: n must be at least 1");
  check_cap(n, options.cap, "degree_spectrum");
  auto chunks = map_partition_chunks(n, options.jobs, [n](Int largest) {
    std::map<Int, Int> counts;
    auto stream = PartitionStream::with_largest_part(n, largest);
    do {
      ++counts[degree_data(stream.parts()).degree()];
    } while (stream.advance());
    return counts;
  });
  std::map<Int, Int> merged;
  for (const auto& chunk : chunks)
    for (const auto& [d, c] : chunk) merged[d] += c;
  return merged;
}

std::vector<DegreeLayer> degree_layers(Int n, const SpectrumOptions& options) {
  if (n < 1) throw InvalidInput("degree_layers: n must be at least 1");
  check_cap(n, options.cap, "degree_layers");
  std::map<Int, DegreeLayer> layers;
  for_each_partition(n, [&](std::span<const Int> parts) {
    const Int d = degree_data(parts).degree();
    auto& layer = layers[d];
    layer.n = n;
    layer.degree = d;
    layer.members.push_back(Partition::from_sorted_unchecked({parts.begin(), parts.end()}));
  });
  std::vector<DegreeLayer> out;
  for (auto& [d, layer] : layers) out.push_back(std::move(layer));
  return out;
}

std::vector<Edge> edge_list(Int n, Int cap) {
  if (n < 1) throw InvalidInput("edge_list: n must be at least 1");
  check_cap(n, cap, "edge_list");
  std::vector<Edge> edges;
  for_each_partition(n, [&](std::span<const Int> parts) {
    const auto p = Partition::from_sorted_unchecked({parts.begin(), parts.end()});
    for (auto& q : neighbors(p).neighbors)
      if (q < p) edges.emplace_back(p, std::move(q));
  });
  return edges;
}

}  // namespace partgraph
