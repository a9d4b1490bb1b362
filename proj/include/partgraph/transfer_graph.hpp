#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "partgraph/partition.hpp"

namespace partgraph {

/// Neighbours of `origin` in G_n, deduplicated and sorted in decreasing
/// lexicographic order. The origin itself is never listed.
struct NeighborSet {
  Partition origin;
  std::vector<Partition> neighbors;

  Int degree() const { return static_cast<Int>(neighbors.size()); }
};

/// Every partition reachable by one unit transfer: a donor part loses one
/// unit (vanishing if it was a 1) and either another existing part gains it
/// or it becomes a new part of size 1. Iterates over distinct part sizes.
NeighborSet neighbors(const Partition& p);

/// Same set as `neighbors`, built from every ordered pair of part indices.
/// Quadratic in the length; only meant to cross-check `neighbors`.
NeighborSet neighbors_naive(const Partition& p);

/// |neighbors(p)|.
Int degree_oracle(const Partition& p);

/// r(r-1) + A + B, read off the compressed form.
Int degree_formula(const Partition& p);

/// Support size, profile and degree of a weakly decreasing sequence in one pass.
struct DegreeData {
  Int support = 0;
  BonusProfile profile;

  Int degree() const { return support * (support - 1) + profile.a + profile.b; }
};
DegreeData degree_data(std::span<const Int> sorted_parts);

struct SpectrumOptions {
  int jobs = 1;
  Int cap = kDefaultCap;
};

/// Degree value -> number of partitions of n with that degree. Throws
/// ResourceLimit if p(n) exceeds the cap.
std::map<Int, Int> degree_spectrum(Int n, const SpectrumOptions& options = {});

struct DegreeLayer {
  Int n = 0;
  Int degree = 0;
  std::vector<Partition> members;  // decreasing lexicographic
};

/// All nonempty layers D_d(n), by increasing d.
std::vector<DegreeLayer> degree_layers(Int n, const SpectrumOptions& options = {});

using Edge = std::pair<Partition, Partition>;

/// Each edge once, as (larger, smaller) in decreasing lexicographic order,
/// listed by the larger endpoint in enumeration order.
std::vector<Edge> edge_list(Int n, Int cap = kDefaultCap);

/// Throws ResourceLimit when p(n) > cap.
void check_cap(Int n, Int cap, const char* what);

}  // namespace partgraph
