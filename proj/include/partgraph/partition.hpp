#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partgraph/error.hpp"

namespace partgraph {

/// T_m = m(m+1)/2.
constexpr Int triangular(Int m) {
  if (m < 0) throw InvalidInput("triangular: m must be nonnegative");
  return m * (m + 1) / 2;
}

/// A partition of n: a nonempty, weakly decreasing sequence of positive parts.
///
/// Equality, ordering and hashing are defined on the part sequence alone.
class Partition {
 public:
  Partition() = default;

  /// Sorts `parts` into weakly decreasing order. Throws InvalidInput on an
  /// empty sequence or a nonpositive entry.
  static Partition from_parts(std::vector<Int> parts);

  /// Wraps an already weakly decreasing sequence; only validated in debug builds.
  static Partition from_sorted_unchecked(std::vector<Int> parts);

  const std::vector<Int>& parts() const noexcept { return parts_; }
  Int n() const noexcept { return n_; }
  std::size_t length() const noexcept { return parts_.size(); }
  Int largest() const noexcept { return parts_.front(); }

  /// Plain text form, e.g. "5,3,2,1,1".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  explicit Partition(std::vector<Int> parts);

  std::vector<Int> parts_;
  Int n_ = 0;
};

/// Order used for enumeration and every exported member list: decreasing
/// lexicographic on part sequences.
struct DecreasingLex {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

struct Run {
  Int size;
  Int mult;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Gap vector g with g_i = L_i - L_{i+1} for i < r and g_r = L_r.
struct GapVector {
  std::vector<Int> values;

  /// Recovers the part sizes via L_i = sum_{j >= i} g_j.
  std::vector<Int> part_sizes() const;

  friend bool operator==(const GapVector&, const GapVector&) = default;
};

struct BonusProfile {
  Int a = 0;  // gaps exceeding 1
  Int b = 0;  // multiplicities exceeding 1

  BonusProfile swapped() const { return {b, a}; }

  friend bool operator==(const BonusProfile&, const BonusProfile&) = default;
  friend auto operator<=>(const BonusProfile&, const BonusProfile&) = default;
};

struct ExcessDecomposition {
  Int gap_excess = 0;   // sum_i i (g_i - 1)
  Int mult_excess = 0;  // sum_i (m_i - 1) L_i

  Int total() const { return gap_excess + mult_excess; }

  friend bool operator==(const ExcessDecomposition&, const ExcessDecomposition&) = default;
};

/// Run-length form (L_1^{m_1}, ..., L_r^{m_r}) with L_1 > ... > L_r > 0.
class CompressedForm {
 public:
  CompressedForm() = default;

  /// Validates strictly decreasing positive sizes and positive multiplicities.
  static CompressedForm from_runs(std::vector<Run> runs);

  /// Builds the form whose gaps are `gaps` (top to bottom) and whose
  /// multiplicities are `mults`. Both must have the same nonzero length and
  /// only positive entries.
  static CompressedForm from_gaps(std::span<const Int> gaps, std::span<const Int> mults);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  std::size_t support() const noexcept { return runs_.size(); }
  Int n() const;

  Partition decompress() const;

  /// Compressed text form, e.g. "5^1 3^1 2^1 1^2".
  std::string to_string() const;

  friend bool operator==(const CompressedForm&, const CompressedForm&) = default;

 private:
  explicit CompressedForm(std::vector<Run> runs) : runs_(std::move(runs)) {}

  std::vector<Run> runs_;
};

CompressedForm compress(const Partition& p);
GapVector gaps(const CompressedForm& c);
BonusProfile bonus_profile(const CompressedForm& c);
ExcessDecomposition excess_decomposition(const CompressedForm& c);

/// Conjugate through the run data: sizes S_r > ... > S_1 (S_i = m_1 + ... + m_i)
/// with multiplicities g_r, ..., g_1.
CompressedForm conjugate(const CompressedForm& c);
Partition conjugate(const Partition& p);

/// Column counts of the Ferrers diagram. Kept independent of `conjugate` so it
/// can serve as its oracle.
Partition conjugate_naive(const Partition& p);

/// (s, s-1, ..., 1).
Partition staircase(Int s);

/// Accepts plain ("5,3,2,1,1") or compressed ("5^1 3^1 2^1 1^2") syntax.
Partition parse_partition(std::string_view text);

}  // namespace partgraph

template <>
struct std::hash<partgraph::Partition> {
  std::size_t operator()(const partgraph::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : p.parts()) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
