#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "partgraph/partition.hpp"

namespace partgraph {

/// n = T_s + q with 0 <= q <= s.
struct StaircaseDecomposition {
  Int n = 0;
  Int s = 0;
  Int q = 0;

  friend bool operator==(const StaircaseDecomposition&, const StaircaseDecomposition&) = default;
};

StaircaseDecomposition decompose(Int n);

/// floor(sqrt(v)) in exact integer arithmetic.
Int isqrt(Int v);

/// floor(sqrt(4q + 1)) - 1.
Int rho(Int q);

/// max{a + b : T_a + T_b <= q}, by direct search over a.
Int rho_oracle(Int q);

/// rho_oracle for every q in [0, q_max] from one pass over all pairs (a, b)
/// with T_a + T_b <= q_max.
std::vector<Int> rho_oracle_table(Int q_max);

/// s(s-1) + rho(q).
Int max_degree(Int n);

/// {(a, b) : a + b = rho(q), T_a + T_b <= q}, by decreasing a.
std::vector<BonusProfile> admissible_profiles(Int q);
bool is_admissible(Int q, BonusProfile profile);

struct FibreRow {
  BonusProfile profile;
  Int count = 0;
  Int self_conjugate = 0;
  std::vector<Partition> members;  // decreasing lexicographic; empty unless requested
};

/// Maximizers of n grouped by bonus profile. Rows are the realized profiles,
/// ordered by decreasing a.
struct FibreTable {
  Int n = 0;
  Int s = 0;
  Int q = 0;
  Int delta = 0;
  bool has_members = false;
  std::vector<FibreRow> rows;

  Int total() const;
  Int sc_total() const;
  std::vector<BonusProfile> realized_profiles() const;
  const FibreRow* find(BonusProfile profile) const;

  /// Realized profiles coincide with admissible_profiles(q).
  bool profiles_match() const;

  friend bool operator==(const FibreTable& x, const FibreTable& y);
};

enum class Pipeline {
  full,       // every partition of n, filtered by degree
  localized,  // only support-s compressed forms built from excess vectors
};

struct MaximizerOptions {
  bool include_members = false;
  Pipeline pipeline = Pipeline::full;
  int jobs = 1;
  Int cap = kDefaultCap;  // bound on p(n) for the full pipeline
};

/// M_n grouped into fibres. The full pipeline throws ResourceLimit when
/// p(n) exceeds the cap; the localized pipeline has no cap.
FibreTable maximizers(Int n, const MaximizerOptions& options = {});

/// Invokes `f` on every partition of n with support exactly s(n), built in
/// compressed form from gap excesses x_i (i <= q) and multiplicity excesses
/// y_i (L_i <= q) with sum_i i x_i + sum_i y_i L_i = q.
void for_each_support_maximal(Int n, const std::function<void(const CompressedForm&)>& f);

/// Materialized `for_each_support_maximal`, decreasing lexicographic.
std::vector<Partition> support_maximal_scan(Int n);

/// Canonical member of M^{(a,b)}_{T_s+q}: g_1 = 2 + slack (or 1 when a = 0),
/// g_2..g_a = 2, remaining gaps 1; the last b multiplicities are 2.
/// Throws InvalidInput unless 1 <= s, 0 <= q <= s and (a, b) is admissible.
Partition canonical_representative(Int s, Int q, Int a, Int b);

/// lambda_0, ..., lambda_slack inside a mixed fibre (a, b > 0): g_1 = 2 + t and
/// last multiplicity 2 + (slack - t), everything else as in the canonical form.
std::vector<Partition> slack_family(Int s, Int q, Int a, Int b);

/// q - T_a - T_b.
Int profile_slack(Int q, BonusProfile profile);

/// Members fixed by conjugation. Throws InvalidInput if the table was built
/// without member lists.
Int self_conjugate_count(const FibreTable& table);

}  // namespace partgraph
