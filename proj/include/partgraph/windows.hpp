#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "partgraph/extremal.hpp"

namespace partgraph {

/// Descriptive only: says whether every scanned row agrees, never what
/// happens beyond the scanned range.
struct Stabilization {
  bool constant = true;
  Int s_min = 0;
  Int s_max = 0;
  std::vector<Int> change_points;  // s where row(s) differs from row(s-1)

  friend bool operator==(const Stabilization&, const Stabilization&) = default;
};

/// One fibre table per s for the instances n = T_s + q.
struct WindowReport {
  Int q = 0;
  std::vector<FibreTable> rows;  // increasing s, contiguous
  Stabilization stabilization;
};

struct WindowOptions {
  Pipeline pipeline = Pipeline::localized;
  int jobs = 1;
  Int cap = kDefaultCap;
  std::optional<std::filesystem::path> cache_dir;  // rows cached as window_q{q}_s{s}.json
};

/// Two rows agree when their fibre counts and self-conjugate counts agree.
bool same_window_shape(const FibreTable& x, const FibreTable& y);

Stabilization stabilization_of(const std::vector<FibreTable>& rows);

/// Throws InvalidInput unless q >= 0, s_min >= max(q, 1) and s_max >= s_min.
WindowReport scan_window(Int q, Int s_min, Int s_max, const WindowOptions& options = {});

/// Default scan range for q: s from max(q, 1) to q + 12.
std::pair<Int, Int> default_window_range(Int q);

std::filesystem::path window_cache_file(const std::filesystem::path& dir, Int q, Int s);

inline constexpr std::array<Int, 8> kSmallWindowTotals{1, 2, 1, 6, 2, 8, 1, 6};
inline constexpr std::array<Int, 8> kSmallWindowSelfConjugate{1, 0, 1, 0, 0, 0, 1, 0};

struct SmallWindowCell {
  Int q = 0;
  Int s = 0;
  Int n = 0;
  Int total = 0;
  Int sc = 0;
  bool pass = false;
};

struct SmallWindowTable {
  std::vector<SmallWindowCell> cells;  // by q, then s

  bool all_pass() const;
};

/// |M_{T_s+q}| and the self-conjugate count for q = 0..7, q <= s <= s_max,
/// each cell checked against the known constants. Throws InvalidInput when
/// s_max < 7.
SmallWindowTable small_window_table(Int s_max, const WindowOptions& options = {});

struct LocalizationResult {
  bool ok = true;
  std::optional<Partition> counterexample;
  std::string reason;
};

/// Checks that every maximizer of n has support s, active gaps only at
/// i <= q and repeated sizes only at L_i <= q (hence i >= s - q + 1).
/// Uses the full pipeline unless told otherwise, since the localized one
/// builds these constraints in.
LocalizationResult localization_check(Int n, const MaximizerOptions& options = {});

}  // namespace partgraph
