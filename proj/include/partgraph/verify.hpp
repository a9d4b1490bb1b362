#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partgraph/partition.hpp"

namespace partgraph {

struct CheckResult {
  std::string name;
  bool pass = true;
  Int cases = 0;  // partitions or instances examined
  double seconds = 0.0;
  std::optional<std::string> counterexample;  // plain partition string
  std::string detail;
};

struct VerifyOptions {
  Int max_n = 40;
  int jobs = 1;
  Int cap = kDefaultCap;
};

/// Runs the full invariant battery for every 1 <= n <= max_n, each check
/// reporting the first counterexample in (n, enumeration) order.
std::vector<CheckResult> verify_all(const VerifyOptions& options);

CheckResult check_formula_vs_oracle(const VerifyOptions& options);
CheckResult check_excess_identity(const VerifyOptions& options);
CheckResult check_conjugation(const VerifyOptions& options);
CheckResult check_max_degree(const VerifyOptions& options);
CheckResult check_min_degree(const VerifyOptions& options);
CheckResult check_profile_realization(const VerifyOptions& options);
CheckResult check_fibre_symmetry(const VerifyOptions& options);
CheckResult check_localization(const VerifyOptions& options);
CheckResult check_small_windows(const VerifyOptions& options);

}  // namespace partgraph
