#include "partgraph/verify.hpp"

#include <algorithm>
#include <chrono>

#include "partgraph/enumerate.hpp"
#include "partgraph/extremal.hpp"
#include "partgraph/transfer_graph.hpp"
#include "partgraph/windows.hpp"

namespace partgraph {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct ChunkOutcome {
  Int cases = 0;
  std::optional<Partition> failure;
};

// Applies `ok` to every partition of n; returns the case count and the first
// failing partition in enumeration order.
template <class Pred>
ChunkOutcome scan_partitions(Int n, int jobs, Pred ok) {
  auto chunks = map_partition_chunks(n, jobs, [&](Int largest) {
    ChunkOutcome out;
    auto stream = PartitionStream::with_largest_part(n, largest);
    do {
      ++out.cases;
      auto p = stream.current();
      if (!ok(p)) {
        out.failure = std::move(p);
        break;
      }
    } while (stream.advance());
    return out;
  });
  ChunkOutcome total;
  for (auto& c : chunks) {
    total.cases += c.cases;
    if (c.failure && !total.failure) total.failure = std::move(c.failure);
  }
  return total;
}

template <class Pred>
CheckResult per_partition_check(std::string name, const VerifyOptions& options, Pred ok) {
  Stopwatch clock;
  CheckResult result;
  result.name = std::move(name);
  for (Int n = 1; n <= options.max_n; ++n) {
    auto outcome = scan_partitions(n, options.jobs, ok);
    result.cases += outcome.cases;
    if (outcome.failure) {
      result.pass = false;
      result.counterexample = outcome.failure->to_string();
      break;
    }
  }
  result.seconds = clock.seconds();
  return result;
}

CheckResult fail_at(CheckResult result, const Stopwatch& clock, const Partition& p, std::string detail) {
  result.seconds = clock.seconds();
  result.pass = false;
  result.counterexample = p.to_string();
  result.detail = std::move(detail);
  return result;
}

MaximizerOptions full_pipeline(const VerifyOptions& options, bool members) {
  MaximizerOptions mo;
  mo.include_members = members;
  mo.pipeline = Pipeline::full;
  mo.jobs = options.jobs;
  mo.cap = options.cap;
  return mo;
}

}  // namespace

CheckResult check_formula_vs_oracle(const VerifyOptions& options) {
  return per_partition_check("formula_vs_oracle", options,
                             [](const Partition& p) { return degree_formula(p) == degree_oracle(p); });
}

CheckResult check_excess_identity(const VerifyOptions& options) {
  return per_partition_check("excess_identity", options, [](const Partition& p) {
    const auto c = compress(p);
    const auto r = static_cast<Int>(c.support());
    const auto e = excess_decomposition(c);
    const auto profile = bonus_profile(c);
    return e.total() == p.n() - triangular(r) && profile.a + profile.b <= e.total();
  });
}

CheckResult check_conjugation(const VerifyOptions& options) {
  return per_partition_check("conjugation", options, [](const Partition& p) {
    const auto c = compress(p);
    const auto cc = conjugate(c);
    return conjugate(cc) == c && cc.decompress() == conjugate_naive(p) &&
           bonus_profile(cc) == bonus_profile(c).swapped();
  });
}

CheckResult check_max_degree(const VerifyOptions& options) {
  Stopwatch clock;
  CheckResult result;
  result.name = "max_degree";
  for (Int n = 1; n <= options.max_n; ++n) {
    auto chunks = map_partition_chunks(n, options.jobs, [n](Int largest) {
      std::pair<Int, Int> best{-1, 0};  // degree, count
      auto stream = PartitionStream::with_largest_part(n, largest);
      do {
        const Int d = degree_data(stream.parts()).degree();
        if (d > best.first) best = {d, 0};
        if (d == best.first) ++best.second;
      } while (stream.advance());
      return best;
    });
    Int best = -1;
    for (const auto& [d, c] : chunks) best = std::max(best, d);
    ++result.cases;
    if (best != max_degree(n)) {
      result.pass = false;
      result.counterexample = std::to_string(n);
      result.detail = "n=" + std::to_string(n) + ": enumerated max " + std::to_string(best) + ", closed form " +
                      std::to_string(max_degree(n));
      break;
    }
  }
  result.seconds = clock.seconds();
  return result;
}

CheckResult check_min_degree(const VerifyOptions& options) {
  Stopwatch clock;
  CheckResult result;
  result.name = "min_degree";
  for (Int n = 1; n <= options.max_n; ++n) {
    const Partition single = Partition::from_parts({n});
    const Partition ones = Partition::from_parts(std::vector<Int>(static_cast<std::size_t>(n), 1));
    const Int floor = n == 1 ? 0 : 1;
    auto outcome = scan_partitions(n, options.jobs, [&](const Partition& p) {
      const Int d = degree_formula(p);
      const bool antenna = p == single || p == ones;
      return antenna ? d == floor : d > floor;
    });
    result.cases += outcome.cases;
    if (outcome.failure) return fail_at(std::move(result), clock, *outcome.failure, "minimum degree violated");
  }
  result.seconds = clock.seconds();
  return result;
}

CheckResult check_profile_realization(const VerifyOptions& options) {
  Stopwatch clock;
  CheckResult result;
  result.name = "profile_realization";
  for (Int n = 1; n <= options.max_n; ++n) {
    const auto table = maximizers(n, full_pipeline(options, false));
    ++result.cases;
    if (!table.profiles_match()) {
      result.pass = false;
      result.counterexample = std::to_string(n);
      result.detail = "realized profiles differ from the admissible set at n=" + std::to_string(n);
      break;
    }
  }
  result.seconds = clock.seconds();
  return result;
}

CheckResult check_fibre_symmetry(const VerifyOptions& options) {
  Stopwatch clock;
  CheckResult result;
  result.name = "fibre_symmetry";
  for (Int n = 1; n <= options.max_n; ++n) {
    const auto table = maximizers(n, full_pipeline(options, true));
    ++result.cases;
    for (const auto& row : table.rows) {
      const auto* mirror = table.find(row.profile.swapped());
      std::vector<Partition> image;
      for (const auto& p : row.members) image.push_back(conjugate(p));
      std::sort(image.begin(), image.end(), DecreasingLex{});
      if (!mirror || mirror->count != row.count || image != mirror->members) {
        const auto& witness = row.members.front();
        return fail_at(std::move(result), clock, witness, "fibre (a,b) does not map onto (b,a) at n=" + std::to_string(n));
      }
      for (const auto& p : row.members) {
        if (conjugate(p) == p && row.profile.a != row.profile.b)
          return fail_at(std::move(result), clock, p, "self-conjugate maximizer off the diagonal");
      }
    }
  }
  result.seconds = clock.seconds();
  return result;
}

CheckResult check_localization(const VerifyOptions& options) {
  Stopwatch clock;
  CheckResult result;
  result.name = "localization";
  for (Int n = 1; n <= options.max_n; ++n) {
    const auto outcome = localization_check(n, full_pipeline(options, true));
    ++result.cases;
    if (!outcome.ok) return fail_at(std::move(result), clock, *outcome.counterexample, outcome.reason);
  }
  result.seconds = clock.seconds();
  return result;
}

CheckResult check_small_windows(const VerifyOptions& options) {
  Stopwatch clock;
  CheckResult result;
  result.name = "small_windows";
  for (Int q = 0; q < static_cast<Int>(kSmallWindowTotals.size()); ++q) {
    for (Int s = std::max<Int>(q, 1); triangular(s) + q <= options.max_n; ++s) {
      const auto table = maximizers(triangular(s) + q, full_pipeline(options, false));
      ++result.cases;
      const auto idx = static_cast<std::size_t>(q);
      if (table.total() != kSmallWindowTotals[idx] || table.sc_total() != kSmallWindowSelfConjugate[idx]) {
        result.pass = false;
        result.counterexample = std::to_string(table.n);
        result.detail = "window q=" + std::to_string(q) + ", s=" + std::to_string(s) + ": total " +
                        std::to_string(table.total()) + ", sc " + std::to_string(table.sc_total());
        result.seconds = clock.seconds();
        return result;
      }
    }
  }
  result.seconds = clock.seconds();
  return result;
}

std::vector<CheckResult> verify_all(const VerifyOptions& options) {
  if (options.max_n < 1) throw InvalidInput("verify: max_n must be at least 1");
  return {
      check_formula_vs_oracle(options), check_excess_identity(options),     check_conjugation(options),
      check_max_degree(options),        check_min_degree(options),          check_profile_realization(options),
      check_fibre_symmetry(options),    check_localization(options),        check_small_windows(options),
  };
}

}  // namespace partgraph
