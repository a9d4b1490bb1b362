#include "partgraph/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "partgraph/enumerate.hpp"
#include "partgraph/transfer_graph.hpp"

namespace partgraph {

Int isqrt(Int v) {
  if (v < 0) throw InvalidInput("isqrt of a negative number");
  auto r = static_cast<Int>(std::sqrt(static_cast<double>(v)));
  auto sq = [](Int x) { return static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(x); };
  const auto target = static_cast<std::uint64_t>(v);
  while (r > 0 && sq(r) > target) --r;
  while (sq(r + 1) <= target) ++r;
  return r;
}

StaircaseDecomposition decompose(Int n) {
  if (n < 1) throw InvalidInput("decompose: n must be at least 1, got " + std::to_string(n));
  Int s = (isqrt(8 * n + 1) - 1) / 2;
  while (triangular(s) > n) --s;
  while (triangular(s + 1) <= n) ++s;
  return {n, s, n - triangular(s)};
}

Int rho(Int q) {
  if (q < 0) throw InvalidInput("rho: q must be nonnegative");
  return isqrt(4 * q + 1) - 1;
}

Int rho_oracle(Int q) {
  if (q < 0) throw InvalidInput("rho_oracle: q must be nonnegative");
  Int b = 0;
  while (triangular(b + 1) <= q) ++b;
  Int best = 0;
  for (Int a = 0; triangular(a) <= q; ++a) {
    while (triangular(a) + triangular(b) > q) --b;
    best = std::max(best, a + b);
  }
  return best;
}

std::vector<Int> rho_oracle_table(Int q_max) {
  if (q_max < 0) throw InvalidInput("rho_oracle_table: q_max must be nonnegative");
  std::vector<Int> best(static_cast<std::size_t>(q_max) + 1, 0);
  for (Int a = 0; triangular(a) <= q_max; ++a)
    for (Int b = 0; triangular(a) + triangular(b) <= q_max; ++b) {
      auto& slot = best[static_cast<std::size_t>(triangular(a) + triangular(b))];
      slot = std::max(slot, a + b);
    }
  for (std::size_t q = 1; q < best.size(); ++q) best[q] = std::max(best[q], best[q - 1]);
  return best;
}

Int max_degree(Int n) {
  const auto d = decompose(n);
  return d.s * (d.s - 1) + rho(d.q);
}

std::vector<BonusProfile> admissible_profiles(Int q) {
  const Int total = rho(q);
  std::vector<BonusProfile> out;
  for (Int a = total; a >= 0; --a) {
    const Int b = total - a;
    if (triangular(a) + triangular(b) <= q) out.push_back({a, b});
  }
  return out;
}

bool is_admissible(Int q, BonusProfile profile) {
  if (q < 0 || profile.a < 0 || profile.b < 0) return false;
  return profile.a + profile.b == rho(q) && triangular(profile.a) + triangular(profile.b) <= q;
}

Int profile_slack(Int q, BonusProfile profile) {
  return q - triangular(profile.a) - triangular(profile.b);
}

Int FibreTable::total() const {
  Int t = 0;
  for (const auto& row : rows) t += row.count;
  return t;
}

Int FibreTable::sc_total() const {
  Int t = 0;
  for (const auto& row : rows) t += row.self_conjugate;
  return t;
}

std::vector<BonusProfile> FibreTable::realized_profiles() const {
  std::vector<BonusProfile> out;
  for (const auto& row : rows) out.push_back(row.profile);
  return out;
}

const FibreRow* FibreTable::find(BonusProfile profile) const {
  for (const auto& row : rows)
    if (row.profile == profile) return &row;
  return nullptr;
}

bool FibreTable::profiles_match() const { return realized_profiles() == admissible_profiles(q); }

bool operator==(const FibreTable& x, const FibreTable& y) {
  if (x.n != y.n || x.s != y.s || x.q != y.q || x.delta != y.delta || x.has_members != y.has_members ||
      x.rows.size() != y.rows.size())
    return false;
  for (std::size_t i = 0; i < x.rows.size(); ++i) {
    const auto& a = x.rows[i];
    const auto& b = y.rows[i];
    if (a.profile != b.profile || a.count != b.count || a.self_conjugate != b.self_conjugate ||
        a.members != b.members)
      return false;
  }
  return true;
}

namespace {

using Fibres = std::map<BonusProfile, FibreRow>;

void record(Fibres& fibres, const CompressedForm& c, BonusProfile profile, bool keep_member) {
  auto& row = fibres[profile];
  row.profile = profile;
  ++row.count;
  if (conjugate(c) == c) ++row.self_conjugate;
  if (keep_member) row.members.push_back(c.decompress());
}

void merge_into(Fibres& into, Fibres&& from) {
  for (auto& [profile, row] : from) {
    auto& target = into[profile];
    target.profile = profile;
    target.count += row.count;
    target.self_conjugate += row.self_conjugate;
    target.members.insert(target.members.end(), std::make_move_iterator(row.members.begin()),
                          std::make_move_iterator(row.members.end()));
  }
}

FibreTable assemble(const StaircaseDecomposition& d, Int delta, bool has_members, Fibres&& fibres) {
  FibreTable table{d.n, d.s, d.q, delta, has_members, {}};
  for (auto it = fibres.rbegin(); it != fibres.rend(); ++it) {
    auto row = std::move(it->second);
    std::sort(row.members.begin(), row.members.end(), DecreasingLex{});
    table.rows.push_back(std::move(row));
  }
  return table;
}

// Support-s forms with excess q: first every gap excess vector, then every
// multiplicity excess vector that spends the rest of the budget exactly.
class SupportMaximalBuilder {
 public:
  SupportMaximalBuilder(Int s, Int q, const std::function<void(const CompressedForm&)>& f)
      : s_(s), q_(q), f_(f), gaps_(static_cast<std::size_t>(s), 1), mults_(static_cast<std::size_t>(s), 1),
        sizes_(static_cast<std::size_t>(s)) {}

  void run() { choose_gap(1, q_); }

 private:
  void choose_gap(Int i, Int budget) {
    if (i > std::min(q_, s_) || budget == 0) {
      Int acc = 0;
      for (std::size_t k = gaps_.size(); k-- > 0;) {
        acc += gaps_[k];
        sizes_[k] = acc;
      }
      choose_mult(s_ - 1, budget);
      return;
    }
    const auto idx = static_cast<std::size_t>(i - 1);
    for (Int x = 0; x * i <= budget; ++x) {
      gaps_[idx] = 1 + x;
      choose_gap(i + 1, budget - x * i);
    }
    gaps_[idx] = 1;
  }

  void choose_mult(Int pos, Int budget) {
    if (budget == 0) {
      f_(CompressedForm::from_gaps(gaps_, mults_));
      return;
    }
    if (pos < 0) return;
    const auto idx = static_cast<std::size_t>(pos);
    const Int size = sizes_[idx];
    if (size > budget) return;  // sizes only grow towards the top
    for (Int y = 0; y * size <= budget; ++y) {
      mults_[idx] = 1 + y;
      choose_mult(pos - 1, budget - y * size);
    }
    mults_[idx] = 1;
  }

  Int s_;
  Int q_;
  const std::function<void(const CompressedForm&)>& f_;
  std::vector<Int> gaps_;
  std::vector<Int> mults_;
  std::vector<Int> sizes_;
};

}  // namespace

void for_each_support_maximal(Int n, const std::function<void(const CompressedForm&)>& f) {
  const auto d = decompose(n);
  SupportMaximalBuilder(d.s, d.q, f).run();
}

std::vector<Partition> support_maximal_scan(Int n) {
  std::vector<Partition> out;
  for_each_support_maximal(n, [&](const CompressedForm& c) { out.push_back(c.decompress()); });
  std::sort(out.begin(), out.end(), DecreasingLex{});
  return out;
}

FibreTable maximizers(Int n, const MaximizerOptions& options) {
  const auto d = decompose(n);
  const Int delta = max_degree(n);
  const bool keep = options.include_members;

  if (options.pipeline == Pipeline::localized) {
    Fibres fibres;
    const Int baseline = d.s * (d.s - 1);
    for_each_support_maximal(n, [&](const CompressedForm& c) {
      const auto profile = bonus_profile(c);
      if (baseline + profile.a + profile.b == delta) record(fibres, c, profile, keep);
    });
    return assemble(d, delta, keep, std::move(fibres));
  }

  check_cap(n, options.cap, "maximizers");
  auto chunks = map_partition_chunks(n, options.jobs, [&](Int largest) {
    Fibres fibres;
    auto stream = PartitionStream::with_largest_part(n, largest);
    do {
      const auto data = degree_data(stream.parts());
      if (data.degree() == delta) record(fibres, compress(stream.current()), data.profile, keep);
    } while (stream.advance());
    return fibres;
  });
  Fibres merged;
  for (auto& chunk : chunks) merge_into(merged, std::move(chunk));
  return assemble(d, delta, keep, std::move(merged));
}

namespace {

void require_window(Int s, Int q, Int a, Int b, const char* what) {
  if (s < 1) throw InvalidInput(std::string(what) + ": s must be at least 1");
  if (q < 0 || q > s)
    throw InvalidInput(std::string(what) + ": need 0 <= q <= s, got q=" + std::to_string(q) +
                       ", s=" + std::to_string(s));
  if (!is_admissible(q, {a, b}))
    throw InvalidInput(std::string(what) + ": profile (" + std::to_string(a) + "," + std::to_string(b) +
                       ") is not admissible for q=" + std::to_string(q));
}

Partition build_checked(Int s, Int q, std::vector<Int> gap_values, std::vector<Int> mults) {
  const auto c = CompressedForm::from_gaps(gap_values, mults);
  if (c.n() != triangular(s) + q) throw std::logic_error("constructed partition has the wrong size");
  return c.decompress();
}

}  // namespace

Partition canonical_representative(Int s, Int q, Int a, Int b) {
  require_window(s, q, a, b, "canonical_representative");
  const Int slack = profile_slack(q, {a, b});
  const auto len = static_cast<std::size_t>(s);
  std::vector<Int> gap_values(len, 1);
  std::vector<Int> mults(len, 1);
  if (a > 0) {
    gap_values[0] = 2 + slack;
    for (Int i = 1; i < a; ++i) gap_values[static_cast<std::size_t>(i)] = 2;
  }
  for (Int i = s - b; i < s; ++i) mults[static_cast<std::size_t>(i)] = 2;
  return build_checked(s, q, std::move(gap_values), std::move(mults));
}

std::vector<Partition> slack_family(Int s, Int q, Int a, Int b) {
  if (a <= 0 || b <= 0) throw InvalidInput("slack_family: only mixed profiles (a > 0, b > 0) have a slack family");
  require_window(s, q, a, b, "slack_family");
  const Int slack = profile_slack(q, {a, b});
  const auto len = static_cast<std::size_t>(s);
  std::vector<Partition> family;
  for (Int t = 0; t <= slack; ++t) {
    std::vector<Int> gap_values(len, 1);
    std::vector<Int> mults(len, 1);
    gap_values[0] = 2 + t;
    for (Int i = 1; i < a; ++i) gap_values[static_cast<std::size_t>(i)] = 2;
    for (Int i = s - b; i < s - 1; ++i) mults[static_cast<std::size_t>(i)] = 2;
    mults[len - 1] = 2 + (slack - t);
    family.push_back(build_checked(s, q, std::move(gap_values), std::move(mults)));
  }
  return family;
}

Int self_conjugate_count(const FibreTable& table) {
  if (!table.has_members) throw InvalidInput("self_conjugate_count needs a table built with member lists");
  Int count = 0;
  for (const auto& row : table.rows)
    for (const auto& p : row.members)
      if (conjugate_naive(p) == p) ++count;
  return count;
}

}  // namespace partgraph
