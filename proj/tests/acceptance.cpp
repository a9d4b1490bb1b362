// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// All comparisons are exact; runtime ceilings are part of the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "partgraph/enumerate.hpp"
#include "partgraph/extremal.hpp"
#include "partgraph/transfer_graph.hpp"
#include "partgraph/windows.hpp"

using namespace partgraph;

namespace {

using Clock = std::chrono::steady_clock;

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(std::string why) {
    if (pass) note = std::move(why);
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds)
    out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  if (!out.pass) ++failures;
  std::printf("%s  [%2d] %-58s %8.2f s%s%s\n", out.pass ? "PASS" : "FAIL", id, title, secs,
              out.note.empty() ? "" : "  ", out.note.c_str());
  std::fflush(stdout);
}

// Closed form evaluated without the library: s by linear search, floor sqrt by search.
Int closed_form_max_degree(Int n) {
  Int s = 0;
  while (testing::tri(s + 1) <= n) ++s;
  const Int q = n - testing::tri(s);
  Int root = 0;
  while ((root + 1) * (root + 1) <= 4 * q + 1) ++root;
  return s * (s - 1) + root - 1;
}

Int enumerated_max_degree(Int n) {
  auto chunks = map_partition_chunks(n, jobs(), [n](Int largest) {
    Int best = -1;
    auto stream = PartitionStream::with_largest_part(n, largest);
    do best = std::max(best, degree_formula(stream.current()));
    while (stream.advance());
    return best;
  });
  return *std::max_element(chunks.begin(), chunks.end());
}

std::map<Int, Int> enumerated_max;  // n -> max degree over all partitions
std::map<Int, FibreTable> full_tables;

const FibreTable& full_table(Int n) {
  auto it = full_tables.find(n);
  if (it != full_tables.end()) return it->second;
  MaximizerOptions mo;
  mo.include_members = true;
  mo.pipeline = Pipeline::full;
  mo.jobs = jobs();
  return full_tables.emplace(n, maximizers(n, mo)).first->second;
}

std::string fibre_string(const FibreTable& t) {
  std::string out;
  for (const auto& row : t.rows)
    out += "(" + std::to_string(row.profile.a) + "," + std::to_string(row.profile.b) + "):" +
           std::to_string(row.count) + " ";
  return out;
}

bool contains(const std::vector<Partition>& members, const Partition& p) {
  return std::binary_search(members.begin(), members.end(), p, DecreasingLex{});
}

}  // namespace

int main() {
  std::printf("partgraph acceptance suite (%d worker threads)\n", jobs());

  criterion(1, "degree formula == brute-force degree, all n <= 40", 30.0, [] {
    Outcome out;
    Int cases = 0;
    for (Int n = 1; n <= 40 && out.pass; ++n) {
      auto chunks = map_partition_chunks(n, jobs(), [n](Int largest) {
        std::pair<Int, std::optional<Partition>> r{0, std::nullopt};
        auto stream = PartitionStream::with_largest_part(n, largest);
        do {
          ++r.first;
          const auto p = stream.current();
          if (!r.second && degree_formula(p) != degree_oracle(p)) r.second = p;
        } while (stream.advance());
        return r;
      });
      for (const auto& [count, bad] : chunks) {
        cases += count;
        if (bad) out.fail("mismatch at " + bad->to_string());
      }
    }
    if (out.pass) out.note = std::to_string(cases) + " partitions";
    return out;
  });

  criterion(2, "max degree == s(s-1) + floor(sqrt(4q+1)) - 1, n <= 55", 300.0, [] {
    Outcome out;
    for (Int n = 1; n <= 55; ++n) {
      enumerated_max[n] = enumerated_max_degree(n);
      if (enumerated_max[n] != closed_form_max_degree(n))
        out.fail("n=" + std::to_string(n) + ": " + std::to_string(enumerated_max[n]) +
                 " != " + std::to_string(closed_form_max_degree(n)));
      if (max_degree(n) != closed_form_max_degree(n)) out.fail("library closed form differs at n=" + std::to_string(n));
    }
    return out;
  });

  criterion(3, "step structure (0,1,2,2,3,3,4,4,4) above T_s, n <= 55", 0, [] {
    Outcome out;
    const Int steps[] = {0, 1, 2, 2, 3, 3, 4, 4, 4};
    Int cases = 0;
    for (Int q = 0; q <= 8; ++q)
      for (Int s = std::max<Int>(q, 1); testing::tri(s) + q <= 55; ++s) {
        const Int n = testing::tri(s) + q;
        const Int max = enumerated_max.contains(n) ? enumerated_max.at(n) : enumerated_max_degree(n);
        ++cases;
        if (max - s * (s - 1) != steps[q]) out.fail("q=" + std::to_string(q) + ", s=" + std::to_string(s));
      }
    if (out.pass) out.note = std::to_string(cases) + " instances";
    return out;
  });

  criterion(4, "small windows: |M| = 1,2,1,6,2,8,1,6; sc = 1,0,1,0,0,0,1,0", 0, [] {
    Outcome out;
    const Int totals[] = {1, 2, 1, 6, 2, 8, 1, 6};
    const Int sc[] = {1, 0, 1, 0, 0, 0, 1, 0};
    Int cases = 0;
    for (Int q = 0; q <= 7; ++q)
      for (Int s = std::max<Int>(q, 1); testing::tri(s) + q <= 55; ++s) {
        const auto& t = full_table(testing::tri(s) + q);
        ++cases;
        if (t.total() != totals[q] || t.sc_total() != sc[q] || self_conjugate_count(t) != sc[q])
          out.fail("q=" + std::to_string(q) + ", s=" + std::to_string(s) + ": total " + std::to_string(t.total()) +
                   ", sc " + std::to_string(t.sc_total()));
      }
    if (out.pass) out.note = std::to_string(cases) + " instances";
    return out;
  });

  criterion(5, "fibres q=3:(1,4,1) q=4:(1,1) q=5:(4,4) q=6:(1) q=7:(1,4,1)", 0, [] {
    Outcome out;
    const std::map<Int, std::vector<std::pair<BonusProfile, Int>>> expected{
        {3, {{{2, 0}, 1}, {{1, 1}, 4}, {{0, 2}, 1}}},
        {4, {{{2, 1}, 1}, {{1, 2}, 1}}},
        {5, {{{2, 1}, 4}, {{1, 2}, 4}}},
        {6, {{{2, 2}, 1}}},
        {7, {{{3, 1}, 1}, {{2, 2}, 4}, {{1, 3}, 1}}},
    };
    for (const auto& [q, fibres] : expected)
      for (Int s = q; s <= 10; ++s) {
        const auto& t = full_table(testing::tri(s) + q);
        bool ok = t.rows.size() == fibres.size();
        for (std::size_t i = 0; ok && i < fibres.size(); ++i)
          ok = t.rows[i].profile == fibres[i].first && t.rows[i].count == fibres[i].second;
        if (!ok) out.fail("q=" + std::to_string(q) + ", s=" + std::to_string(s) + ": " + fibre_string(t));
      }
    return out;
  });

  criterion(6, "q=8, s=8..10: fibres (4,14,4), total 22, sc 2 (full enumeration)", 600.0, [] {
    Outcome out;
    for (Int s = 8; s <= 10; ++s) {
      const auto& t = full_table(testing::tri(s) + 8);
      const auto* f31 = t.find({3, 1});
      const auto* f22 = t.find({2, 2});
      const auto* f13 = t.find({1, 3});
      const bool ok = t.rows.size() == 3 && f31 && f22 && f13 && f31->count == 4 && f22->count == 14 &&
                      f13->count == 4 && t.total() == 22 && t.sc_total() == 2 && self_conjugate_count(t) == 2;
      if (!ok) out.fail("s=" + std::to_string(s) + ": " + fibre_string(t));
    }
    return out;
  });

  criterion(6, "q=8 via localized pipeline, cross-checked at n <= 40", 10.0, [] {
    Outcome out;
    const auto report = scan_window(8, 8, 10);
    for (const auto& row : report.rows) {
      MaximizerOptions mo;
      mo.include_members = true;
      mo.pipeline = Pipeline::localized;
      if (maximizers(row.n, mo) != full_table(row.n)) out.fail("localized table differs at n=" + std::to_string(row.n));
      if (row.total() != 22 || row.sc_total() != 2) out.fail("s=" + std::to_string(row.s) + ": " + fibre_string(row));
    }
    for (Int n = 1; n <= 40; ++n) {
      MaximizerOptions mo;
      mo.include_members = true;
      mo.pipeline = Pipeline::localized;
      if (maximizers(n, mo) != full_table(n)) out.fail("pipelines differ at n=" + std::to_string(n));
    }
    return out;
  });

  criterion(7, "realized profiles == admissible profiles, n <= 55", 0, [] {
    Outcome out;
    for (Int n = 1; n <= 55; ++n) {
      const auto& t = full_table(n);
      std::vector<BonusProfile> expected;  // enumerate a + b = rho, T_a + T_b <= q by hand
      const Int target = closed_form_max_degree(n) - t.s * (t.s - 1);
      for (Int a = target; a >= 0; --a)
        if (testing::tri(a) + testing::tri(target - a) <= t.q) expected.push_back({a, target - a});
      if (t.realized_profiles() != expected) out.fail("n=" + std::to_string(n) + ": " + fibre_string(t));
      for (const auto& row : t.rows)
        for (const auto& p : row.members)
          if (static_cast<Int>(compress(p).support()) != t.s) out.fail("maximizer off support s: " + p.to_string());
    }
    return out;
  });

  criterion(8, "rho(q) == brute-force max{a+b : T_a+T_b <= q}, q <= 10^6", 10.0, [] {
    Outcome out;
    const Int q_max = 1'000'000;
    const auto table = rho_oracle_table(q_max);
    for (Int q = 0; q <= q_max; ++q)
      if (rho(q) != table[static_cast<std::size_t>(q)]) {
        out.fail("q=" + std::to_string(q));
        break;
      }
    for (Int q = 0; q <= q_max; q += 997)
      if (rho_oracle(q) != table[static_cast<std::size_t>(q)]) out.fail("oracles disagree at q=" + std::to_string(q));
    return out;
  });

  criterion(9, "conjugation: involution, column-count oracle, swap; fibre bijection", 0, [] {
    Outcome out;
    for (Int n = 1; n <= 30; ++n)
      for_each_partition(n, [&](std::span<const Int> parts) {
        const auto p = Partition::from_sorted_unchecked({parts.begin(), parts.end()});
        const auto c = compress(p);
        const auto cc = conjugate(c);
        if (conjugate(cc) != c || cc.decompress() != conjugate_naive(p) ||
            bonus_profile(cc) != bonus_profile(c).swapped())
          out.fail("at " + p.to_string());
      });
    for (Int n = 1; n <= 55; ++n) {
      const auto& t = full_table(n);
      for (const auto& row : t.rows) {
        const auto* mirror = t.find(row.profile.swapped());
        std::vector<Partition> image;
        for (const auto& p : row.members) image.push_back(conjugate_naive(p));
        std::sort(image.begin(), image.end(), DecreasingLex{});
        if (!mirror || mirror->count != row.count || image != mirror->members)
          out.fail("fibre bijection fails at n=" + std::to_string(n));
        for (const auto& p : row.members)
          if (conjugate_naive(p) == p && row.profile.a != row.profile.b) out.fail("off-diagonal self-conjugate");
      }
    }
    return out;
  });

  criterion(10, "canonical representatives and slack families, T_s+q <= 55", 0, [] {
    Outcome out;
    Int constructions = 0;
    for (Int s = 1; testing::tri(s) <= 55; ++s)
      for (Int q = 0; q <= s && testing::tri(s) + q <= 55; ++q) {
        const auto& t = full_table(testing::tri(s) + q);
        for (const auto& profile : admissible_profiles(q)) {
          const auto* fibre = t.find(profile);
          const auto where = "(s,q,a,b)=(" + std::to_string(s) + "," + std::to_string(q) + "," +
                             std::to_string(profile.a) + "," + std::to_string(profile.b) + ")";
          if (!fibre) {
            out.fail("empty fibre " + where);
            continue;
          }
          const auto rep = canonical_representative(s, q, profile.a, profile.b);
          ++constructions;
          if (!contains(fibre->members, rep) || bonus_profile(compress(rep)) != profile)
            out.fail("canonical representative outside its fibre " + where);
          if (profile.a == 0 || profile.b == 0) continue;
          const auto family = slack_family(s, q, profile.a, profile.b);
          const Int slack = q - testing::tri(profile.a) - testing::tri(profile.b);
          const std::set<Partition> distinct(family.begin(), family.end());
          if (static_cast<Int>(family.size()) != slack + 1 || static_cast<Int>(distinct.size()) != slack + 1)
            out.fail("slack family size " + where);
          for (const auto& p : family)
            if (!contains(fibre->members, p)) out.fail("slack member outside fibre " + where);
          if (fibre->count < slack + 1) out.fail("fibre below slack bound " + where);
        }
      }
    if (out.pass) out.note = std::to_string(constructions) + " profiles";
    return out;
  });

  criterion(11, "localization of active coordinates, n <= 55", 0, [] {
    Outcome out;
    for (Int n = 1; n <= 55; ++n) {
      const auto& t = full_table(n);
      for (const auto& row : t.rows)
        for (const auto& p : row.members) {
          const auto c = compress(p);
          const auto g = gaps(c);
          for (std::size_t k = 0; k < c.support(); ++k) {
            const auto i = static_cast<Int>(k + 1);
            if (g.values[k] > 1 && i > t.q) out.fail("gap at " + p.to_string());
            if (c.runs()[k].mult > 1 && (c.runs()[k].size > t.q || i < t.s - t.q + 1))
              out.fail("multiplicity at " + p.to_string());
          }
        }
      const auto lib = localization_check(n);
      if (!lib.ok) out.fail("localization_check(" + std::to_string(n) + "): " + lib.reason);
    }
    return out;
  });

  criterion(12, "min degree 1 only at (n),(1^n), n in [2,40]; handshake n <= 25", 0, [] {
    Outcome out;
    for (Int n = 2; n <= 40; ++n) {
      std::vector<Partition> minimal;
      Int min = -1;
      for_each_partition(n, [&](std::span<const Int> parts) {
        const auto p = Partition::from_sorted_unchecked({parts.begin(), parts.end()});
        const Int d = degree_formula(p);
        if (min < 0 || d < min) {
          min = d;
          minimal.clear();
        }
        if (d == min) minimal.push_back(p);
      });
      const std::vector<Partition> antennas{Partition::from_parts({n}),
                                            Partition::from_parts(std::vector<Int>(static_cast<std::size_t>(n), 1))};
      if (min != 1 || minimal != antennas) out.fail("n=" + std::to_string(n));
    }
    for (Int n = 1; n <= 25; ++n) {
      Int degree_sum = 0;
      for (const auto& p : all_partitions(n)) degree_sum += degree_oracle(p);
      if (degree_sum != 2 * static_cast<Int>(edge_list(n).size())) out.fail("handshake fails at n=" + std::to_string(n));
    }
    return out;
  });

  std::printf("%s: %d criterion line(s) failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
