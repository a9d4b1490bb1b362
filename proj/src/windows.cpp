#include "partgraph/windows.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "partgraph/io.hpp"

namespace partgraph {

bool same_window_shape(const FibreTable& x, const FibreTable& y) {
  if (x.rows.size() != y.rows.size()) return false;
  for (std::size_t i = 0; i < x.rows.size(); ++i) {
    if (x.rows[i].profile != y.rows[i].profile || x.rows[i].count != y.rows[i].count ||
        x.rows[i].self_conjugate != y.rows[i].self_conjugate)
      return false;
  }
  return true;
}

Stabilization stabilization_of(const std::vector<FibreTable>& rows) {
  Stabilization st;
  if (rows.empty()) return st;
  st.s_min = rows.front().s;
  st.s_max = rows.back().s;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!same_window_shape(rows[i - 1], rows[i])) st.change_points.push_back(rows[i].s);
  st.constant = st.change_points.empty();
  return st;
}

std::pair<Int, Int> default_window_range(Int q) {
  if (q < 0) throw InvalidInput("window excess q must be nonnegative");
  return {std::max<Int>(q, 1), q + 12};
}

std::filesystem::path window_cache_file(const std::filesystem::path& dir, Int q, Int s) {
  return dir / ("window_q" + std::to_string(q) + "_s" + std::to_string(s) + ".json");
}

namespace {

std::optional<FibreTable> read_cached(const std::filesystem::path& file, Int n) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    auto table = io::fibre_table_from_json(io::Json::parse(in));
    if (table.n != n) return std::nullopt;
    table.has_members = false;
    for (auto& row : table.rows) row.members.clear();
    return table;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

void write_cached(const std::filesystem::path& file, const FibreTable& table) {
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << io::to_json(table).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, file);
}

FibreTable window_row(Int q, Int s, const WindowOptions& options) {
  const Int n = triangular(s) + q;
  std::optional<std::filesystem::path> file;
  if (options.cache_dir) {
    file = window_cache_file(*options.cache_dir, q, s);
    if (auto cached = read_cached(*file, n)) return *cached;
  }
  MaximizerOptions mo;
  mo.pipeline = options.pipeline;
  mo.cap = options.cap;
  auto table = maximizers(n, mo);
  if (file) write_cached(*file, table);
  return table;
}

}  // namespace

WindowReport scan_window(Int q, Int s_min, Int s_max, const WindowOptions& options) {
  if (q < 0) throw InvalidInput("window excess q must be nonnegative");
  if (s_min < std::max<Int>(q, 1))
    throw InvalidInput("window undefined: need s_min >= max(q, 1), got s_min=" + std::to_string(s_min) +
                       " for q=" + std::to_string(q));
  if (s_max < s_min) throw InvalidInput("window range is empty: s_max < s_min");

  const auto count = static_cast<std::size_t>(s_max - s_min + 1);
  std::vector<FibreTable> rows(count);
  const auto width = std::min(count, static_cast<std::size_t>(std::max(1, options.jobs)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = window_row(q, s_min + static_cast<Int>(i), options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < width; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  WindowReport report{q, std::move(rows), {}};
  report.stabilization = stabilization_of(report.rows);
  return report;
}

bool SmallWindowTable::all_pass() const {
  return !cells.empty() && std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.pass; });
}

SmallWindowTable small_window_table(Int s_max, const WindowOptions& options) {
  if (s_max < 7) throw InvalidInput("small_window_table: s_max must be at least 7");
  SmallWindowTable table;
  for (Int q = 0; q < static_cast<Int>(kSmallWindowTotals.size()); ++q) {
    const auto report = scan_window(q, std::max<Int>(q, 1), s_max, options);
    for (const auto& row : report.rows) {
      const auto idx = static_cast<std::size_t>(q);
      SmallWindowCell cell{q, row.s, row.n, row.total(), row.sc_total(), false};
      cell.pass = cell.total == kSmallWindowTotals[idx] && cell.sc == kSmallWindowSelfConjugate[idx];
      table.cells.push_back(cell);
    }
  }
  return table;
}

LocalizationResult localization_check(Int n, const MaximizerOptions& options) {
  auto mo = options;
  mo.include_members = true;
  const auto table = maximizers(n, mo);
  const Int s = table.s;
  const Int q = table.q;
  for (const auto& row : table.rows) {
    for (const auto& p : row.members) {
      const auto c = compress(p);
      auto fail = [&](std::string why) { return LocalizationResult{false, p, std::move(why)}; };
      if (static_cast<Int>(c.support()) != s) return fail("support differs from s");
      const auto g = gaps(c);
      for (std::size_t k = 0; k < c.support(); ++k) {
        const auto i = static_cast<Int>(k + 1);
        if (g.values[k] > 1 && i > q) return fail("active gap at i=" + std::to_string(i) + " > q");
        if (c.runs()[k].mult > 1 && (c.runs()[k].size > q || i < s - q + 1))
          return fail("repeated size " + std::to_string(c.runs()[k].size) + " at i=" + std::to_string(i));
      }
    }
  }
  return {};
}

}  // namespace partgraph
