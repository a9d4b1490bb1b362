// partgraph: degree theory of the partition graph G_n from the command line.
//
// Exit codes: 0 success, 2 usage or parse error, 3 invariant violation,
// 4 enumeration cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "partgraph/enumerate.hpp"
#include "partgraph/extremal.hpp"
#include "partgraph/io.hpp"
#include "partgraph/transfer_graph.hpp"
#include "partgraph/verify.hpp"
#include "partgraph/windows.hpp"

namespace {

using namespace partgraph;

enum Exit : int { kOk = 0, kUsage = 2, kInvariant = 3, kCap = 4 };

struct RunConfig {
  std::string format = "table";
  std::string cache_dir;
  int jobs = 1;
  Int cap = kDefaultCap;
};

std::string profile_string(BonusProfile p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

template <class Seq>
std::string join(const Seq& seq, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : seq) {
    if (!first) out << sep;
    out << v;
    first = false;
  }
  return out.str();
}

// ---- degree ---------------------------------------------------------------

int run_degree(const RunConfig& cfg, const std::string& text, bool with_oracle) {
  const auto p = parse_partition(text);
  const auto c = compress(p);
  const auto g = gaps(c);
  const auto profile = bonus_profile(c);
  const Int formula = degree_formula(p);
  std::vector<Int> mults;
  for (const auto& run : c.runs()) mults.push_back(run.mult);
  std::optional<Int> oracle;
  if (with_oracle) oracle = degree_oracle(p);

  if (cfg.format == "json") {
    io::Json j;
    j["partition"] = p.to_string();
    j["n"] = p.n();
    j["r"] = c.support();
    j["gaps"] = g.values;
    j["multiplicities"] = mults;
    j["a"] = profile.a;
    j["b"] = profile.b;
    j["degree"] = formula;
    if (oracle) {
      j["oracle_degree"] = *oracle;
      j["agree"] = *oracle == formula;
    }
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "partition,n,r,a,b,degree" << (oracle ? ",oracle_degree,agree" : "") << '\n';
    std::cout << '"' << p.to_string() << "\"," << p.n() << ',' << c.support() << ',' << profile.a << ','
              << profile.b << ',' << formula;
    if (oracle) std::cout << ',' << *oracle << ',' << (*oracle == formula ? "true" : "false");
    std::cout << '\n';
  } else {
    std::cout << "partition       " << p.to_string() << '\n'
              << "n               " << p.n() << '\n'
              << "r               " << c.support() << '\n'
              << "gaps            " << join(g.values) << '\n'
              << "multiplicities  " << join(mults) << '\n'
              << "profile (A,B)   " << profile_string(profile) << '\n'
              << "degree          " << formula << '\n';
    if (oracle)
      std::cout << "oracle degree   " << *oracle << '\n'
                << "agree           " << (*oracle == formula ? "yes" : "NO") << '\n';
  }
  if (oracle && *oracle != formula) {
    std::cerr << "invariant violation: formula " << formula << " != oracle " << *oracle << " for "
              << p.to_string() << '\n';
    return kInvariant;
  }
  return kOk;
}

// ---- max ------------------------------------------------------------------

void print_fibre_table(const FibreTable& t) {
  std::cout << "n = " << t.n << "  (s = " << t.s << ", q = " << t.q << ")\n"
            << "max degree = " << t.delta << '\n';
  std::cout << std::left << std::setw(10) << "profile" << std::setw(8) << "count" << "self-conjugate\n";
  for (const auto& row : t.rows) {
    std::cout << std::setw(10) << profile_string(row.profile) << std::setw(8) << row.count << row.self_conjugate
              << '\n';
    for (const auto& m : row.members) std::cout << "    " << m.to_string() << '\n';
  }
  std::cout << "total = " << t.total() << ", self-conjugate = " << t.sc_total() << '\n';
}

int run_max(const RunConfig& cfg, Int n, bool members, bool fast) {
  MaximizerOptions mo;
  mo.include_members = members;
  mo.pipeline = fast ? Pipeline::localized : Pipeline::full;
  mo.jobs = cfg.jobs;
  mo.cap = cfg.cap;
  const auto table = maximizers(n, mo);
  if (cfg.format == "json")
    std::cout << io::to_json(table).dump(2) << '\n';
  else if (cfg.format == "csv")
    std::cout << io::fibre_table_csv_header() << io::to_csv_rows(table);
  else
    print_fibre_table(table);
  if (!table.profiles_match()) {
    std::cerr << "invariant violation: realized profiles differ from the admissible set for q=" << table.q
              << '\n';
    return kInvariant;
  }
  return kOk;
}

// ---- window ---------------------------------------------------------------

std::pair<Int, Int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InvalidInput("s-range must look like A..B, got '" + text + "'");
  try {
    std::size_t used = 0;
    const auto lo_text = text.substr(0, dots);
    const auto hi_text = text.substr(dots + 2);
    const Int lo = std::stoll(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument("trailing");
    const Int hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument("trailing");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidInput("s-range must look like A..B, got '" + text + "'");
  }
}

int run_window(const RunConfig& cfg, Int q, const std::string& range, bool full) {
  auto [lo, hi] = range.empty() ? default_window_range(q) : parse_range(range);
  WindowOptions wo;
  wo.pipeline = full ? Pipeline::full : Pipeline::localized;
  wo.jobs = cfg.jobs;
  wo.cap = cfg.cap;
  if (!cfg.cache_dir.empty()) wo.cache_dir = cfg.cache_dir;
  const auto report = scan_window(q, lo, hi, wo);

  if (cfg.format == "json") {
    std::cout << io::to_json(report).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << io::to_csv(report);
  } else {
    std::cout << "window q = " << q << ", s = " << lo << ".." << hi << '\n';
    std::cout << std::left << std::setw(6) << "s" << std::setw(8) << "n" << std::setw(8) << "delta"
              << std::setw(40) << "fibres (a,b):count" << std::setw(8) << "total" << "sc\n";
    for (const auto& row : report.rows) {
      std::string fibres;
      for (const auto& f : row.rows) fibres += profile_string(f.profile) + ":" + std::to_string(f.count) + " ";
      std::cout << std::setw(6) << row.s << std::setw(8) << row.n << std::setw(8) << row.delta << std::setw(40)
                << fibres << std::setw(8) << row.total() << row.sc_total() << '\n';
    }
    const auto& st = report.stabilization;
    if (st.constant)
      std::cout << "constant over scanned range [" << st.s_min << "," << st.s_max << "]\n";
    else
      std::cout << "values change at s = " << join(st.change_points, " ") << '\n';
  }
  for (const auto& row : report.rows) {
    if (!row.profiles_match()) {
      std::cerr << "invariant violation: realized profiles differ from the admissible set at n=" << row.n << '\n';
      return kInvariant;
    }
  }
  return kOk;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const RunConfig& cfg, Int max_n) {
  VerifyOptions vo;
  vo.max_n = max_n;
  vo.jobs = cfg.jobs;
  vo.cap = cfg.cap;
  if (max_n < 1) throw InvalidInput("--max-n must be at least 1");
  // Run and print one check at a time so long runs show progress.
  using Check = CheckResult (*)(const VerifyOptions&);
  const Check checks[] = {check_formula_vs_oracle, check_excess_identity,     check_conjugation,
                          check_max_degree,        check_min_degree,          check_profile_realization,
                          check_fibre_symmetry,    check_localization,        check_small_windows};
  io::Json results = io::Json::array();
  std::optional<CheckResult> first_failure;
  if (cfg.format == "csv") std::cout << "check,pass,cases,seconds,counterexample\n";
  for (auto check : checks) {
    const auto r = check(vo);
    if (!r.pass && !first_failure) first_failure = r;
    if (cfg.format == "json") {
      io::Json j;
      j["check"] = r.name;
      j["pass"] = r.pass;
      j["cases"] = r.cases;
      j["seconds"] = r.seconds;
      if (r.counterexample) j["counterexample"] = *r.counterexample;
      if (!r.detail.empty()) j["detail"] = r.detail;
      results.push_back(std::move(j));
    } else if (cfg.format == "csv") {
      std::cout << r.name << ',' << (r.pass ? "true" : "false") << ',' << r.cases << ',' << std::fixed
                << std::setprecision(3) << r.seconds << ",\"" << r.counterexample.value_or("") << "\"\n";
    } else {
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(22) << r.name << std::right
                << std::setw(10) << r.cases << " cases  " << std::fixed << std::setprecision(2) << r.seconds
                << " s";
      if (r.counterexample) std::cout << "  counterexample: " << *r.counterexample;
      std::cout << '\n' << std::flush;
    }
  }
  if (cfg.format == "json") {
    io::Json j;
    j["max_n"] = max_n;
    j["checks"] = std::move(results);
    j["pass"] = !first_failure.has_value();
    std::cout << j.dump(2) << '\n';
  }
  if (first_failure) {
    std::cerr << "verification failed in " << first_failure->name << ": "
              << first_failure->counterexample.value_or("?");
    if (!first_failure->detail.empty()) std::cerr << " (" << first_failure->detail << ")";
    std::cerr << '\n';
    return kInvariant;
  }
  return kOk;
}

// ---- spectrum -------------------------------------------------------------

int run_spectrum(const RunConfig& cfg, Int n, const std::string& edges_path) {
  SpectrumOptions so;
  so.jobs = cfg.jobs;
  so.cap = cfg.cap;
  const auto spectrum = degree_spectrum(n, so);
  const Int min_deg = spectrum.begin()->first;
  const Int max_deg = spectrum.rbegin()->first;
  const bool max_ok = max_deg == max_degree(n);

  if (cfg.format == "json") {
    auto j = io::spectrum_to_json(n, spectrum);
    j["min_degree"] = min_deg;
    j["max_degree"] = max_deg;
    j["max_matches_formula"] = max_ok;
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << io::spectrum_to_csv(n, spectrum);
  } else {
    std::cout << "n = " << n << ", p(n) = " << partition_count(n) << '\n';
    std::cout << std::left << std::setw(8) << "degree" << "count\n";
    for (const auto& [d, c] : spectrum) std::cout << std::setw(8) << d << c << '\n';
    std::cout << "min degree = " << min_deg << ", max degree = " << max_deg
              << (max_ok ? " (matches closed form)" : " (DIFFERS from closed form)") << '\n';
  }
  if (!edges_path.empty()) {
    std::ofstream out(edges_path);
    if (!out) throw InvalidInput("cannot open edge list file '" + edges_path + "'");
    io::write_edge_list(out, edge_list(n, cfg.cap));
  }
  if (!max_ok) {
    std::cerr << "invariant violation: enumerated max degree " << max_deg << " != " << max_degree(n) << '\n';
    return kInvariant;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree theory of the partition graph G_n"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  if (const char* env = std::getenv("PARTGRAPH_CACHE")) cfg.cache_dir = env;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "Window row cache directory (env PARTGRAPH_CACHE)");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--cap", cfg.cap, "Largest p(n) that may be enumerated")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string partition_text;
  bool with_oracle = false;
  auto* degree = app.add_subcommand("degree", "Degree of one partition (plain '5,3,2,1,1' or '5^1 3^1 2^1 1^2')");
  degree->add_option("partition", partition_text, "Partition")->required();
  degree->add_flag("--oracle", with_oracle, "Also count neighbours by brute force");

  Int max_n_arg = 0;
  bool members = false;
  bool fast = false;
  auto* max = app.add_subcommand("max", "Maximal degree and maximizer fibres of n");
  max->add_option("n", max_n_arg, "n >= 1")->required()->check(CLI::PositiveNumber);
  max->add_flag("--members", members, "List every maximizer");
  max->add_flag("--fast", fast, "Use the localized support-maximal pipeline (no cap)");

  Int window_q = -1;
  std::string s_range;
  bool window_full = false;
  auto* window = app.add_subcommand("window", "Fibre data for n = T_s + q over a range of s");
  window->add_option("--q", window_q, "Excess q >= 0")->required()->check(CLI::NonNegativeNumber);
  window->add_option("--s-range", s_range, "Range A..B (default max(q,1)..q+12)");
  window->add_flag("--full", window_full, "Use full enumeration instead of the localized pipeline");

  Int verify_max_n = 40;
  auto* verify = app.add_subcommand("verify", "Run the invariant battery for every n <= max-n");
  verify->add_option("--max-n", verify_max_n, "Largest n")->capture_default_str()->check(CLI::PositiveNumber);

  Int spectrum_n = 0;
  std::string edges_path;
  auto* spectrum = app.add_subcommand("spectrum", "Degree spectrum of G_n");
  spectrum->add_option("n", spectrum_n, "n >= 1")->required()->check(CLI::PositiveNumber);
  spectrum->add_option("--edges", edges_path, "Also write the edge list to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*degree) return run_degree(cfg, partition_text, with_oracle);
    if (*max) return run_max(cfg, max_n_arg, members, fast);
    if (*window) return run_window(cfg, window_q, s_range, window_full);
    if (*verify) return run_verify(cfg, verify_max_n);
    if (*spectrum) return run_spectrum(cfg, spectrum_n, edges_path);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "; raise --cap or use a streaming/--fast path\n";
    return kCap;
  }
  return kUsage;
}
