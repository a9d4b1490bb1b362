#include "partgraph/partition.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>

namespace partgraph {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  n_ = std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Partition Partition::from_parts(std::vector<Int> parts) {
  if (parts.empty()) throw InvalidInput("partition must have at least one part");
  for (Int v : parts) {
    if (v < 1) throw InvalidInput("partition parts must be positive, got " + std::to_string(v));
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::from_sorted_unchecked(std::vector<Int> parts) {
  assert(!parts.empty());
  assert(std::is_sorted(parts.begin(), parts.end(), std::greater<>()));
  assert(parts.back() >= 1);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Int> GapVector::part_sizes() const {
  std::vector<Int> sizes(values.size());
  Int acc = 0;
  for (std::size_t i = values.size(); i-- > 0;) {
    acc += values[i];
    sizes[i] = acc;
  }
  return sizes;
}

CompressedForm CompressedForm::from_runs(std::vector<Run> runs) {
  if (runs.empty()) throw InvalidInput("compressed form must have at least one run");
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].size < 1 || runs[i].mult < 1)
      throw InvalidInput("compressed form needs positive sizes and multiplicities");
    if (i && runs[i].size >= runs[i - 1].size)
      throw InvalidInput("compressed form sizes must be strictly decreasing");
  }
  return CompressedForm(std::move(runs));
}

CompressedForm CompressedForm::from_gaps(std::span<const Int> gap_values, std::span<const Int> mults) {
  if (gap_values.empty() || gap_values.size() != mults.size())
    throw InvalidInput("gap and multiplicity vectors must be nonempty and of equal length");
  std::vector<Run> runs(gap_values.size());
  Int acc = 0;
  for (std::size_t i = gap_values.size(); i-- > 0;) {
    if (gap_values[i] < 1 || mults[i] < 1)
      throw InvalidInput("gaps and multiplicities must be positive");
    acc += gap_values[i];
    runs[i] = {acc, mults[i]};
  }
  return CompressedForm(std::move(runs));
}

Int CompressedForm::n() const {
  Int total = 0;
  for (const auto& r : runs_) total += r.size * r.mult;
  return total;
}

Partition CompressedForm::decompress() const {
  std::vector<Int> parts;
  for (const auto& r : runs_) parts.insert(parts.end(), static_cast<std::size_t>(r.mult), r.size);
  return Partition::from_sorted_unchecked(std::move(parts));
}

std::string CompressedForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(runs_[i].size) + '^' + std::to_string(runs_[i].mult);
  }
  return out;
}

CompressedForm compress(const Partition& p) {
  std::vector<Run> runs;
  for (Int v : p.parts()) {
    if (!runs.empty() && runs.back().size == v)
      ++runs.back().mult;
    else
      runs.push_back({v, 1});
  }
  return CompressedForm::from_runs(std::move(runs));
}

GapVector gaps(const CompressedForm& c) {
  const auto& runs = c.runs();
  GapVector g;
  g.values.resize(runs.size());
  for (std::size_t i = 0; i < runs.size(); ++i)
    g.values[i] = runs[i].size - (i + 1 < runs.size() ? runs[i + 1].size : 0);
  return g;
}

BonusProfile bonus_profile(const CompressedForm& c) {
  BonusProfile profile;
  const auto g = gaps(c);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (g.values[i] > 1) ++profile.a;
    if (c.runs()[i].mult > 1) ++profile.b;
  }
  return profile;
}

ExcessDecomposition excess_decomposition(const CompressedForm& c) {
  ExcessDecomposition e;
  const auto g = gaps(c);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    e.gap_excess += static_cast<Int>(i + 1) * (g.values[i] - 1);
    e.mult_excess += (c.runs()[i].mult - 1) * c.runs()[i].size;
  }
  return e;
}

CompressedForm conjugate(const CompressedForm& c) {
  const auto& runs = c.runs();
  const auto g = gaps(c);
  const std::size_t r = runs.size();
  std::vector<Int> prefix(r);
  Int acc = 0;
  for (std::size_t i = 0; i < r; ++i) {
    acc += runs[i].mult;
    prefix[i] = acc;
  }
  std::vector<Run> out;
  out.reserve(r);
  for (std::size_t i = r; i-- > 0;) out.push_back({prefix[i], g.values[i]});
  return CompressedForm::from_runs(std::move(out));
}

Partition conjugate(const Partition& p) { return conjugate(compress(p)).decompress(); }

Partition conjugate_naive(const Partition& p) {
  std::vector<Int> columns;
  for (Int col = 1; col <= p.largest(); ++col) {
    Int height = 0;
    for (Int v : p.parts())
      if (v >= col) ++height;
    columns.push_back(height);
  }
  return Partition::from_parts(std::move(columns));
}

Partition staircase(Int s) {
  if (s < 1) throw InvalidInput("staircase: s must be at least 1");
  std::vector<Int> parts;
  for (Int v = s; v >= 1; --v) parts.push_back(v);
  return Partition::from_sorted_unchecked(std::move(parts));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Int parse_int(std::string_view token, std::string_view whole) {
  token = trim(token);
  Int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw InvalidInput("cannot parse partition '" + std::string(whole) + "': bad integer '" +
                       std::string(token) + "'");
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) throw InvalidInput("cannot parse empty partition string");

  if (body.find('^') != std::string_view::npos) {
    std::vector<Run> runs;
    std::size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
      if (pos >= body.size()) break;
      auto next = body.find_first_of(" \t", pos);
      if (next == std::string_view::npos) next = body.size();
      const auto token = body.substr(pos, next - pos);
      const auto caret = token.find('^');
      if (caret == std::string_view::npos)
        throw InvalidInput("cannot parse partition '" + std::string(body) + "': expected size^mult");
      runs.push_back({parse_int(token.substr(0, caret), body), parse_int(token.substr(caret + 1), body)});
      pos = next;
    }
    return CompressedForm::from_runs(std::move(runs)).decompress();
  }

  std::vector<Int> parts;
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    parts.push_back(parse_int(body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos), body));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition::from_parts(std::move(parts));
}

}  // namespace partgraph
