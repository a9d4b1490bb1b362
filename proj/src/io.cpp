#include "partgraph/io.hpp"

#include <ostream>
#include <sstream>

namespace partgraph::io {

Json to_json(const FibreTable& table) {
  Json fibres = Json::array();
  for (const auto& row : table.rows) {
    Json f;
    f["a"] = row.profile.a;
    f["b"] = row.profile.b;
    f["count"] = row.count;
    f["self_conjugate"] = row.self_conjugate;
    if (table.has_members) {
      Json members = Json::array();
      for (const auto& p : row.members) members.push_back(p.to_string());
      f["members"] = std::move(members);
    }
    fibres.push_back(std::move(f));
  }
  Json j;
  j["n"] = table.n;
  j["s"] = table.s;
  j["q"] = table.q;
  j["delta"] = table.delta;
  j["fibres"] = std::move(fibres);
  j["total"] = table.total();
  j["sc_total"] = table.sc_total();
  return j;
}

FibreTable fibre_table_from_json(const Json& j) {
  try {
    FibreTable table;
    table.n = j.at("n").get<Int>();
    table.s = j.at("s").get<Int>();
    table.q = j.at("q").get<Int>();
    table.delta = j.at("delta").get<Int>();
    for (const auto& f : j.at("fibres")) {
      FibreRow row;
      row.profile = {f.at("a").get<Int>(), f.at("b").get<Int>()};
      row.count = f.at("count").get<Int>();
      row.self_conjugate = f.at("self_conjugate").get<Int>();
      if (f.contains("members")) {
        table.has_members = true;
        for (const auto& m : f.at("members")) row.members.push_back(parse_partition(m.get<std::string>()));
      }
      table.rows.push_back(std::move(row));
    }
    if (j.at("total").get<Int>() != table.total() || j.at("sc_total").get<Int>() != table.sc_total())
      throw InvalidInput("fibre table totals do not match its rows");
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed fibre table JSON: ") + e.what());
  }
}

std::string fibre_table_csv_header() { return "n,s,q,delta,a,b,count,sc\n"; }

std::string to_csv_rows(const FibreTable& table) {
  std::ostringstream out;
  for (const auto& row : table.rows)
    out << table.n << ',' << table.s << ',' << table.q << ',' << table.delta << ',' << row.profile.a << ','
        << row.profile.b << ',' << row.count << ',' << row.self_conjugate << '\n';
  return out.str();
}

namespace {

Json to_json(const Stabilization& st) {
  Json j;
  j["verdict"] = st.constant ? "constant" : "varies";
  j["s_min"] = st.s_min;
  j["s_max"] = st.s_max;
  j["change_points"] = st.change_points;
  return j;
}

}  // namespace

Json to_json(const WindowReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) rows.push_back(to_json(row));
  Json j;
  j["q"] = report.q;
  j["s_min"] = report.stabilization.s_min;
  j["s_max"] = report.stabilization.s_max;
  j["rows"] = std::move(rows);
  j["stabilization"] = to_json(report.stabilization);
  return j;
}

std::string to_csv(const WindowReport& report) {
  std::ostringstream out;
  out << "q,s,n,a,b,count,sc_fibre\n";
  for (const auto& row : report.rows)
    for (const auto& f : row.rows)
      out << report.q << ',' << row.s << ',' << row.n << ',' << f.profile.a << ',' << f.profile.b << ','
          << f.count << ',' << f.self_conjugate << '\n';
  const auto& st = report.stabilization;
  out << "# s_range: " << st.s_min << ".." << st.s_max << '\n';
  if (st.constant) {
    out << "# stabilization: constant over scanned range [" << st.s_min << "," << st.s_max << "]\n";
  } else {
    out << "# stabilization: varies; changes at s =";
    for (auto s : st.change_points) out << ' ' << s;
    out << '\n';
  }
  out << "# totals:";
  for (const auto& row : report.rows) out << ' ' << row.total();
  out << "\n# sc_totals:";
  for (const auto& row : report.rows) out << ' ' << row.sc_total();
  out << '\n';
  return out.str();
}

Json spectrum_to_json(Int n, const std::map<Int, Int>& spectrum) {
  Json counts = Json::object();
  for (const auto& [d, c] : spectrum) counts[std::to_string(d)] = c;
  Json j;
  j["n"] = n;
  j["spectrum"] = std::move(counts);
  return j;
}

std::string spectrum_to_csv(Int n, const std::map<Int, Int>& spectrum) {
  std::ostringstream out;
  out << "n,degree,count\n";
  for (const auto& [d, c] : spectrum) out << n << ',' << d << ',' << c << '\n';
  return out.str();
}

void write_edge_list(std::ostream& out, const std::vector<Edge>& edges) {
  for (const auto& [p, q] : edges) out << p.to_string() << " | " << q.to_string() << '\n';
}

}  // namespace partgraph::io
