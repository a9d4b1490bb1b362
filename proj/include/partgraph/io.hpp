#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "partgraph/extremal.hpp"
#include "partgraph/transfer_graph.hpp"
#include "partgraph/windows.hpp"

// Text formats. Partition strings are always emitted in plain comma form.
namespace partgraph::io {

using Json = nlohmann::ordered_json;

/// {n, s, q, delta, fibres: [{a, b, count, self_conjugate, members?}], total, sc_total}
Json to_json(const FibreTable& table);
FibreTable fibre_table_from_json(const Json& j);

/// `n,s,q,delta,a,b,count,sc`, one row per fibre.
std::string fibre_table_csv_header();
std::string to_csv_rows(const FibreTable& table);

/// {q, s_min, s_max, rows: [FibreTable...], stabilization: {...}}
Json to_json(const WindowReport& report);

/// Header `q,s,n,a,b,count,sc_fibre`, one line per fibre, then a summary
/// block of `# key: value` lines.
std::string to_csv(const WindowReport& report);

/// Object keyed by degree (as a string), increasing.
Json spectrum_to_json(Int n, const std::map<Int, Int>& spectrum);

/// Header `n,degree,count`.
std::string spectrum_to_csv(Int n, const std::map<Int, Int>& spectrum);

/// One edge per line: "<p> | <q>".
void write_edge_list(std::ostream& out, const std::vector<Edge>& edges);

}  // namespace partgraph::io
