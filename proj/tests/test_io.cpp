#include <doctest.h>

#include <sstream>

#include "partgraph/io.hpp"

using namespace partgraph;

namespace {

FibreTable table_for(Int n, bool members) {
  MaximizerOptions mo;
  mo.include_members = members;
  return maximizers(n, mo);
}

}  // namespace

TEST_CASE("fibre table JSON layout") {
  const auto j = io::to_json(table_for(12, true));
  CHECK(j.dump() ==
        R"({"n":12,"s":4,"q":2,"delta":14,"fibres":[{"a":1,"b":1,"count":1,"self_conjugate":1,)"
        R"("members":["5,3,2,1,1"]}],"total":1,"sc_total":1})");

  const auto bare = io::to_json(table_for(13, false));
  CHECK_FALSE(bare["fibres"][0].contains("members"));
  CHECK(bare["total"] == 6);
}

TEST_CASE("fibre table JSON round-trips byte for byte") {
  for (Int n = 1; n <= 30; ++n) {
    for (bool members : {false, true}) {
      const auto table = table_for(n, members);
      const auto text = io::to_json(table).dump(2);
      const auto back = io::fibre_table_from_json(io::Json::parse(text));
      REQUIRE(back == table);
      REQUIRE(io::to_json(back).dump(2) == text);
    }
  }
}

TEST_CASE("malformed fibre table JSON") {
  CHECK_THROWS_AS(io::fibre_table_from_json(io::Json::parse(R"({"n":3})")), InvalidInput);
  auto j = io::to_json(table_for(13, false));
  j["total"] = 7;
  CHECK_THROWS_AS(io::fibre_table_from_json(j), InvalidInput);
}

TEST_CASE("fibre table CSV") {
  CHECK(io::fibre_table_csv_header() == "n,s,q,delta,a,b,count,sc\n");
  CHECK(io::to_csv_rows(table_for(13, false)) ==
        "13,4,3,14,2,0,1,0\n"
        "13,4,3,14,1,1,4,0\n"
        "13,4,3,14,0,2,1,0\n");
}

TEST_CASE("window report formats") {
  const auto report = scan_window(1, 1, 3);
  CHECK(io::to_csv(report) ==
        "q,s,n,a,b,count,sc_fibre\n"
        "1,1,2,1,0,1,0\n"
        "1,1,2,0,1,1,0\n"
        "1,2,4,1,0,1,0\n"
        "1,2,4,0,1,1,0\n"
        "1,3,7,1,0,1,0\n"
        "1,3,7,0,1,1,0\n"
        "# s_range: 1..3\n"
        "# stabilization: constant over scanned range [1,3]\n"
        "# totals: 2 2 2\n"
        "# sc_totals: 0 0 0\n");

  const auto j = io::to_json(report);
  CHECK(j["q"] == 1);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0]["n"] == 2);
  CHECK(j["stabilization"]["verdict"] == "constant");
  CHECK(j["stabilization"]["change_points"].empty());
}

TEST_CASE("spectrum formats") {
  const auto spectrum = degree_spectrum(4);
  // (4), (1^4) have degree 1; (2,2) has 2; (3,1), (2,1,1) have 3.
  CHECK(io::spectrum_to_csv(4, spectrum) == "n,degree,count\n4,1,2\n4,2,1\n4,3,2\n");
  CHECK(io::spectrum_to_json(4, spectrum).dump() == R"({"n":4,"spectrum":{"1":2,"2":1,"3":2}})");
}

TEST_CASE("edge list format") {
  std::ostringstream out;
  io::write_edge_list(out, edge_list(3));
  CHECK(out.str() == "3 | 2,1\n2,1 | 1,1,1\n");
}
