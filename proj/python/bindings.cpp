#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "partgraph/enumerate.hpp"
#include "partgraph/extremal.hpp"
#include "partgraph/io.hpp"
#include "partgraph/transfer_graph.hpp"
#include "partgraph/verify.hpp"
#include "partgraph/windows.hpp"

namespace py = pybind11;
using namespace partgraph;

namespace {

py::tuple profile_tuple(BonusProfile p) { return py::make_tuple(p.a, p.b); }

Pipeline pipeline_of(bool fast) { return fast ? Pipeline::localized : Pipeline::full; }

}  // namespace

PYBIND11_MODULE(_partgraph, m) {
  m.doc() = "Degree theory of the partition graph G_n";

  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
  (void)invalid;

  py::class_<Partition>(m, "Partition")
      .def(py::init([](std::vector<Int> parts) { return Partition::from_parts(std::move(parts)); }), py::arg("parts"))
      .def_property_readonly("parts", &Partition::parts)
      .def_property_readonly("n", &Partition::n)
      .def("__len__", &Partition::length)
      .def("__str__", &Partition::to_string)
      .def("__repr__", [](const Partition& p) { return "Partition(" + p.to_string() + ")"; })
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__lt__", [](const Partition& a, const Partition& b) { return a < b; })
      .def("__hash__", [](const Partition& p) { return std::hash<Partition>{}(p); });

  py::class_<CompressedForm>(m, "CompressedForm")
      .def_property_readonly("runs",
                             [](const CompressedForm& c) {
                               std::vector<std::pair<Int, Int>> out;
                               for (const auto& r : c.runs()) out.emplace_back(r.size, r.mult);
                               return out;
                             })
      .def_property_readonly("support", &CompressedForm::support)
      .def_property_readonly("n", &CompressedForm::n)
      .def("decompress", &CompressedForm::decompress)
      .def("__str__", &CompressedForm::to_string)
      .def("__eq__", [](const CompressedForm& a, const CompressedForm& b) { return a == b; });

  m.def("from_parts", [](std::vector<Int> parts) { return Partition::from_parts(std::move(parts)); });
  m.def("parse_partition", [](const std::string& text) { return parse_partition(text); });
  m.def("compress", &compress);
  m.def("gaps", [](const Partition& p) { return gaps(compress(p)).values; });
  m.def("bonus_profile", [](const Partition& p) { return profile_tuple(bonus_profile(compress(p))); });
  m.def("excess_decomposition", [](const Partition& p) {
    const auto e = excess_decomposition(compress(p));
    return py::make_tuple(e.gap_excess, e.mult_excess);
  });
  m.def("conjugate", py::overload_cast<const Partition&>(&conjugate));
  m.def("conjugate_naive", &conjugate_naive);
  m.def("staircase", &staircase);
  m.def("triangular", &triangular);
  m.def("enumerate_partitions", &all_partitions, py::arg("n"));
  m.def("partition_count", &partition_count);

  m.def("neighbors", [](const Partition& p) { return neighbors(p).neighbors; });
  m.def("degree_oracle", &degree_oracle);
  m.def("degree_formula", &degree_formula);
  m.def(
      "degree_spectrum",
      [](Int n, int jobs, Int cap) {
        return degree_spectrum(n, SpectrumOptions{jobs, cap});
      },
      py::arg("n"), py::arg("jobs") = 1, py::arg("cap") = kDefaultCap);
  m.def("edge_list", &edge_list, py::arg("n"), py::arg("cap") = kDefaultCap);

  m.def("decompose", [](Int n) {
    const auto d = decompose(n);
    return py::make_tuple(d.s, d.q);
  });
  m.def("rho", &rho);
  m.def("rho_oracle", &rho_oracle);
  m.def("max_degree", &max_degree);
  m.def("admissible_profiles", [](Int q) {
    py::list out;
    for (const auto& p : admissible_profiles(q)) out.append(profile_tuple(p));
    return out;
  });

  py::class_<FibreRow>(m, "FibreRow")
      .def_property_readonly("profile", [](const FibreRow& r) { return profile_tuple(r.profile); })
      .def_readonly("count", &FibreRow::count)
      .def_readonly("self_conjugate", &FibreRow::self_conjugate)
      .def_readonly("members", &FibreRow::members);

  py::class_<FibreTable>(m, "FibreTable")
      .def_readonly("n", &FibreTable::n)
      .def_readonly("s", &FibreTable::s)
      .def_readonly("q", &FibreTable::q)
      .def_readonly("delta", &FibreTable::delta)
      .def_readonly("rows", &FibreTable::rows)
      .def_property_readonly("total", &FibreTable::total)
      .def_property_readonly("sc_total", &FibreTable::sc_total)
      .def("profiles_match", &FibreTable::profiles_match)
      .def("counts", [](const FibreTable& t) {
        py::dict out;
        for (const auto& r : t.rows) out[profile_tuple(r.profile)] = r.count;
        return out;
      })
      .def("to_json", [](const FibreTable& t) { return io::to_json(t).dump(2); })
      .def("to_csv", [](const FibreTable& t) { return io::fibre_table_csv_header() + io::to_csv_rows(t); });

  m.def(
      "maximizers",
      [](Int n, bool include_members, bool fast, int jobs, Int cap) {
        MaximizerOptions mo{include_members, pipeline_of(fast), jobs, cap};
        return maximizers(n, mo);
      },
      py::arg("n"), py::arg("include_members") = false, py::arg("fast") = false, py::arg("jobs") = 1,
      py::arg("cap") = kDefaultCap);
  m.def("support_maximal_scan", &support_maximal_scan);
  m.def("canonical_representative", &canonical_representative, py::arg("s"), py::arg("q"), py::arg("a"),
        py::arg("b"));
  m.def("slack_family", &slack_family, py::arg("s"), py::arg("q"), py::arg("a"), py::arg("b"));
  m.def("self_conjugate_count", &self_conjugate_count);

  py::class_<WindowReport>(m, "WindowReport")
      .def_readonly("q", &WindowReport::q)
      .def_readonly("rows", &WindowReport::rows)
      .def_property_readonly("constant", [](const WindowReport& r) { return r.stabilization.constant; })
      .def_property_readonly("change_points", [](const WindowReport& r) { return r.stabilization.change_points; })
      .def("to_json", [](const WindowReport& r) { return io::to_json(r).dump(2); })
      .def("to_csv", [](const WindowReport& r) { return io::to_csv(r); });

  m.def(
      "scan_window",
      [](Int q, Int s_min, Int s_max, bool fast, int jobs, std::optional<std::filesystem::path> cache_dir) {
        WindowOptions wo;
        wo.pipeline = pipeline_of(fast);
        wo.jobs = jobs;
        wo.cache_dir = std::move(cache_dir);
        return scan_window(q, s_min, s_max, wo);
      },
      py::arg("q"), py::arg("s_min"), py::arg("s_max"), py::arg("fast") = true, py::arg("jobs") = 1,
      py::arg("cache_dir") = py::none());

  m.def("small_window_table", [](Int s_max) {
    const auto table = small_window_table(s_max);
    py::list cells;
    for (const auto& c : table.cells) {
      py::dict d;
      d["q"] = c.q;
      d["s"] = c.s;
      d["n"] = c.n;
      d["total"] = c.total;
      d["sc"] = c.sc;
      d["pass"] = c.pass;
      cells.append(d);
    }
    return py::make_tuple(cells, table.all_pass());
  });

  m.def("localization_check", [](Int n) {
    const auto r = localization_check(n);
    return py::make_tuple(r.ok, r.counterexample);
  });

  m.def(
      "verify",
      [](Int max_n, int jobs) {
        py::list out;
        for (const auto& r : verify_all(VerifyOptions{max_n, jobs, kDefaultCap})) {
          py::dict d;
          d["check"] = r.name;
          d["pass"] = r.pass;
          d["cases"] = r.cases;
          d["seconds"] = r.seconds;
          d["counterexample"] = r.counterexample;
          out.append(d);
        }
        return out;
      },
      py::arg("max_n"), py::arg("jobs") = 1);
}
