#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bisyz/geometry.hpp"
#include "bisyz/report.hpp"
#include "bisyz/saturation.hpp"
#include "bisyz/verify.hpp"

namespace py = pybind11;

namespace {

bisyz::IdealSpec ideal_from_strings(const std::vector<std::string>& gens) {
  std::vector<bisyz::BiPoly> polys;
  polys.reserve(gens.size());
  for (const auto& g : gens) polys.push_back(bisyz::parse_poly(g));
  if (polys.empty()) throw bisyz::EmptyIdealError();
  return bisyz::IdealSpec::from_generators(std::move(polys));
}

py::object json_to_py(const bisyz::Json& j) {
  const py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

py::dict local_report_to_dict(const bisyz::LocalReport& rep) {
  py::dict d;
  d["point"] = rep.point.to_string();
  d["multiplicity"] = rep.multiplicity;
  d["tangent_dim"] = rep.tangent_dim;
  d["conormal_dim"] = rep.conormal_dim;
  d["curvilinear"] = rep.curvilinear;
  d["lci"] = rep.lci;
  return d;
}

}  // namespace

PYBIND11_MODULE(_bisyz, m) {
  m.doc() =
      "Syzygies, saturations, Hilbert functions and base-point invariants "
      "for bihomogeneous ideals in Q[s,u,t,v]";

  py::register_exception<bisyz::Error>(m, "BisyzError");

  m.def("parse_poly",
        [](const std::string& text) {
          return bisyz::to_string(bisyz::parse_poly(text));
        },
        py::arg("text"),
        "Parse a polynomial in s,u,t,v and return its canonical form.");

  m.def("bidegree",
        [](const std::string& text) {
          const bisyz::BiDegree d = bisyz::parse_poly(text).bidegree();
          return std::pair<int, int>(d.first, d.second);
        },
        py::arg("poly"));

  m.def("poly_arith",
        [](const std::string& a, const std::string& b, const std::string& op) {
          const bisyz::BiPoly pa = bisyz::parse_poly(a);
          const bisyz::BiPoly pb = bisyz::parse_poly(b);
          if (op == "add") return bisyz::to_string(pa + pb);
          if (op == "sub") return bisyz::to_string(pa - pb);
          if (op == "mul") return bisyz::to_string(pa * pb);
          throw bisyz::Error("op must be add, sub or mul");
        },
        py::arg("a"), py::arg("b"), py::arg("op"));

  m.def("is_zero_dimensional",
        [](const std::vector<std::string>& gens) {
          return bisyz::is_zero_dimensional(ideal_from_strings(gens));
        },
        py::arg("generators"));

  m.def("base_points",
        [](const std::vector<std::string>& gens) {
          const bisyz::BasePointLocus locus =
              bisyz::base_points(ideal_from_strings(gens));
          std::vector<std::string> pts;
          for (const auto& p : locus.rational_points)
            pts.push_back(p.to_string());
          return std::pair<std::vector<std::string>, bool>(pts, locus.complete);
        },
        py::arg("generators"),
        "Rational base points (normalized) and the completeness flag.");

  m.def("local_report",
        [](const std::vector<std::string>& gens, const std::string& point) {
          return local_report_to_dict(bisyz::local_report(
              ideal_from_strings(gens), bisyz::parse_point(point)));
        },
        py::arg("generators"), py::arg("point"));

  m.def("is_lci_global",
        [](const std::vector<std::string>& gens) {
          return bisyz::is_lci_global(ideal_from_strings(gens));
        },
        py::arg("generators"));

  m.def("degree_of_Z",
        [](const std::vector<std::string>& gens) {
          return bisyz::degree_of_Z(ideal_from_strings(gens));
        },
        py::arg("generators"));

  m.def("conormal_hilbert_constant",
        [](const std::vector<std::string>& gens) {
          return bisyz::conormal_hilbert_constant(ideal_from_strings(gens));
        },
        py::arg("generators"));

  m.def("saturate_ideal",
        [](const std::vector<std::string>& gens) {
          const auto sat = bisyz::saturate(bisyz::SubmodulePresentation::ideal(
              ideal_from_strings(gens).generators));
          std::vector<std::string> out;
          for (const auto& g : sat.module.generators)
            out.push_back(bisyz::to_string(g.components[0]));
          return out;
        },
        py::arg("generators"),
        "Generators of the saturation by the irrelevant ideal <st,sv,ut,uv>.");

  m.def("syzygies",
        [](const std::vector<std::string>& gens) {
          const auto syz =
              bisyz::syzygy_module(ideal_from_strings(gens).generators);
          std::vector<std::vector<std::string>> out;
          for (const auto& g : syz.generators) {
            std::vector<std::string> row;
            for (const auto& c : g.components)
              row.push_back(bisyz::to_string(c));
            out.push_back(std::move(row));
          }
          return out;
        },
        py::arg("generators"));

  m.def("koszul_check",
        [](const std::vector<std::string>& gens,
           const std::vector<std::string>& syzygy) {
          const bisyz::IdealSpec ideal = ideal_from_strings(gens);
          std::vector<bisyz::BiPoly> comps;
          for (const auto& s : syzygy) comps.push_back(bisyz::parse_poly(s));
          return json_to_py(bisyz::koszul_check_sections(ideal, comps));
        },
        py::arg("generators"), py::arg("syzygy"));

  m.def("theorem_check",
        [](const std::vector<std::string>& gens) {
          return json_to_py(bisyz::theorem_sections(ideal_from_strings(gens)));
        },
        py::arg("generators"),
        "Full saturated-Koszul vs LCI report for a three-generator ideal.");

  m.def("analyze",
        [](const std::vector<std::string>& gens) {
          return json_to_py(bisyz::hilbert_sections(ideal_from_strings(gens)));
        },
        py::arg("generators"));

  m.def("run_reference_claims", [] {
    std::vector<py::dict> out;
    for (const auto& r : bisyz::run_reference_claims({})) {
      py::dict d;
      d["id"] = r.id;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      out.push_back(std::move(d));
    }
    return out;
  });
}
