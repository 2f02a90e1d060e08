#include "bisyz/report.hpp"

#include "bisyz/geometry.hpp"
#include "bisyz/saturation.hpp"

namespace bisyz {

Json json_poly(const BiPoly& p) { return to_string(p); }

Json json_point(const PointP1xP1& p) {
  return Json::array(
      {Json::array({rational_to_string(p.first[0]),
                    rational_to_string(p.first[1])}),
       Json::array({rational_to_string(p.second[0]),
                    rational_to_string(p.second[1])})});
}

Json json_bidegree(const BiDegree& d) {
  return Json::array({d.first, d.second});
}

Json json_ideal(const IdealSpec& spec) {
  Json j;
  Json gens = Json::array();
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    Json g;
    g["name"] = spec.names[i];
    g["poly"] = json_poly(spec.generators[i]);
    g["bidegree"] = json_bidegree(spec.generators[i].bidegree());
    gens.push_back(std::move(g));
  }
  j["generators"] = std::move(gens);
  return j;
}

Json json_local_report(const LocalReport& rep) {
  Json j;
  j["point"] = json_point(rep.point);
  j["multiplicity"] = rep.multiplicity;
  j["tangent_dim"] = rep.tangent_dim;
  j["conormal_dim"] = rep.conormal_dim;
  j["curvilinear"] = rep.curvilinear;
  j["lci"] = rep.lci;
  return j;
}

Json json_module_element(const FreeModuleElement& x) {
  Json comps = Json::array();
  for (const auto& c : x.components) comps.push_back(json_poly(c));
  return comps;
}

Json json_submodule(const SubmodulePresentation& m) {
  Json j;
  Json twists = Json::array();
  for (const auto& t : m.ambient_twists) twists.push_back(json_bidegree(t));
  j["ambient_twists"] = std::move(twists);
  Json gens = Json::array();
  for (const auto& g : m.generators) gens.push_back(json_module_element(g));
  j["generators"] = std::move(gens);
  return j;
}

Json json_hilbert_poly(const HilbertPoly2& hp) {
  Json j;
  j["c00"] = rational_to_string(hp.c00);
  j["c10"] = rational_to_string(hp.c10);
  j["c01"] = rational_to_string(hp.c01);
  j["c11"] = rational_to_string(hp.c11);
  j["stabilization_corner"] = json_bidegree(hp.stabilization_corner);
  return j;
}

Json json_koszul_verdict(const KoszulVerdict& verdict) {
  Json j;
  j["syzygy"] = json_module_element(verdict.syzygy);
  j["module_bidegree"] = json_bidegree(verdict.module_bidegree);
  j["pure_degree"] = Json::array(
      {verdict.module_bidegree.first + verdict.syzygy.twists[0].first,
       verdict.module_bidegree.second + verdict.syzygy.twists[0].second});
  j["in_range"] = verdict.in_range;
  j["vanishes_at_base_points"] = verdict.vanishes_at_base_points;
  j["is_koszul"] = verdict.is_koszul;
  if (verdict.certificate) {
    Json cert = Json::array();
    for (const auto& h : *verdict.certificate) cert.push_back(json_poly(h));
    j["certificate"] = std::move(cert);
  }
  return j;
}

std::string serialize_report(const Json& sections) {
  Json out;
  out["schema_version"] = kReportSchemaVersion;
  if (sections.is_object())
    for (const auto& [key, value] : sections.items()) out[key] = value;
  return out.dump(2) + "\n";
}

Json basepoints_sections(const IdealSpec& ideal) {
  Json j;
  j["ideal"] = json_ideal(ideal);
  const BasePointLocus locus = base_points(ideal);
  Json pts = Json::array();
  for (const auto& p : locus.rational_points) pts.push_back(json_point(p));
  j["base_points"] = std::move(pts);
  j["complete"] = locus.complete;
  return j;
}

Json saturate_sections(const IdealSpec& ideal) {
  Json j;
  j["ideal"] = json_ideal(ideal);
  const SaturationResult sat =
      saturate(SubmodulePresentation::ideal(ideal.generators));
  Json gens = Json::array();
  for (std::size_t i = 0; i < sat.module.generators.size(); ++i) {
    Json g;
    g["poly"] = json_poly(sat.module.generators[i].components[0]);
    g["witness_exponent"] = sat.witness_exponents[i];
    gens.push_back(std::move(g));
  }
  j["saturation"] = std::move(gens);
  j["is_saturated"] =
      is_saturated(SubmodulePresentation::ideal(ideal.generators));
  return j;
}

Json syzygies_sections(const IdealSpec& ideal) {
  Json j;
  j["ideal"] = json_ideal(ideal);
  j["syzygies"] = json_submodule(syzygy_module(ideal.generators));
  return j;
}

Json koszul_check_sections(const IdealSpec& ideal,
                           const std::vector<BiPoly>& syzygy) {
  KoszulData data = build_koszul(ideal);
  if (static_cast<int>(syzygy.size()) != 3)
    throw WrongGeneratorCountError("a syzygy needs exactly 3 components");
  const FreeModuleElement x(syzygy, data.twists);
  Json j;
  j["ideal"] = json_ideal(ideal);
  j["koszul_generators"] = json_submodule(data.K);
  j["verdict"] = json_koszul_verdict(koszul_verdict(x, data));
  return j;
}

Json lci_sections(const IdealSpec& ideal,
                  const std::optional<PointP1xP1>& point) {
  Json j;
  j["ideal"] = json_ideal(ideal);
  if (point) {
    j["local_reports"] = Json::array({json_local_report(local_report(ideal, *point))});
    return j;
  }
  j["lci_global"] = is_lci_global(ideal);
  const BasePointLocus locus = base_points(ideal);
  j["complete"] = locus.complete;
  if (locus.complete) {
    Json reports = Json::array();
    for (const auto& p : locus.rational_points)
      reports.push_back(json_local_report(local_report(ideal, p)));
    j["local_reports"] = std::move(reports);
  } else {
    j["note"] =
        "base locus has non-rational points; pointwise reports omitted";
  }
  return j;
}

Json hilbert_sections(const IdealSpec& ideal) {
  Json j;
  j["ideal"] = json_ideal(ideal);
  j["degree_of_Z"] = degree_of_Z(ideal);
  j["conormal_constant"] = conormal_hilbert_constant(ideal);

  const SubmodulePresentation isat =
      saturate(SubmodulePresentation::ideal(ideal.generators)).module;
  const GroebnerBasis gb = groebner_basis(isat);
  const HilbertPoly2 hp =
      hilbert_polynomial_quotient(gb, default_corner_bound(isat));
  j["hp_R_mod_Isat"] = json_hilbert_poly(hp);

  // Hilbert function table from the stabilization corner outward.
  Json table = Json::array();
  const BiDegree corner = hp.stabilization_corner;
  for (int k = corner.first; k < corner.first + 4; ++k)
    for (int kp = corner.second; kp < corner.second + 4; ++kp) {
      Json cell;
      cell["at"] = Json::array({k, kp});
      cell["value"] = hilbert_function_quotient(gb, {k, kp});
      table.push_back(std::move(cell));
    }
  j["hf_R_mod_Isat"] = std::move(table);

  if (ideal.generator_count() == 3) {
    const TheoremReport rep = theorem_check(ideal);
    j["hp_Ksat"] = json_hilbert_poly(rep.hp_ksat);
    j["hp_V"] = json_hilbert_poly(rep.hp_v);
    j["hp_Ksat_matches_closed_form"] = rep.hp_ksat_matches_formula;
    j["hp_V_matches_closed_form"] = rep.hp_v_matches_formula;
  }
  return j;
}

Json slice_sections(const IdealSpec& ideal, std::optional<BiDegree> at,
                    BiDegree max_degree) {
  KoszulData data = build_koszul(ideal);
  Json j;
  j["ideal"] = json_ideal(ideal);
  auto one = [&](BiDegree d) {
    const SliceComparison cmp = slice_compare(data, d);
    Json s;
    s["at"] = json_bidegree(d);
    s["dim_K"] = cmp.dim_K;
    s["dim_V"] = cmp.dim_V;
    s["equal"] = cmp.equal;
    s["in_range"] = cmp.in_range;
    return s;
  };
  if (at) {
    j["slice"] = one(*at);
  } else {
    Json slices = Json::array();
    for (int k = 0; k <= max_degree.first; ++k)
      for (int kp = 0; kp <= max_degree.second; ++kp)
        slices.push_back(one({k, kp}));
    j["slices"] = std::move(slices);
  }
  return j;
}

Json theorem_sections(const IdealSpec& ideal) {
  const TheoremReport rep = theorem_check(ideal);
  Json j;
  j["ideal"] = json_ideal(ideal);
  j["ksat_equals_V"] = rep.ksat_equals_v;
  j["lci_global"] = rep.lci;
  j["biconditional_holds"] = rep.biconditional_holds;
  j["degree_of_Z"] = rep.deg_z;
  j["conormal_constant"] = rep.conormal_constant;
  j["hp_Ksat"] = json_hilbert_poly(rep.hp_ksat);
  j["hp_V"] = json_hilbert_poly(rep.hp_v);
  j["hp_Ksat_matches_closed_form"] = rep.hp_ksat_matches_formula;
  j["hp_V_matches_closed_form"] = rep.hp_v_matches_formula;
  if (rep.separating_element)
    j["separating_element"] = json_module_element(*rep.separating_element);

  const BasePointLocus locus = base_points(ideal);
  Json pts = Json::array();
  for (const auto& p : locus.rational_points) pts.push_back(json_point(p));
  j["base_points"] = std::move(pts);
  j["complete"] = locus.complete;
  if (locus.complete) {
    Json reports = Json::array();
    for (const auto& p : locus.rational_points)
      reports.push_back(json_local_report(local_report(ideal, p)));
    j["local_reports"] = std::move(reports);
  }
  return j;
}

}  // namespace bisyz
