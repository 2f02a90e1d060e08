#include "bisyz/verify.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "bisyz/geometry.hpp"
#include "bisyz/saturation.hpp"

namespace bisyz {

namespace {

constexpr const char* kEx2Text =
    "f1 : (2,2) = u^2*t*v\n"
    "f2 : (2,2) = u^2*t^2 + s*u*v^2\n"
    "f3 : (2,2) = s^2*t*v\n";

constexpr const char* kEx3Text =
    "f1 : (2,2) = s^2*v^2\n"
    "f2 : (2,2) = u^2*t^2\n"
    "f3 : (2,2) = s^2*t^2\n";

constexpr const char* kI3Text =
    "f1 : (2,2) = s^2*v^2\n"
    "f2 : (2,2) = s*u*t*v\n"
    "f3 : (2,2) = u^2*t^2\n";

// The nine recorded generators of the vanishing-syzygy module of ex2.
const char* const kEx2VanishingRows[9] = {
    "u^2*t^2 + s*u*v^2, -u^2*t*v, 0",
    "s^2*t*v, 0, -u^2*t*v",
    "0, s^2*t*v, -u^2*t^2 - s*u*v^2",
    "u*t^3*v + s*t*v^3, -u*t^2*v^2, 0",
    "s*t^3*v, -s*t^2*v^2, u*t*v^3",
    "s^2*t^2*v, -s^2*t*v^2, s*u*v^3",
    "s^3*u*v, 0, -s*u^3*v",
    "s^2*u^2*t, 0, -u^4*t",
    "s^3*u^2, 0, -s*u^4",
};

struct Context {
  ReferenceIdeals ideals;
  std::map<std::string, KoszulData> koszul;

  const IdealSpec& ideal(const std::string& key) const {
    if (key == "ex2") return ideals.ex2;
    if (key == "ex3") return ideals.ex3;
    return ideals.i3;
  }
  const KoszulData& data(const std::string& key) {
    auto it = koszul.find(key);
    if (it == koszul.end())
      it = koszul.emplace(key, build_koszul(ideal(key))).first;
    return it->second;
  }
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

struct Claim {
  std::string id;
  std::string description;
  std::function<Outcome(Context&)> run;
};

FreeModuleElement vector_from(const KoszulData& data, const char* text) {
  return FreeModuleElement(parse_poly_list(text), data.twists);
}

std::string points_to_string(const std::vector<PointP1xP1>& pts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ", ";
    out << pts[i].to_string();
  }
  return out.str();
}

Outcome check_locus(Context& ctx, const std::string& key,
                    const std::vector<PointP1xP1>& expected) {
  const BasePointLocus locus = base_points(ctx.ideal(key));
  if (!locus.complete) return fail("locus not certified complete");
  if (locus.rational_points != expected)
    return fail("found " + points_to_string(locus.rational_points));
  return ok("points " + points_to_string(locus.rational_points) +
            ", complete");
}

Outcome check_local(Context& ctx, const std::string& key, const PointP1xP1& p,
                    long mult, int tangent, bool curvi, bool lci) {
  const LocalReport rep = local_report(ctx.ideal(key), p);
  std::ostringstream got;
  got << "multiplicity " << rep.multiplicity << ", tangent dim "
      << rep.tangent_dim << ", conormal dim " << rep.conormal_dim
      << ", curvilinear " << (rep.curvilinear ? "yes" : "no") << ", lci "
      << (rep.lci ? "yes" : "no");
  if (rep.multiplicity != mult || rep.tangent_dim != tangent ||
      rep.curvilinear != curvi || rep.lci != lci)
    return fail(got.str());
  if (rep.conormal_dim < 2 * rep.multiplicity)
    return fail("conormal dimension below twice the multiplicity");
  return ok(got.str());
}

// x must be Koszul; when `expected_certificate` is given it must itself
// reproduce x over the fixed Koszul generators.
Outcome check_koszul_yes(Context& ctx, const std::string& key,
                         const char* vector_text,
                         const char* expected_certificate) {
  const KoszulData& data = ctx.data(key);
  const FreeModuleElement x = vector_from(data, vector_text);
  const KoszulVerdict verdict = koszul_verdict(x, data);
  if (!verdict.is_koszul) return fail("normal form against K is nonzero");
  if (!verdict.certificate) return fail("missing certificate");
  if (expected_certificate) {
    const std::vector<BiPoly> cert = parse_poly_list(expected_certificate);
    const auto kg = koszul_generators(data.ideal.generators, data.twists);
    FreeModuleElement combo = FreeModuleElement::zero(data.twists);
    for (std::size_t i = 0; i < 3; ++i) combo += kg[i].times_poly(cert[i]);
    if (!(combo == x))
      return fail("recorded certificate does not reproduce the syzygy");
  }
  std::ostringstream out;
  out << "Koszul; certificate (";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out << ", ";
    out << to_string((*verdict.certificate)[i]);
  }
  out << ")";
  return ok(out.str());
}

Outcome check_koszul_no(Context& ctx, const std::string& key,
                        const char* vector_text, bool expect_vanishes,
                        std::optional<bool> expect_in_range) {
  const KoszulData& data = ctx.data(key);
  const FreeModuleElement x = vector_from(data, vector_text);
  const KoszulVerdict verdict = koszul_verdict(x, data);
  if (verdict.is_koszul) return fail("unexpectedly Koszul");
  if (verdict.vanishes_at_base_points != expect_vanishes)
    return fail("vanishing flag disagrees");
  if (expect_in_range && verdict.in_range != *expect_in_range)
    return fail("range predicate disagrees");
  std::ostringstream out;
  out << "not Koszul; vanishes " << (verdict.vanishes_at_base_points ? "yes" : "no")
      << ", in range " << (verdict.in_range ? "yes" : "no") << " at module degree "
      << verdict.module_bidegree.to_string();
  return ok(out.str());
}

std::vector<Claim> make_claims() {
  std::vector<Claim> claims;
  const PointP1xP1 p01 = PointP1xP1::make(0, 1, 0, 1);
  const PointP1xP1 p10 = PointP1xP1::make(1, 0, 1, 0);
  // The third base point of ex2. Every generator vanishes at u = t = 0; the
  // recorded two-point list for this example misses it, and the stabilized
  // Hilbert function of R/I^sat (value 4 = 1 + 1 + 2) confirms it is real.
  const PointP1xP1 q10_01 = PointP1xP1::make(1, 0, 0, 1);

  claims.push_back({"ex2.bidegrees", "generators of ex2 all have bidegree (2,2)",
                    [](Context& ctx) -> Outcome {
                      for (const auto& d : ctx.ideal("ex2").bidegrees())
                        if (!(d == BiDegree{2, 2}))
                          return fail("found " + d.to_string());
                      return ok("all three (2,2)");
                    }});

  claims.push_back(
      {"ex2.basepoints",
       "ex2 base locus is {(0:1;0:1), (1:0;0:1), (1:0;1:0)}, complete",
       [=](Context& ctx) { return check_locus(ctx, "ex2", {p01, q10_01, p10}); }});

  claims.push_back({"ex2.local.p",
                    "ex2 at (0:1;0:1): multiplicity 1, tangent dim 0, curvilinear",
                    [=](Context& ctx) {
                      return check_local(ctx, "ex2", p01, 1, 0, true, true);
                    }});

  claims.push_back({"ex2.local.q",
                    "ex2 at (1:0;0:1): multiplicity 1, tangent dim 0, curvilinear",
                    [=](Context& ctx) {
                      return check_local(ctx, "ex2", q10_01, 1, 0, true, true);
                    }});

  claims.push_back({"ex2.local.pprime",
                    "ex2 at (1:0;1:0): multiplicity 2, tangent dim 1, curvilinear",
                    [=](Context& ctx) {
                      return check_local(ctx, "ex2", p10, 2, 1, true, true);
                    }});

  claims.push_back(
      {"ex2.vmatrix",
       "the nine recorded rows generate exactly the vanishing-syzygy module V",
       [](Context& ctx) -> Outcome {
         const KoszulData& data = ctx.data("ex2");
         SubmodulePresentation rows(data.twists);
         for (const char* text : kEx2VanishingRows)
           rows.add_generator(vector_from(data, text));
         const GroebnerBasis gb_rows = groebner_basis(rows);
         for (const auto& row : rows.generators)
           if (!verify_vanishing(row, data))
             return fail("a recorded row does not vanish at the base points");
         if (!submodule_contains(gb_rows, data.V))
           return fail("computed V has a generator outside the recorded rows");
         if (!submodule_contains(data.gb_V, rows))
           return fail("a recorded row lies outside the computed V");
         return ok("mutual membership of generators holds");
       }});

  claims.push_back({"ex2.row6.koszul",
                    "row 6 is Koszul and the recorded certificate reproduces it",
                    [](Context& ctx) {
                      return check_koszul_yes(ctx, "ex2",
                                              "s^2*t^2*v, -s^2*t*v^2, s*u*v^3",
                                              "0, t, -v");
                    }});

  claims.push_back({"ex2.row4.notkoszul",
                    "(u*t^3*v + s*t*v^3, -u*t^2*v^2, 0) vanishes but is not Koszul",
                    [](Context& ctx) {
                      return check_koszul_no(
                          ctx, "ex2", "u*t^3*v + s*t*v^3, -u*t^2*v^2, 0", true,
                          false);
                    }});

  claims.push_back({"ex2.uv.notkoszul",
                    "u·(s*t^3*v, -s*t^2*v^2, u*t*v^3) is not Koszul",
                    [](Context& ctx) {
                      return check_koszul_no(
                          ctx, "ex2", "s*u*t^3*v, -s*u*t^2*v^2, u^2*t*v^3",
                          true, false);
                    }});

  claims.push_back({"ex2.u2v.koszul",
                    "u^2·(s*t^3*v, -s*t^2*v^2, u*t*v^3) is Koszul with the recorded certificate",
                    [](Context& ctx) {
                      return check_koszul_yes(
                          ctx, "ex2", "s*u^2*t^3*v, -s*u^2*t^2*v^2, u^3*t*v^3",
                          "s*t*v, -u*v^2, 0");
                    }});

  claims.push_back({"ex2.sv.koszul",
                    "s·(s*t^3*v, -s*t^2*v^2, u*t*v^3) is Koszul with the recorded certificate",
                    [](Context& ctx) {
                      return check_koszul_yes(
                          ctx, "ex2", "s^2*t^3*v, -s^2*t^2*v^2, s*u*t*v^3",
                          "0, t^2, -t*v");
                    }});

  claims.push_back({"ex2.s2v.koszul",
                    "s^2·(s*t^3*v, -s*t^2*v^2, u*t*v^3) is Koszul",
                    [](Context& ctx) {
                      return check_koszul_yes(
                          ctx, "ex2", "s^3*t^3*v, -s^3*t^2*v^2, s^2*u*t*v^3",
                          "0, s*t^2, -s*t*v");
                    }});

  claims.push_back({"ex2.suv.koszul",
                    "s·u·(s*t^3*v, -s*t^2*v^2, u*t*v^3) is Koszul",
                    [](Context& ctx) {
                      return check_koszul_yes(
                          ctx, "ex2", "s^2*u*t^3*v, -s^2*u*t^2*v^2, s*u^2*t*v^3",
                          "0, u*t^2, -u*t*v");
                    }});

  claims.push_back(
      {"ex2.kproper", "K is a proper submodule of S for ex2",
       [](Context& ctx) -> Outcome {
         const KoszulData& data = ctx.data("ex2");
         const GroebnerBasis gb_S = groebner_basis(data.S);
         if (!submodule_contains(gb_S, data.K)) return fail("K is not inside S");
         for (const auto& g : data.S.generators)
           if (!in_submodule(g, data.gb_K))
             return ok("a syzygy generator lies outside K");
         return fail("S and K coincide");
       }});

  claims.push_back(
      {"ex2.sweep",
       "slice dimensions of K and V agree on the sampled range window of ex2 "
       "and differ at (4,6)",
       [](Context& ctx) -> Outcome {
         const KoszulData& data = ctx.data("ex2");
         for (int k = 3; k <= 9; ++k)
           for (int kp = 3; kp <= 9; ++kp) {
             const SliceComparison cmp = slice_compare(data, {k, kp});
             if (cmp.dim_K > cmp.dim_V)
               return fail("K slice exceeds V slice");
             if (cmp.in_range && !cmp.equal)
               return fail("slices differ inside the range at (" +
                           std::to_string(k) + "," + std::to_string(kp) + ")");
           }
         const SliceComparison at46 = slice_compare(data, {4, 6});
         if (at46.equal) return fail("slices unexpectedly equal at (4,6)");
         return ok("equal on the window where (k-5)(k'-5) >= 0; dim K=" +
                   std::to_string(at46.dim_K) + " < dim V=" +
                   std::to_string(at46.dim_V) + " at (4,6)");
       }});

  claims.push_back({"ex3.basepoint",
                    "ex3 base locus is the single point (0:1;0:1), complete",
                    [=](Context& ctx) { return check_locus(ctx, "ex3", {p01}); }});

  claims.push_back({"ex3.local",
                    "ex3 at (0:1;0:1): multiplicity 4, tangent dim 2, LCI, not curvilinear",
                    [=](Context& ctx) {
                      return check_local(ctx, "ex3", p01, 4, 2, false, true);
                    }});

  claims.push_back(
      {"ex3.kgens", "the Koszul generators of ex3 are the three recorded vectors",
       [](Context& ctx) -> Outcome {
         const KoszulData& data = ctx.data("ex3");
         const char* expected[3] = {
             "u^2*t^2, -s^2*v^2, 0",
             "s^2*t^2, 0, -s^2*v^2",
             "0, s^2*t^2, -u^2*t^2",
         };
         for (int i = 0; i < 3; ++i)
           if (!(data.K.generators[static_cast<std::size_t>(i)] ==
                 vector_from(data, expected[i])))
             return fail("generator " + std::to_string(i + 1) + " differs");
         return ok("all three match componentwise");
       }});

  claims.push_back({"ex3.syz25",
                    "(s*u*t^4*v, 0, -s*u*t^2*v^3) vanishes, fails the range "
                    "predicate, and is not Koszul",
                    [](Context& ctx) {
                      return check_koszul_no(ctx, "ex3",
                                             "s*u*t^4*v, 0, -s*u*t^2*v^3", true,
                                             false);
                    }});

  claims.push_back({"ex3.syz52",
                    "(0, s^4*u*t*v, -s^2*u^3*t*v) vanishes, fails the range "
                    "predicate, and is not Koszul",
                    [](Context& ctx) {
                      return check_koszul_no(ctx, "ex3",
                                             "0, s^4*u*t*v, -s^2*u^3*t*v", true,
                                             false);
                    }});

  claims.push_back(
      {"ex3.kproper", "K is a proper submodule of S for ex3",
       [](Context& ctx) -> Outcome {
         const KoszulData& data = ctx.data("ex3");
         const GroebnerBasis gb_S = groebner_basis(data.S);
         if (!submodule_contains(gb_S, data.K)) return fail("K is not inside S");
         for (const auto& g : data.S.generators)
           if (!in_submodule(g, data.gb_K))
             return ok("a syzygy generator lies outside K");
         return fail("S and K coincide");
       }});

  claims.push_back({"i3.basepoints",
                    "i3 base locus is {(0:1;0:1), (1:0;1:0)}, complete",
                    [=](Context& ctx) { return check_locus(ctx, "i3", {p01, p10}); }});

  claims.push_back({"i3.local.p",
                    "i3 at (0:1;0:1): multiplicity 3, fat point, not LCI",
                    [=](Context& ctx) {
                      return check_local(ctx, "i3", p01, 3, 2, false, false);
                    }});

  claims.push_back({"i3.local.pprime",
                    "i3 at (1:0;1:0): multiplicity 3, fat point, not LCI",
                    [=](Context& ctx) {
                      return check_local(ctx, "i3", p10, 3, 2, false, false);
                    }});

  for (const std::string key : {"ex2", "ex3", "i3"}) {
    const bool expect_lci = key != "i3";
    // deg Z values established by the fixed-bidegree row-reduction oracle:
    // 4 = 1+1+2 (ex2), 4 (ex3), 6 = 3+3 (i3).
    const long expect_degz = key == "ex2" ? 4 : (key == "ex3" ? 4 : 6);
    const long expect_conormal = key == "ex2" ? 8 : (key == "ex3" ? 8 : -1);
    claims.push_back(
        {key + ".theorem",
         "K^sat = V exactly when the ideal is LCI (" + key + ")",
         [key, expect_lci, expect_degz, expect_conormal](Context& ctx) -> Outcome {
           const TheoremReport rep = theorem_check(ctx.ideal(key));
           std::ostringstream got;
           got << "deg Z = " << rep.deg_z << ", H(I/I^2) = "
               << rep.conormal_constant << ", K^sat "
               << (rep.ksat_equals_v ? "=" : "!=") << " V, LCI "
               << (rep.lci ? "yes" : "no");
           if (!rep.biconditional_holds) return fail(got.str());
           if (rep.lci != expect_lci || rep.ksat_equals_v != expect_lci)
             return fail(got.str());
           if (rep.deg_z != expect_degz) return fail(got.str());
           if (expect_conormal >= 0 && rep.conormal_constant != expect_conormal)
             return fail(got.str());
           if (expect_conormal < 0 && rep.conormal_constant <= 2 * rep.deg_z)
             return fail(got.str());
           if (!expect_lci && !rep.separating_element)
             return fail("no separating element reported");
           if (!rep.hp_ksat_matches_formula)
             return fail("H(K^sat) disagrees with its closed form");
           if (!rep.hp_v_matches_formula)
             return fail("H(V) disagrees with its closed form");
           return ok(got.str());
         }});
  }

  for (const std::string key : {"ex2", "ex3"}) {
    claims.push_back(
        {key + ".hp.ksat",
         "H(K^sat) equals 3(k-1)(k'-1) - (k+1)(k'+1) on the sampled grid (" +
             key + ")",
         [key](Context& ctx) -> Outcome {
           const KoszulData& data = ctx.data(key);
           const SubmodulePresentation ksat = saturate(data.K).module;
           const GroebnerBasis gb = groebner_basis(ksat);
           const HilbertPoly2 closed =
               koszul_saturated_closed_form(data.degrees);
           const HilbertPoly2 hp = hilbert_polynomial_submodule(
               gb, default_corner_bound(data.K) + 8);
           if (!hp.same_coefficients(closed))
             return fail("interpolated coefficients differ from closed form");
           for (int k = 6; k <= 9; ++k)
             for (int kp = 6; kp <= 9; ++kp)
               if (Rational(hilbert_function_submodule(gb, {k, kp})) !=
                   closed(k, kp))
                 return fail("grid value mismatch at (" + std::to_string(k) +
                             "," + std::to_string(kp) + ")");
           return ok("coefficients and all 16 grid values match");
         }});
  }

  claims.push_back(
      {"vsat", "V is saturated and contains K for all three ideals",
       [](Context& ctx) -> Outcome {
         for (const std::string key : {"ex2", "ex3", "i3"}) {
           const KoszulData& data = ctx.data(key);
           if (!submodule_contains(data.gb_V, data.K))
             return fail("K not inside V for " + key);
           if (!is_saturated(data.V)) return fail("V not saturated for " + key);
           if (!is_saturated(data.S))
             return fail("S not saturated for " + key);
         }
         return ok("K ⊆ V, V and S saturated, for ex2, ex3, i3");
       }});

  return claims;
}

}  // namespace

ReferenceIdeals bundled_ideals() {
  return {parse_ideal_text(kEx2Text), parse_ideal_text(kEx3Text),
          parse_ideal_text(kI3Text)};
}

ReferenceIdeals load_reference_ideals(const std::string& dir) {
  return {parse_ideal_file(dir + "/ex2.ideal"),
          parse_ideal_file(dir + "/ex3.ideal"),
          parse_ideal_file(dir + "/i3.ideal")};
}

std::vector<ClaimResult> run_reference_claims(const VerifyOptions& options) {
  Context ctx{options.data_dir ? load_reference_ideals(*options.data_dir)
                               : bundled_ideals(),
              {}};
  std::vector<ClaimResult> results;
  for (const auto& claim : make_claims()) {
    if (!options.only.empty() &&
        claim.id.compare(0, options.only.size(), options.only) != 0)
      continue;
    ClaimResult result;
    result.id = claim.id;
    result.description = claim.description;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome outcome = claim.run(ctx);
      result.pass = outcome.pass;
      result.detail = outcome.detail;
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    result.millis =
        std::chrono::duration<double, std::milli>(stop - start).count();
    results.push_back(std::move(result));
  }
  return results;
}

bool all_passed(const std::vector<ClaimResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

}  // namespace bisyz
