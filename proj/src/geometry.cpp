#include "bisyz/geometry.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "bisyz/hilbert.hpp"
#include "bisyz/saturation.hpp"

namespace bisyz {

namespace geometry_detail {

const std::array<Chart, 4>& charts() {
  static const std::array<Chart, 4> cs = {{
      {kVarS, kVarT, kVarU, kVarV},
      {kVarS, kVarV, kVarU, kVarT},
      {kVarU, kVarT, kVarS, kVarV},
      {kVarU, kVarV, kVarS, kVarT},
  }};
  return cs;
}

std::vector<BiPoly> chart_ideal(const IdealSpec& ideal, const Chart& chart) {
  std::vector<BiPoly> out;
  out.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators)
    out.push_back(g.substitute_one(chart.unit_first)
                      .substitute_one(chart.unit_second));
  return out;
}

bool point_in_chart(const PointP1xP1& p, const Chart& chart) {
  const Rational& first_unit =
      chart.unit_first == kVarS ? p.first[0] : p.first[1];
  const Rational& second_unit =
      chart.unit_second == kVarT ? p.second[0] : p.second[1];
  return first_unit != 0 && second_unit != 0;
}

std::array<Rational, 2> chart_coordinates(const PointP1xP1& p,
                                          const Chart& chart) {
  const Rational unit1 = chart.unit_first == kVarS ? p.first[0] : p.first[1];
  const Rational free1 = chart.unit_first == kVarS ? p.first[1] : p.first[0];
  const Rational unit2 =
      chart.unit_second == kVarT ? p.second[0] : p.second[1];
  const Rational free2 =
      chart.unit_second == kVarT ? p.second[1] : p.second[0];
  return {free1 / unit1, free2 / unit2};
}

namespace {

// Standard monomials x^i y^j of a chart ideal's lead terms; nullopt when the
// colength is infinite.
std::optional<std::vector<Monomial>> standard_monomials(
    const GroebnerBasis& gb, int x, int y) {
  int bound_x = -1, bound_y = -1;
  for (const auto& lt : gb.leads) {
    if (lt.mono.is_one()) return std::vector<Monomial>{};  // unit ideal
    if (lt.mono.exponent(y) == 0 && lt.mono.exponent(x) > 0)
      bound_x = bound_x < 0 ? lt.mono.exponent(x)
                            : std::min(bound_x, lt.mono.exponent(x));
    if (lt.mono.exponent(x) == 0 && lt.mono.exponent(y) > 0)
      bound_y = bound_y < 0 ? lt.mono.exponent(y)
                            : std::min(bound_y, lt.mono.exponent(y));
  }
  if (bound_x < 0 || bound_y < 0) return std::nullopt;
  std::vector<Monomial> out;
  for (int i = 0; i < bound_x; ++i)
    for (int j = 0; j < bound_y; ++j) {
      const Monomial m = Monomial::variable(x, i) * Monomial::variable(y, j);
      bool divisible = false;
      for (const auto& lt : gb.leads)
        if (lt.mono.divides(m)) {
          divisible = true;
          break;
        }
      if (!divisible) out.push_back(m);
    }
  return out;
}

std::optional<long> chart_colength(const std::vector<BiPoly>& gens, int x,
                                   int y) {
  const GroebnerBasis gb = groebner_basis(gens);
  const auto sm = standard_monomials(gb, x, y);
  if (!sm) return std::nullopt;
  return static_cast<long>(sm->size());
}

// Standard (slot, monomial) pairs for a submodule of a free chart module;
// nullopt when infinite.
std::optional<long> chart_module_colength(const GroebnerBasis& gb, int x,
                                          int y) {
  long total = 0;
  for (int slot = 0; slot < gb.rank(); ++slot) {
    int bound_x = -1, bound_y = -1;
    bool unit_slot = false;
    for (const auto& lt : gb.leads) {
      if (lt.slot != slot) continue;
      if (lt.mono.is_one()) {
        unit_slot = true;
        break;
      }
      if (lt.mono.exponent(y) == 0 && lt.mono.exponent(x) > 0)
        bound_x = bound_x < 0 ? lt.mono.exponent(x)
                              : std::min(bound_x, lt.mono.exponent(x));
      if (lt.mono.exponent(x) == 0 && lt.mono.exponent(y) > 0)
        bound_y = bound_y < 0 ? lt.mono.exponent(y)
                              : std::min(bound_y, lt.mono.exponent(y));
    }
    if (unit_slot) continue;
    if (bound_x < 0 || bound_y < 0) return std::nullopt;
    for (int i = 0; i < bound_x; ++i)
      for (int j = 0; j < bound_y; ++j) {
        const Monomial m = Monomial::variable(x, i) * Monomial::variable(y, j);
        bool divisible = false;
        for (const auto& lt : gb.leads)
          if (lt.slot == slot && lt.mono.divides(m)) {
            divisible = true;
            break;
          }
        if (!divisible) ++total;
      }
  }
  return total;
}

std::vector<BiPoly> power_of_maximal_ideal(int x, int y, int n) {
  std::vector<BiPoly> out;
  for (int i = 0; i <= n; ++i)
    out.push_back(BiPoly::term(
        Monomial::variable(x, i) * Monomial::variable(y, n - i), 1));
  return out;
}

// Colength of J + m^N for growing N until two consecutive values agree past
// N >= the value itself; that stabilized value is the local colength at the
// origin.
long stabilized_colength(const std::vector<BiPoly>& gens_at_origin, int x,
                         int y) {
  long prev = -1;
  for (int n = 1; n <= 64; ++n) {
    std::vector<BiPoly> gens = gens_at_origin;
    for (auto& m : power_of_maximal_ideal(x, y, n)) gens.push_back(m);
    const auto c = chart_colength(gens, x, y);
    if (!c) throw Error("truncated local ideal must have finite colength");
    if (*c == prev && n - 1 >= *c) return *c;
    prev = *c;
  }
  throw NoStabilizationError("local colength did not stabilize");
}

std::vector<BiPoly> translate_to_origin(const std::vector<BiPoly>& gens,
                                        int x, int y,
                                        const std::array<Rational, 2>& coords) {
  std::vector<BiPoly> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.shift(x, coords[0]).shift(y, coords[1]));
  return out;
}

// dim I_p/I_p² via the stabilized colength of F/(Syz(J) + J·F + m^N·F).
long stabilized_conormal(const std::vector<BiPoly>& gens_at_origin, int x,
                         int y) {
  const std::vector<BiDegree> twists(gens_at_origin.size(), BiDegree{0, 0});
  const SubmodulePresentation syz = syzygy_module(gens_at_origin);
  SubmodulePresentation base(twists);
  for (const auto& s : syz.generators)
    base.add_generator(FreeModuleElement{s.components, twists});
  for (int slot = 0; slot < base.rank(); ++slot)
    for (const auto& f : gens_at_origin)
      base.add_generator(FreeModuleElement::basis(twists, slot, f));

  long prev = -1;
  for (int n = 1; n <= 64; ++n) {
    SubmodulePresentation cut = base;
    for (int slot = 0; slot < cut.rank(); ++slot)
      for (auto& m : power_of_maximal_ideal(x, y, n))
        cut.add_generator(FreeModuleElement::basis(twists, slot, m));
    const auto c = chart_module_colength(groebner_basis(cut), x, y);
    if (!c) throw Error("truncated conormal module must have finite colength");
    if (*c == prev && n - 1 >= *c) return *c;
    prev = *c;
  }
  throw NoStabilizationError("local conormal dimension did not stabilize");
}

const Chart& canonical_chart(const PointP1xP1& p) {
  for (const auto& chart : charts())
    if (point_in_chart(p, chart)) return chart;
  throw Error("normalized point lies in no chart");
}

bool point_on_locus(const IdealSpec& ideal, const PointP1xP1& p) {
  const std::array<Rational, kVarCount> values = {p.first[0], p.first[1],
                                                  p.second[0], p.second[1]};
  for (const auto& g : ideal.generators)
    if (g.evaluate(values) != 0) return false;
  return true;
}

// Local invariants are colengths of Artinian quotients, so Z must be finite
// before any stabilization loop starts.
void require_point_on_finite_locus(const IdealSpec& ideal,
                                   const PointP1xP1& p) {
  if (!point_on_locus(ideal, p))
    throw PointNotOnLocusError("point " + p.to_string() +
                               " is not a base point of the ideal");
  if (!is_zero_dimensional(ideal))
    throw NotZeroDimensionalError("V(I) is not finite on P1xP1");
}

// Univariate polynomial in `var` of minimal degree lying in the chart
// ideal, found as the first linear dependency among normal forms of powers
// of `var` in the finite-dimensional quotient. Coefficients: c[k] on var^k.
std::vector<Rational> univariate_eliminant(const GroebnerBasis& gb,
                                           const std::vector<Monomial>& sm,
                                           int var) {
  std::map<Monomial, std::size_t, MonomialGreater> index;
  for (std::size_t i = 0; i < sm.size(); ++i) index.emplace(sm[i], i);

  // Rows of normal forms of var^0, var^1, ... over the standard basis.
  std::vector<std::vector<Rational>> rows;
  for (int power = 0;; ++power) {
    const BiPoly nf =
        normal_form(BiPoly::term(Monomial::variable(var, power), 1), gb);
    std::vector<Rational> row(sm.size(), Rational(0));
    for (const auto& [m, c] : nf.terms()) row[index.at(m)] = c;

    // Is row a combination of the earlier rows? Gaussian elimination with
    // the combination tracked alongside each pivot row.
    const std::vector<std::vector<Rational>>& work = rows;
    std::vector<Rational> target = row;
    std::vector<int> pivot_col(rows.size(), -1);
    std::vector<std::vector<Rational>> reduced;
    std::vector<std::vector<Rational>> ops;  // row ops applied, identity-extended
    for (std::size_t r = 0; r < work.size(); ++r) {
      std::vector<Rational> op(rows.size(), Rational(0));
      op[r] = 1;
      std::vector<Rational> cur = work[r];
      for (std::size_t k = 0; k < reduced.size(); ++k) {
        const int pc = pivot_col[k];
        if (pc < 0) continue;
        const Rational factor = cur[static_cast<std::size_t>(pc)];
        if (factor == 0) continue;
        for (std::size_t c = 0; c < cur.size(); ++c)
          cur[c] -= factor * reduced[k][c];
        for (std::size_t c = 0; c < op.size(); ++c)
          op[c] -= factor * ops[k][c];
      }
      int pc = -1;
      for (std::size_t c = 0; c < cur.size(); ++c)
        if (cur[c] != 0) {
          pc = static_cast<int>(c);
          break;
        }
      if (pc >= 0) {
        const Rational inv = Rational(1) / cur[static_cast<std::size_t>(pc)];
        for (auto& v : cur) v *= inv;
        for (auto& v : op) v *= inv;
      }
      pivot_col[r] = pc;
      reduced.push_back(std::move(cur));
      ops.push_back(std::move(op));
    }
    // Reduce the target against the triangularized rows.
    std::vector<Rational> tcombo(rows.size(), Rational(0));
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const int pc = pivot_col[k];
      if (pc < 0) continue;
      const Rational factor = target[static_cast<std::size_t>(pc)];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < target.size(); ++c)
        target[c] -= factor * reduced[k][c];
      for (std::size_t c = 0; c < tcombo.size(); ++c)
        tcombo[c] += factor * ops[k][c];
    }
    const bool dependent =
        std::all_of(target.begin(), target.end(),
                    [](const Rational& v) { return v == 0; });
    if (dependent) {
      // var^power - sum_k tcombo[k] var^k lies in the ideal.
      std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1,
                                   Rational(0));
      coeffs.back() = 1;
      for (std::size_t k = 0; k < tcombo.size(); ++k) coeffs[k] = -tcombo[k];
      return coeffs;
    }
    rows.push_back(std::move(row));
    if (power > static_cast<int>(sm.size()) + 1)
      throw Error("eliminant search exceeded the quotient dimension");
  }
}

std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  if (n == 0) return out;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

// All rational roots of the polynomial with the given rational coefficients
// (c[k] on x^k), by the rational root test after clearing denominators.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> roots;
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg >= 0 && coeffs[static_cast<std::size_t>(deg)] == 0) --deg;
  if (deg <= 0) return roots;  // constant: no roots (zero handled upstream)

  Int denom_lcm = 1;
  for (int k = 0; k <= deg; ++k) {
    const Int d = denominator(coeffs[static_cast<std::size_t>(k)]);
    denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
  }
  std::vector<Int> ic(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k)
    ic[static_cast<std::size_t>(k)] = static_cast<Int>(
        numerator(coeffs[static_cast<std::size_t>(k)]) *
        (denom_lcm / denominator(coeffs[static_cast<std::size_t>(k)])));

  int low = 0;
  while (low <= deg && ic[static_cast<std::size_t>(low)] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (low > deg) return roots;

  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (int k = deg; k >= 0; --k)
      acc = acc * x + Rational(ic[static_cast<std::size_t>(k)]);
    return acc;
  };
  for (const Int& p : divisors(ic[static_cast<std::size_t>(low)]))
    for (const Int& q : divisors(ic[static_cast<std::size_t>(deg)])) {
      const Rational candidate(p, q);
      for (const Rational& x : {candidate, Rational(-candidate)})
        if (eval(x) == 0 &&
            std::find(roots.begin(), roots.end(), x) == roots.end())
          roots.push_back(x);
    }
  return roots;
}

// Coefficients of a chart polynomial viewed in `var` only; requires the
// other chart variable to be absent.
std::vector<Rational> univariate_coefficients(const BiPoly& p, int var) {
  std::vector<Rational> out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(var);
    if (static_cast<int>(out.size()) <= e)
      out.resize(static_cast<std::size_t>(e) + 1, Rational(0));
    out[static_cast<std::size_t>(e)] += c;
  }
  return out;
}

std::vector<Rational> univariate_gcd(std::vector<Rational> a,
                                     std::vector<Rational> b) {
  auto degree_of = [](const std::vector<Rational>& p) {
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
      if (p[static_cast<std::size_t>(k)] != 0) return k;
    return -1;
  };
  while (true) {
    const int db = degree_of(b);
    if (db < 0) break;
    const int da = degree_of(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    // a -= lead(a)/lead(b) * x^(da-db) * b
    const Rational factor = a[static_cast<std::size_t>(da)] /
                            b[static_cast<std::size_t>(db)];
    for (int k = 0; k <= db; ++k)
      a[static_cast<std::size_t>(k + da - db)] -=
          factor * b[static_cast<std::size_t>(k)];
    if (degree_of(a) < degree_of(b)) std::swap(a, b);
  }
  const int da = degree_of(a);
  if (da >= 0) {
    const Rational inv = Rational(1) / a[static_cast<std::size_t>(da)];
    for (auto& c : a) c *= inv;
    a.resize(static_cast<std::size_t>(da) + 1);
  }
  return a;
}

PointP1xP1 point_from_chart(const Chart& chart, const Rational& x_val,
                            const Rational& y_val) {
  Rational s(1), u(1), t(1), v(1);
  (chart.free_first == kVarS ? s : u) = x_val;
  (chart.free_second == kVarT ? t : v) = y_val;
  return PointP1xP1::make(s, u, t, v);
}

}  // namespace

LocalReport local_report_in_chart(const IdealSpec& ideal, const PointP1xP1& p,
                                  const Chart& chart) {
  require_point_on_finite_locus(ideal, p);
  if (!point_in_chart(p, chart))
    throw PointNotOnLocusError("point " + p.to_string() +
                               " does not lie in the requested chart");
  const int x = chart.free_first;
  const int y = chart.free_second;
  const auto coords = chart_coordinates(p, chart);
  const std::vector<BiPoly> at_origin =
      translate_to_origin(chart_ideal(ideal, chart), x, y, coords);

  LocalReport rep;
  rep.point = p;
  rep.multiplicity = stabilized_colength(at_origin, x, y);

  std::vector<BiPoly> tangent_gens = at_origin;
  for (auto& m : power_of_maximal_ideal(x, y, 2)) tangent_gens.push_back(m);
  const auto tangent_colength = chart_colength(tangent_gens, x, y);
  rep.tangent_dim = static_cast<int>(*tangent_colength) - 1;

  rep.conormal_dim = stabilized_conormal(at_origin, x, y);
  rep.curvilinear = rep.tangent_dim <= 1;
  rep.lci = rep.conormal_dim == 2 * rep.multiplicity;
  return rep;
}

}  // namespace geometry_detail

using namespace geometry_detail;

bool is_zero_dimensional(const IdealSpec& ideal) {
  for (const auto& chart : charts()) {
    const auto c = chart_colength(chart_ideal(ideal, chart), chart.free_first,
                                  chart.free_second);
    if (!c) return false;
  }
  return true;
}

void require_codim_two(const IdealSpec& ideal) {
  if (!is_zero_dimensional(ideal))
    throw NotZeroDimensionalError("V(I) is not finite on P1xP1");
  const SaturationResult sat =
      saturate(SubmodulePresentation::ideal(ideal.generators));
  if (groebner_basis(sat.module).is_unit_ideal())
    throw NotZeroDimensionalError(
        "I saturates to the unit ideal: the base locus is empty");
}

BasePointLocus base_points(const IdealSpec& ideal) {
  if (!is_zero_dimensional(ideal))
    throw NotZeroDimensionalError("V(I) is not finite on P1xP1");

  BasePointLocus locus;
  locus.complete = true;
  for (const auto& chart : charts()) {
    const int x = chart.free_first;
    const int y = chart.free_second;
    const std::vector<BiPoly> gens = chart_ideal(ideal, chart);
    const GroebnerBasis gb = groebner_basis(gens);
    const auto sm = standard_monomials(gb, x, y);
    if (sm->empty()) continue;  // unit ideal: chart is empty

    std::vector<PointP1xP1> found_here;
    const std::vector<Rational> elim = univariate_eliminant(gb, *sm, x);
    for (const Rational& x0 : rational_roots(elim)) {
      // Substitute x = x0 and take the gcd of the univariate results.
      std::vector<Rational> g;
      for (const auto& gen : gens) {
        BiPoly shifted = gen;
        // evaluate the x variable at x0 by shifting then dropping:
        // p(x0, y) = p.shift(x, x0) with x := 0.
        shifted = shifted.shift(x, x0);
        BiPoly constant_in_x;
        for (const auto& [m, c] : shifted.terms())
          if (m.exponent(x) == 0) constant_in_x.add_term(m, c);
        const auto coeffs = univariate_coefficients(constant_in_x, y);
        if (coeffs.empty()) continue;
        g = g.empty() ? coeffs : univariate_gcd(g, coeffs);
      }
      if (g.empty()) continue;  // all generators vanish on the line x=x0
      for (const Rational& y0 : rational_roots(g)) {
        const PointP1xP1 candidate = point_from_chart(chart, x0, y0);
        if (point_on_locus(ideal, candidate)) found_here.push_back(candidate);
      }
      // An x-root whose fiber gcd has no rational y-root contributes no
      // rational point; the completeness certification below notices.
    }

    for (const auto& pt : found_here)
      if (std::find(locus.rational_points.begin(), locus.rational_points.end(),
                    pt) == locus.rational_points.end())
        locus.rational_points.push_back(pt);
  }

  std::sort(locus.rational_points.begin(), locus.rational_points.end(),
            point_less);

  // Completeness: remove every found point from every chart by saturation;
  // a unit residual everywhere certifies there are no other points.
  for (const auto& chart : charts()) {
    SubmodulePresentation residual =
        SubmodulePresentation::ideal(chart_ideal(ideal, chart));
    for (const auto& pt : locus.rational_points) {
      if (!point_in_chart(pt, chart)) continue;
      const auto coords = chart_coordinates(pt, chart);
      const BiPoly xm = BiPoly::variable(chart.free_first) -
                        BiPoly::constant(coords[0]);
      const BiPoly ym = BiPoly::variable(chart.free_second) -
                        BiPoly::constant(coords[1]);
      residual = submodule_intersect(saturate_by_element(residual, xm).module,
                                     saturate_by_element(residual, ym).module);
    }
    if (!groebner_basis(residual).is_unit_ideal()) {
      locus.complete = false;
      break;
    }
  }
  return locus;
}

long local_multiplicity(const IdealSpec& ideal, const PointP1xP1& p) {
  require_point_on_finite_locus(ideal, p);
  const Chart& chart = canonical_chart(p);
  const auto coords = chart_coordinates(p, chart);
  const auto at_origin = translate_to_origin(
      chart_ideal(ideal, chart), chart.free_first, chart.free_second, coords);
  return stabilized_colength(at_origin, chart.free_first, chart.free_second);
}

int tangent_dimension(const IdealSpec& ideal, const PointP1xP1& p) {
  require_point_on_finite_locus(ideal, p);
  const Chart& chart = canonical_chart(p);
  const int x = chart.free_first;
  const int y = chart.free_second;
  const auto coords = chart_coordinates(p, chart);
  std::vector<BiPoly> gens =
      translate_to_origin(chart_ideal(ideal, chart), x, y, coords);
  for (auto& m : power_of_maximal_ideal(x, y, 2)) gens.push_back(m);
  return static_cast<int>(*chart_colength(gens, x, y)) - 1;
}

bool is_curvilinear_at(const IdealSpec& ideal, const PointP1xP1& p) {
  return tangent_dimension(ideal, p) <= 1;
}

LocalReport local_report(const IdealSpec& ideal, const PointP1xP1& p) {
  return local_report_in_chart(ideal, p, canonical_chart(p));
}

bool is_lci_at(const IdealSpec& ideal, const PointP1xP1& p) {
  return local_report(ideal, p).lci;
}

std::vector<LocalReport> local_reports(const IdealSpec& ideal) {
  const BasePointLocus locus = base_points(ideal);
  if (!locus.complete)
    throw RequiresRationalPointsError(
        "the base locus has non-rational points; only the global criterion "
        "is available");
  std::vector<LocalReport> out;
  out.reserve(locus.rational_points.size());
  for (const auto& p : locus.rational_points)
    out.push_back(local_report(ideal, p));
  return out;
}

bool is_lci_global(const IdealSpec& ideal) {
  return conormal_hilbert_constant(ideal) == 2 * degree_of_Z(ideal);
}

}  // namespace bisyz
