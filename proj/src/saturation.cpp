#include "bisyz/saturation.hpp"

namespace bisyz {

const std::array<BiPoly, 4>& irrelevant_generators() {
  static const std::array<BiPoly, 4> gens = [] {
    const BiPoly s = BiPoly::variable(kVarS);
    const BiPoly u = BiPoly::variable(kVarU);
    const BiPoly t = BiPoly::variable(kVarT);
    const BiPoly v = BiPoly::variable(kVarV);
    return std::array<BiPoly, 4>{s * t, s * v, u * t, u * v};
  }();
  return gens;
}

int element_power_witness(const FreeModuleElement& x, const BiPoly& g,
                          const GroebnerBasis& gb, int bound) {
  FreeModuleElement power = x;
  for (int n = 0; n <= bound; ++n) {
    if (in_submodule(power, gb)) return n;
    power = power.times_poly(g);
  }
  return -1;
}

int irrelevant_power_witness(const FreeModuleElement& x,
                             const GroebnerBasis& gb, int bound) {
  const auto& m = irrelevant_generators();
  for (int n = 0; n <= bound; ++n) {
    // m^n is generated by the products of n generators of m; check them all.
    bool all_in = true;
    for (int a = 0; a <= n && all_in; ++a)
      for (int b = 0; a + b <= n && all_in; ++b)
        for (int c = 0; a + b + c <= n && all_in; ++c) {
          const int d = n - a - b - c;
          FreeModuleElement y = x;
          for (int k = 0; k < a; ++k) y = y.times_poly(m[0]);
          for (int k = 0; k < b; ++k) y = y.times_poly(m[1]);
          for (int k = 0; k < c; ++k) y = y.times_poly(m[2]);
          for (int k = 0; k < d; ++k) y = y.times_poly(m[3]);
          if (!in_submodule(y, gb)) all_in = false;
        }
    if (all_in) return n;
  }
  return -1;
}

SaturationResult saturate_by_element(const SubmodulePresentation& m,
                                     const BiPoly& g) {
  if (g.is_zero()) throw ZeroElementError();

  const BiPoly w = BiPoly::term(Monomial::aux(), 1);
  const BiPoly one_minus_wg = BiPoly::one() - w * g;
  SubmodulePresentation mixed(m.ambient_twists);
  for (const auto& gen : m.generators) mixed.add_generator(gen);
  for (int slot = 0; slot < m.rank(); ++slot)
    mixed.add_generator(
        FreeModuleElement::basis(m.ambient_twists, slot, one_minus_wg));

  SaturationResult out;
  out.module = eliminate_aux(mixed);
  const GroebnerBasis gb = groebner_basis(m);
  for (const auto& x : out.module.generators) {
    const int n = element_power_witness(x, g, gb);
    if (n < 0)
      throw Error("saturation certificate search failed; this is a bug");
    out.witness_exponents.push_back(n);
  }
  return out;
}

SaturationResult saturate(const SubmodulePresentation& m) {
  const auto& irr = irrelevant_generators();
  std::vector<SubmodulePresentation> parts;
  parts.reserve(irr.size());
  for (const auto& g : irr) parts.push_back(saturate_by_element(m, g).module);
  SubmodulePresentation acc = submodule_intersect(parts[0], parts[1]);
  SubmodulePresentation acc2 = submodule_intersect(parts[2], parts[3]);
  SaturationResult out;
  out.module = submodule_intersect(acc, acc2);

  const GroebnerBasis gb = groebner_basis(m);
  for (const auto& x : out.module.generators) {
    const int n = irrelevant_power_witness(x, gb);
    if (n < 0)
      throw Error("saturation certificate search failed; this is a bug");
    out.witness_exponents.push_back(n);
  }
  return out;
}

bool is_saturated(const SubmodulePresentation& m) {
  const SubmodulePresentation sat = saturate(m).module;
  const GroebnerBasis gb = groebner_basis(m);
  return submodule_contains(gb, sat);
}

}  // namespace bisyz
