#include "bisyz/hilbert.hpp"

#include <cstdlib>

#include "bisyz/geometry.hpp"
#include "bisyz/saturation.hpp"

namespace bisyz {

namespace {

// Monomials of R of the given bidegree: s^i u^(a-i) t^j v^(b-j).
void for_each_slice_monomial(BiDegree d,
                             const std::function<void(const Monomial&)>& fn) {
  if (d.first < 0 || d.second < 0) return;
  for (int i = 0; i <= d.first; ++i)
    for (int j = 0; j <= d.second; ++j)
      fn(Monomial(i, d.first - i, j, d.second - j));
}

}  // namespace

long hilbert_function_free(const std::vector<BiDegree>& twists, BiDegree at) {
  long total = 0;
  for (const auto& tw : twists) {
    const BiDegree d = at + tw;  // polynomial bidegree in this slot
    if (d.first >= 0 && d.second >= 0)
      total += static_cast<long>(d.first + 1) * (d.second + 1);
  }
  return total;
}

long hilbert_function_submodule(const GroebnerBasis& gb, BiDegree at) {
  long count = 0;
  for (int slot = 0; slot < gb.rank(); ++slot) {
    const BiDegree d = at + gb.ambient_twists[static_cast<std::size_t>(slot)];
    for_each_slice_monomial(d, [&](const Monomial& m) {
      for (std::size_t k = 0; k < gb.leads.size(); ++k) {
        if (gb.leads[k].slot == slot && gb.leads[k].mono.divides(m)) {
          ++count;
          return;
        }
      }
    });
  }
  return count;
}

long hilbert_function_quotient(const GroebnerBasis& gb, BiDegree at) {
  return hilbert_function_free(gb.ambient_twists, at) -
         hilbert_function_submodule(gb, at);
}

HilbertPoly2 interpolate_hilbert(const std::function<long(BiDegree)>& hf,
                                 int corner_bound) {
  for (int c = 0; c <= corner_bound; ++c) {
    const long v00 = hf({c, c});
    const long v10 = hf({c + 1, c});
    const long v01 = hf({c, c + 1});
    const long v11 = hf({c + 1, c + 1});
    // v(k,k') = c00 + c10 k + c01 k' + c11 k k' on the 2x2 grid.
    const Rational c11 = Rational(v11 - v10 - v01 + v00);
    const Rational c10 = Rational(v10 - v00) - c11 * Rational(c);
    const Rational c01 = Rational(v01 - v00) - c11 * Rational(c);
    const Rational c00 = Rational(v00) - c10 * Rational(c) -
                         c01 * Rational(c) - c11 * Rational(c) * Rational(c);
    HilbertPoly2 hp{c00, c10, c01, c11, BiDegree{c + 2, c + 2}};

    bool verified = true;
    for (int k = c + 2; k <= c + 5 && verified; ++k)
      for (int kp = c + 2; kp <= c + 5 && verified; ++kp)
        if (hp(k, kp) != Rational(hf({k, kp}))) verified = false;
    if (verified) return hp;
  }
  throw NoStabilizationError(
      "Hilbert function failed to stabilize within the corner bound " +
      std::to_string(corner_bound));
}

HilbertPoly2 hilbert_polynomial_submodule(const GroebnerBasis& gb,
                                          int corner_bound) {
  return interpolate_hilbert(
      [&](BiDegree at) { return hilbert_function_submodule(gb, at); },
      corner_bound);
}

HilbertPoly2 hilbert_polynomial_quotient(const GroebnerBasis& gb,
                                         int corner_bound) {
  return interpolate_hilbert(
      [&](BiDegree at) { return hilbert_function_quotient(gb, at); },
      corner_bound);
}

int default_corner_bound(const SubmodulePresentation& m) {
  int bound = 8;
  for (const auto& tw : m.ambient_twists)
    bound += std::abs(tw.first) + std::abs(tw.second);
  for (const auto& g : m.generators) {
    for (std::size_t i = 0; i < g.components.size(); ++i) {
      if (g.components[i].is_zero()) continue;
      const Monomial& lead = g.components[i].lead_monomial();
      bound += lead.total_degree();
      break;
    }
  }
  return bound;
}

long degree_of_Z(const IdealSpec& ideal) {
  require_codim_two(ideal);
  const SubmodulePresentation isat =
      saturate(SubmodulePresentation::ideal(ideal.generators)).module;
  const GroebnerBasis gb = groebner_basis(isat);
  const HilbertPoly2 hp =
      hilbert_polynomial_quotient(gb, default_corner_bound(isat));
  if (!hp.is_constant())
    throw NotZeroDimensionalError(
        "R/I^sat has a non-constant Hilbert polynomial");
  if (!is_integer(hp.c00) || hp.c00 < 0)
    throw Error("degree of Z must be a non-negative integer");
  return static_cast<long>(numerator(hp.c00));
}

long conormal_hilbert_constant(const IdealSpec& ideal) {
  require_codim_two(ideal);
  std::vector<BiDegree> twists;
  for (const auto& d : ideal.bidegrees()) twists.push_back(-d);

  const SubmodulePresentation syz = syzygy_module(ideal.generators);
  SubmodulePresentation conormal(twists);
  for (const auto& s : syz.generators)
    conormal.add_generator(FreeModuleElement{s.components, twists});
  for (int slot = 0; slot < conormal.rank(); ++slot)
    for (const auto& f : ideal.generators)
      conormal.add_generator(FreeModuleElement::basis(twists, slot, f));

  const GroebnerBasis gb = groebner_basis(conormal);
  const HilbertPoly2 hp =
      hilbert_polynomial_quotient(gb, default_corner_bound(conormal));
  if (!hp.is_constant())
    throw NotZeroDimensionalError(
        "I/I^2 has a non-constant Hilbert polynomial");
  return static_cast<long>(numerator(hp.c00));
}

HilbertPoly2 koszul_saturated_closed_form(
    const std::vector<BiDegree>& degrees) {
  // Each (k-d+1)(k'-d'+1) contributes kk' + (1-d')k + (1-d)k' + (1-d)(1-d');
  // subtracting (k+1)(k'+1) gives the -1 offsets.
  HilbertPoly2 hp{Rational(-1), Rational(-1), Rational(-1),
                  Rational(static_cast<int>(degrees.size()) - 1),
                  BiDegree{0, 0}};
  for (const auto& d : degrees) {
    hp.c10 += Rational(1 - d.second);
    hp.c01 += Rational(1 - d.first);
    hp.c00 += Rational(1 - d.first) * Rational(1 - d.second);
  }
  return hp;
}

}  // namespace bisyz
