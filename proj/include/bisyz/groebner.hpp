#pragma once

#include <optional>
#include <vector>

#include "bisyz/module.hpp"

namespace bisyz {

// Lead term position of a module element: slot index plus monomial.
// The module order is TOP over the global monomial order: monomials compare
// first, and on equal monomials the lower slot index is the greater term.
struct ModuleTerm {
  int slot = 0;
  Monomial mono;

  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

// <0, 0, >0 for a < b, a == b, a > b.
inline int compare(const ModuleTerm& a, const ModuleTerm& b) {
  const int c = compare(a.mono, b.mono);
  if (c != 0) return c;
  if (a.slot != b.slot) return a.slot < b.slot ? 1 : -1;
  return 0;
}

// Reduced Gröbner basis of a submodule (or ideal, rank one). Elements are
// monic, pairwise tail-reduced and sorted by descending lead term, so the
// basis is a canonical function of the submodule. `cofactors[j]` expresses
// elements[j] over the input generators.
struct GroebnerBasis {
  std::vector<BiDegree> ambient_twists;
  std::vector<FreeModuleElement> elements;
  std::vector<ModuleTerm> leads;
  std::vector<std::vector<BiPoly>> cofactors;

  int rank() const { return static_cast<int>(ambient_twists.size()); }
  bool is_unit_ideal() const;
};

ModuleTerm lead_term(const FreeModuleElement& x);

GroebnerBasis groebner_basis(const SubmodulePresentation& gens);
GroebnerBasis groebner_basis(const std::vector<BiPoly>& ideal_gens);

struct NormalFormResult {
  FreeModuleElement remainder;
  // Over gb.elements: x = sum_j cofactors[j] * gb.elements[j] + remainder.
  std::vector<BiPoly> cofactors;
};

NormalFormResult normal_form(const FreeModuleElement& x,
                             const GroebnerBasis& gb);
BiPoly normal_form(const BiPoly& x, const GroebnerBasis& gb);

bool in_submodule(const FreeModuleElement& x, const GroebnerBasis& gb);
bool in_ideal(const BiPoly& x, const GroebnerBasis& gb);

// Generators of Syz(g_1..g_m) = { (v_i) : sum_i v_i g_i = 0 }, living in
// ⊕_i R(-D_i) where D_i is the module bidegree of g_i (twists are zero when
// the generators are not bihomogeneous, as in affine chart computations).
// Schreyer's construction: every S-pair reduction to zero in the Buchberger
// run yields a syzygy of the working basis, and the tracked representations
// transform those back to syzygies of the input generators.
SubmodulePresentation syzygy_module(const SubmodulePresentation& gens);
SubmodulePresentation syzygy_module(const std::vector<BiPoly>& ideal_gens);

SubmodulePresentation submodule_intersect(const SubmodulePresentation& m,
                                          const SubmodulePresentation& n);

// Contraction to R of a submodule given over R[w], w the auxiliary
// variable: the w-free part of the reduced basis under the block order.
SubmodulePresentation eliminate_aux(const SubmodulePresentation& gens);

// Membership both ways, via normal forms. Generating sets are
// presentation-dependent; module equality never compares them directly.
bool submodule_contains(const GroebnerBasis& big,
                        const SubmodulePresentation& small);
bool modules_equal(const SubmodulePresentation& a,
                   const SubmodulePresentation& b);

// Exhaustive Buchberger criterion check: every S-pair of the basis reduces
// to zero. Used by the verification suites.
bool spairs_reduce_to_zero(const GroebnerBasis& gb);

}  // namespace bisyz
