#pragma once

// Brute-force linear-algebra oracle used to cross-check the Gröbner path.
// Everything here works slice by slice with exact Gaussian elimination and
// never calls into groebner/saturation code.

#include <vector>

#include "bisyz/module.hpp"

namespace oracle {

using bisyz::BiDegree;
using bisyz::BiPoly;
using bisyz::FreeModuleElement;
using bisyz::Monomial;
using bisyz::Rational;

// All monomials of the given bidegree, in a fixed order.
std::vector<Monomial> slice_monomials(BiDegree d);

int rank(std::vector<std::vector<Rational>> rows);

// dim of the bidegree-`at` slice of the submodule generated by `gens`
// inside ⊕_i R(twists_i): the rank of all monomial multiples of the
// generators that land in the slice.
long module_slice_dim(const std::vector<FreeModuleElement>& gens,
                      const std::vector<BiDegree>& twists, BiDegree at);

long ideal_slice_dim(const std::vector<BiPoly>& gens, BiDegree at);

// Membership of a bihomogeneous element in the span, by rank comparison at
// its own bidegree.
bool slice_member(const FreeModuleElement& x,
                  const std::vector<FreeModuleElement>& gens,
                  const std::vector<BiDegree>& twists);
bool slice_member(const BiPoly& x, const std::vector<BiPoly>& gens);

// dim Syz(f_1..f_r)_(at): the nullspace dimension of the multiplication map
// ⊕_i R(-d_i)_(at) -> R_(at).
long syzygy_slice_dim(const std::vector<BiPoly>& gens, BiDegree at);

// dim (I/I²)_(at) for I = <gens>, computed as
// dim F_(at) - dim( Syz(f)_(at) + (I·F)_(at) ), F = ⊕_i R(-d_i).
long conormal_slice_dim(const std::vector<BiPoly>& gens, BiDegree at);

// dim (R/I)_(at); for at far beyond the generator degrees this equals the
// Hilbert function of R/I^sat, hence deg(Z) for zero-dimensional ideals.
long quotient_slice_dim(const std::vector<BiPoly>& gens, BiDegree at);

// dim ( Syz(f) ∩ ⊕_i J(-d_i) )_(at) for J = <jgens>: the syzygy slice is
// harvested as a kernel basis, the componentwise-J slice as generator
// multiples, and the intersection dimension follows from
// dim(A∩B) = dim A + dim B - dim(A+B).
long vanishing_syzygy_slice_dim(const std::vector<BiPoly>& gens,
                                const std::vector<BiPoly>& jgens, BiDegree at);

}  // namespace oracle
