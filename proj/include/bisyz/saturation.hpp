#pragma once

#include <array>
#include <vector>

#include "bisyz/groebner.hpp"

namespace bisyz {

// The irrelevant ideal m = <st, sv, ut, uv> of P¹×P¹.
const std::array<BiPoly, 4>& irrelevant_generators();

struct SaturationResult {
  SubmodulePresentation module;
  // Per generator of `module`: the minimal verified exponent N. For
  // saturate_by_element this certifies g^N·x ∈ M; for saturate it
  // certifies m^N·x ⊆ M.
  std::vector<int> witness_exponents;
};

// M : g^∞, by eliminating the auxiliary variable from M·R[w] + (1-w·g)·F.
SaturationResult saturate_by_element(const SubmodulePresentation& m,
                                     const BiPoly& g);

// M^sat with respect to the irrelevant ideal: the intersection of the four
// element saturations M : (st)^∞, M : (sv)^∞, M : (ut)^∞, M : (uv)^∞.
SaturationResult saturate(const SubmodulePresentation& m);

bool is_saturated(const SubmodulePresentation& m);

// Smallest N with g^N·x ∈ M (membership against gb), or -1 up to `bound`.
int element_power_witness(const FreeModuleElement& x, const BiPoly& g,
                          const GroebnerBasis& gb, int bound = 256);
// Smallest N with m^N·x ⊆ M, or -1 up to `bound`.
int irrelevant_power_witness(const FreeModuleElement& x,
                             const GroebnerBasis& gb, int bound = 64);

}  // namespace bisyz
