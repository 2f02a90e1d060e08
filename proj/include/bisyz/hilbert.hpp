#pragma once

#include <functional>
#include <vector>

#include "bisyz/groebner.hpp"
#include "bisyz/textio.hpp"

namespace bisyz {

// Bigraded Hilbert polynomial c00 + c10·k + c01·k' + c11·k·k', together with
// the corner beyond which the Hilbert function provably matched it on the
// verification grid.
struct HilbertPoly2 {
  Rational c00, c10, c01, c11;
  BiDegree stabilization_corner;

  Rational operator()(long k, long kp) const {
    return c00 + c10 * Rational(k) + c01 * Rational(kp) +
           c11 * Rational(k) * Rational(kp);
  }
  bool is_constant() const { return c10 == 0 && c01 == 0 && c11 == 0; }
  bool same_coefficients(const HilbertPoly2& o) const {
    return c00 == o.c00 && c10 == o.c10 && c01 == o.c01 && c11 == o.c11;
  }
};

// dim of the bidegree-(a,b) slice of the free module with the given twists.
long hilbert_function_free(const std::vector<BiDegree>& twists, BiDegree at);
// dim M_(a,b), counted through the lead-term module of a Gröbner basis.
long hilbert_function_submodule(const GroebnerBasis& gb, BiDegree at);
// dim (F/M)_(a,b).
long hilbert_function_quotient(const GroebnerBasis& gb, BiDegree at);

// Interpolates the four coefficients on a 2x2 grid at the current corner,
// verifies on the 4x4 grid two steps further out, and advances the corner
// until verification passes. Throws NoStabilizationError past `corner_bound`.
HilbertPoly2 interpolate_hilbert(const std::function<long(BiDegree)>& hf,
                                 int corner_bound);

HilbertPoly2 hilbert_polynomial_submodule(const GroebnerBasis& gb,
                                          int corner_bound);
HilbertPoly2 hilbert_polynomial_quotient(const GroebnerBasis& gb,
                                         int corner_bound);

// Generous stabilization bound for a presentation: degree content plus 8.
int default_corner_bound(const SubmodulePresentation& m);

// deg(Z) = the constant value of the Hilbert polynomial of R/I^sat.
// Requires the codimension-two gate (zero-dimensional, nonempty locus).
long degree_of_Z(const IdealSpec& ideal);

// Eventual constant of HF(I/I²), with I/I² presented as
// (⊕_i R(-d_i,-d'_i)) / (Syz(f) + I·⊕_i R(-d_i,-d'_i)).
long conormal_hilbert_constant(const IdealSpec& ideal);

// Σ_i (k-d_i+1)(k'-d'_i+1) - (k+1)(k'+1), the closed form that the
// saturated Koszul module's Hilbert polynomial must equal in codimension two.
HilbertPoly2 koszul_saturated_closed_form(const std::vector<BiDegree>& degrees);

}  // namespace bisyz
