#pragma once

#include <array>
#include <optional>

#include "bisyz/groebner.hpp"
#include "bisyz/hilbert.hpp"
#include "bisyz/textio.hpp"

namespace bisyz {

// Everything the Koszul verdicts need about one three-generator ideal:
// the Koszul submodule K with the fixed generator signs
//   (f2, -f1, 0), (f3, 0, -f1), (0, f3, -f2),
// the full syzygy module S, the vanishing-syzygy module
// V = S ∩ ⊕_i I^sat(-d_i, -d'_i), and the bases that decide membership.
struct KoszulData {
  IdealSpec ideal;
  std::vector<BiDegree> degrees;  // (d_i, d'_i)
  std::vector<BiDegree> twists;   // (-d_i, -d'_i)
  SubmodulePresentation K, S, V, Isat;
  GroebnerBasis gb_K, gb_V, gb_Isat;
};

KoszulData build_koszul(const IdealSpec& ideal);

// The three fixed Koszul generators for the given generators f1, f2, f3.
std::array<FreeModuleElement, 3> koszul_generators(
    const std::vector<BiPoly>& gens, const std::vector<BiDegree>& twists);

// x ∈ S with every component in I^sat.
bool verify_vanishing(const FreeModuleElement& x, const KoszulData& data);

struct KoszulVerdict {
  FreeModuleElement syzygy;
  BiDegree module_bidegree;
  bool in_range = false;  // (k - Σd_i + 1)(k' - Σd'_i + 1) >= 0
  bool vanishes_at_base_points = false;
  bool is_koszul = false;
  // Present iff is_koszul: x = h1·K1 + h2·K2 + h3·K3 exactly.
  std::optional<std::array<BiPoly, 3>> certificate;
};

KoszulVerdict koszul_verdict(const FreeModuleElement& x,
                             const KoszulData& data);

bool range_predicate(const KoszulData& data, BiDegree module_bidegree);

struct SliceComparison {
  long dim_K = 0;
  long dim_V = 0;
  bool equal = false;
  bool in_range = false;
};

SliceComparison slice_compare(const KoszulData& data, BiDegree at);

// The biconditional K^sat = V  ⟺  H(I/I²) = 2·deg(Z), checked both ways on
// one ideal, with the Hilbert polynomials cross-checked against their
// closed forms.
struct TheoremReport {
  bool ksat_equals_v = false;
  bool lci = false;
  bool biconditional_holds = false;
  long deg_z = 0;
  long conormal_constant = 0;
  HilbertPoly2 hp_ksat;
  HilbertPoly2 hp_v;
  bool hp_ksat_matches_formula = false;
  bool hp_v_matches_formula = false;
  // A generator of V outside K^sat, when the modules differ.
  std::optional<FreeModuleElement> separating_element;
};

TheoremReport theorem_check(const IdealSpec& ideal);

}  // namespace bisyz
