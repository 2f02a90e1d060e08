#pragma once

#include <vector>

#include "bisyz/bipoly.hpp"

namespace bisyz {

// Element of a free module F = ⊕_i R(twist_i). Twists travel with the
// element; the module bidegree of a bihomogeneous element is
// bidegree(component_i) - twist_i, the same value for every nonzero slot.
// An ideal element is the rank-one case with twist (0,0).
struct FreeModuleElement {
  std::vector<BiPoly> components;
  std::vector<BiDegree> twists;

  FreeModuleElement() = default;
  FreeModuleElement(std::vector<BiPoly> comps, std::vector<BiDegree> tw)
      : components(std::move(comps)), twists(std::move(tw)) {
    if (components.size() != twists.size()) throw AmbientMismatchError();
  }

  static FreeModuleElement zero(const std::vector<BiDegree>& twists_) {
    return {std::vector<BiPoly>(twists_.size()), twists_};
  }
  static FreeModuleElement from_poly(BiPoly p) {
    return {{std::move(p)}, {BiDegree{0, 0}}};
  }
  // Basis vector e_slot scaled by p.
  static FreeModuleElement basis(const std::vector<BiDegree>& twists_, int slot,
                                 BiPoly p = BiPoly::one()) {
    FreeModuleElement e = zero(twists_);
    e.components[static_cast<std::size_t>(slot)] = std::move(p);
    return e;
  }

  int rank() const { return static_cast<int>(components.size()); }
  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }
  bool has_aux() const {
    for (const auto& c : components)
      if (c.has_aux()) return true;
    return false;
  }

  FreeModuleElement& operator+=(const FreeModuleElement& o);
  FreeModuleElement& operator-=(const FreeModuleElement& o);
  friend FreeModuleElement operator+(FreeModuleElement a,
                                     const FreeModuleElement& b) {
    return a += b;
  }
  friend FreeModuleElement operator-(FreeModuleElement a,
                                     const FreeModuleElement& b) {
    return a -= b;
  }
  friend FreeModuleElement operator-(const FreeModuleElement& a);

  FreeModuleElement times_term(const Monomial& m, const Rational& c) const;
  FreeModuleElement times_poly(const BiPoly& p) const;
  FreeModuleElement& operator*=(const Rational& c);

  bool is_bihomogeneous() const;
  // Common module bidegree; throws on zero or mixed-degree elements.
  BiDegree module_bidegree() const;

  friend bool operator==(const FreeModuleElement&,
                         const FreeModuleElement&) = default;
};

void require_same_ambient(const FreeModuleElement& a,
                          const FreeModuleElement& b);

// A submodule of a free module, given by generators.
struct SubmodulePresentation {
  std::vector<BiDegree> ambient_twists;
  std::vector<FreeModuleElement> generators;

  SubmodulePresentation() = default;
  explicit SubmodulePresentation(std::vector<BiDegree> twists)
      : ambient_twists(std::move(twists)) {}

  static SubmodulePresentation ideal(const std::vector<BiPoly>& gens);

  int rank() const { return static_cast<int>(ambient_twists.size()); }
  void add_generator(FreeModuleElement g);
};

void require_same_ambient(const SubmodulePresentation& a,
                          const SubmodulePresentation& b);

}  // namespace bisyz
