#include "bisyz/module.hpp"

namespace bisyz {

void require_same_ambient(const FreeModuleElement& a,
                          const FreeModuleElement& b) {
  if (a.twists != b.twists) throw AmbientMismatchError();
}

FreeModuleElement& FreeModuleElement::operator+=(const FreeModuleElement& o) {
  require_same_ambient(*this, o);
  for (std::size_t i = 0; i < components.size(); ++i)
    components[i] += o.components[i];
  return *this;
}

FreeModuleElement& FreeModuleElement::operator-=(const FreeModuleElement& o) {
  require_same_ambient(*this, o);
  for (std::size_t i = 0; i < components.size(); ++i)
    components[i] -= o.components[i];
  return *this;
}

FreeModuleElement operator-(const FreeModuleElement& a) {
  FreeModuleElement r = a;
  for (auto& c : r.components) c = -c;
  return r;
}

FreeModuleElement FreeModuleElement::times_term(const Monomial& m,
                                                const Rational& c) const {
  FreeModuleElement r = *this;
  for (auto& comp : r.components) comp = comp.times_term(m, c);
  return r;
}

FreeModuleElement FreeModuleElement::times_poly(const BiPoly& p) const {
  FreeModuleElement r = zero(twists);
  for (std::size_t i = 0; i < components.size(); ++i)
    r.components[i] = components[i] * p;
  return r;
}

FreeModuleElement& FreeModuleElement::operator*=(const Rational& c) {
  for (auto& comp : components) comp *= c;
  return *this;
}

bool FreeModuleElement::is_bihomogeneous() const {
  bool seen = false;
  BiDegree deg{};
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) continue;
    if (!components[i].is_bihomogeneous()) return false;
    const BiDegree d = components[i].bidegree() - twists[i];
    if (seen && !(d == deg)) return false;
    deg = d;
    seen = true;
  }
  return true;
}

BiDegree FreeModuleElement::module_bidegree() const {
  bool seen = false;
  BiDegree deg{};
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) continue;
    const BiDegree d = components[i].bidegree() - twists[i];
    if (seen && !(d == deg))
      throw NotBihomogeneousError("module element mixes bidegrees " +
                                  deg.to_string() + " and " + d.to_string());
    deg = d;
    seen = true;
  }
  if (!seen) throw ZeroPolynomialError();
  return deg;
}

SubmodulePresentation SubmodulePresentation::ideal(
    const std::vector<BiPoly>& gens) {
  SubmodulePresentation m({BiDegree{0, 0}});
  for (const auto& g : gens)
    m.add_generator(FreeModuleElement::from_poly(g));
  return m;
}

void SubmodulePresentation::add_generator(FreeModuleElement g) {
  if (g.twists != ambient_twists) throw AmbientMismatchError();
  generators.push_back(std::move(g));
}

void require_same_ambient(const SubmodulePresentation& a,
                          const SubmodulePresentation& b) {
  if (a.ambient_twists != b.ambient_twists) throw AmbientMismatchError();
}

}  // namespace bisyz
