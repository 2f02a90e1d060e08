#include "bisyz/bipoly.hpp"

#include <string>

namespace bisyz {

void BiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

BiPoly BiPoly::times_term(const Monomial& m, const Rational& c) const {
  BiPoly r;
  if (c == 0) return r;
  for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono * m, coeff * c);
  return r;
}

bool BiPoly::has_aux() const {
  for (const auto& [m, c] : terms_)
    if (m.has_aux()) return true;
  return false;
}

bool BiPoly::is_bihomogeneous() const {
  if (terms_.empty()) return true;
  const BiDegree d = terms_.begin()->first.bidegree();
  for (const auto& [m, c] : terms_)
    if (!(m.bidegree() == d)) return false;
  return true;
}

BiDegree BiPoly::bidegree() const {
  if (terms_.empty()) throw ZeroPolynomialError();
  const BiDegree d = terms_.begin()->first.bidegree();
  for (const auto& [m, c] : terms_) {
    const BiDegree dm = m.bidegree();
    if (!(dm == d))
      throw NotBihomogeneousError("polynomial mixes bidegrees " +
                                  d.to_string() + " and " + dm.to_string());
  }
  return d;
}

BiPoly BiPoly::substitute_one(int var) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial reduced(var == kVarS ? 0 : m.exponent(kVarS),
                     var == kVarU ? 0 : m.exponent(kVarU),
                     var == kVarT ? 0 : m.exponent(kVarT),
                     var == kVarV ? 0 : m.exponent(kVarV), m.aux_exponent());
    r.add_term(reduced, c);
  }
  return r;
}

BiPoly BiPoly::shift(int var, const Rational& c) const {
  if (c == 0) return *this;
  BiPoly r;
  for (const auto& [m, coeff] : terms_) {
    const int e = m.exponent(var);
    Monomial base(var == kVarS ? 0 : m.exponent(kVarS),
                  var == kVarU ? 0 : m.exponent(kVarU),
                  var == kVarT ? 0 : m.exponent(kVarT),
                  var == kVarV ? 0 : m.exponent(kVarV), m.aux_exponent());
    // (x + c)^e: coefficient of x^k is C(e,k) c^(e-k).
    Int bin = 1;
    std::vector<Int> binoms(static_cast<std::size_t>(e) + 1);
    for (int k = 0; k <= e; ++k) {
      binoms[static_cast<std::size_t>(k)] = bin;
      bin = bin * (e - k) / (k + 1);
    }
    Rational cpow = 1;
    for (int k = e; k >= 0; --k) {
      Monomial mk = k > 0 ? base * Monomial::variable(var, k) : base;
      r.add_term(mk, coeff * Rational(binoms[static_cast<std::size_t>(k)]) * cpow);
      cpow *= c;
    }
  }
  return r;
}

Rational BiPoly::evaluate(const std::array<Rational, kVarCount>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < kVarCount; ++i) {
      for (int k = 0; k < m.exponent(i); ++k) v *= values[static_cast<std::size_t>(i)];
    }
    total += v;
  }
  return total;
}

}  // namespace bisyz
