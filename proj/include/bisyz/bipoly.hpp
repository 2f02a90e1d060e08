#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "bisyz/errors.hpp"
#include "bisyz/monomial.hpp"
#include "bisyz/rational.hpp"

namespace bisyz {

// Polynomial in R = Q[s,u,t,v] with exact rational coefficients. Terms are
// kept in a map ordered by descending monomial order, so begin() is the lead
// term and iteration order is canonical. No zero coefficient is ever stored.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialGreater>;

  BiPoly() = default;

  static BiPoly zero() { return {}; }
  static BiPoly constant(Rational c) {
    BiPoly p;
    if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
  }
  static BiPoly one() { return constant(1); }
  static BiPoly variable(int index) { return term(Monomial::variable(index), 1); }
  static BiPoly term(const Monomial& m, Rational c) {
    BiPoly p;
    if (c != 0) p.terms_.emplace(m, std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& lead_monomial() const {
    if (terms_.empty()) throw ZeroPolynomialError();
    return terms_.begin()->first;
  }
  const Rational& lead_coeff() const {
    if (terms_.empty()) throw ZeroPolynomialError();
    return terms_.begin()->second;
  }

  void add_term(const Monomial& m, const Rational& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a) {
    BiPoly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rational& c, BiPoly p) { return p *= c; }
  friend BiPoly operator*(BiPoly p, const Rational& c) { return p *= c; }

  // this * (c * m), the workhorse of division and S-polynomials.
  BiPoly times_term(const Monomial& m, const Rational& c) const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  bool has_aux() const;
  bool is_bihomogeneous() const;
  // Common bidegree of all terms. Throws ZeroPolynomialError on 0 and
  // NotBihomogeneousError when terms disagree.
  BiDegree bidegree() const;

  // var := 1 (dehomogenization onto an affine chart).
  BiPoly substitute_one(int var) const;
  // var := var + c (translation of a chart point to the origin).
  BiPoly shift(int var, const Rational& c) const;
  Rational evaluate(const std::array<Rational, kVarCount>& values) const;

 private:
  TermMap terms_;
};

}  // namespace bisyz
