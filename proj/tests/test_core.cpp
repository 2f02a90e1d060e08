#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bisyz/bipoly.hpp"
#include "bisyz/textio.hpp"
#include "support/random_gen.hpp"

using namespace bisyz;

namespace {

BiPoly P(const char* text) { return parse_poly(text); }

}  // namespace

TEST_CASE("bidegree of bihomogeneous polynomials") {
  CHECK(P("u^2*t*v").bidegree() == BiDegree{2, 2});
  CHECK(P("s").bidegree() == BiDegree{1, 0});
  CHECK(P("u^2*t^2 + s*u*v^2").bidegree() == BiDegree{2, 2});
  CHECK_THROWS_AS(P("s + t").bidegree(), NotBihomogeneousError);
  CHECK_THROWS_AS(BiPoly::zero().bidegree(), ZeroPolynomialError);
}

TEST_CASE("ring arithmetic basics") {
  CHECK((P("s") - P("s")).is_zero());
  CHECK(P("u^2*t*v") * P("s^2*t*v") == P("s^2*u^2*t^2*v^2"));
  CHECK(P("u^2*t^2") + P("s*u*v^2") == P("u^2*t^2 + s*u*v^2"));
  CHECK(P("s^2t^2 + s u v^2 - s^2t^2") == P("s*u*v^2"));
}

TEST_CASE("degrevlex order on the degree-2 slice") {
  // Hand-derived chain for total degree 2 with s > u > t > v.
  const std::vector<const char*> expected = {"s^2", "s*u", "u^2", "s*t", "u*t",
                                             "t^2", "s*v", "u*v", "t*v", "v^2"};
  std::vector<Monomial> monomials;
  for (const char* text : expected)
    monomials.push_back(P(text).lead_monomial());
  std::vector<Monomial> shuffled = monomials;
  std::reverse(shuffled.begin(), shuffled.end());
  std::sort(shuffled.begin(), shuffled.end(), MonomialGreater{});
  CHECK(shuffled == monomials);
  // The tie-break the chain pins down: u^2 beats s*t.
  CHECK(compare(P("u^2").lead_monomial(), P("s*t").lead_monomial()) > 0);
  CHECK(compare(P("s*t").lead_monomial(), P("s*t").lead_monomial()) == 0);
  // Fixed variable order: s > u > t > v.
  CHECK(compare(P("s").lead_monomial(), P("u").lead_monomial()) > 0);
  CHECK(compare(P("u").lead_monomial(), P("t").lead_monomial()) > 0);
  CHECK(compare(P("t").lead_monomial(), P("v").lead_monomial()) > 0);
}

TEST_CASE("compare is a strict total order; sorting twice is idempotent") {
  testgen::Rng rng(7);
  std::vector<Monomial> monos;
  for (int k = 0; k < 60; ++k)
    monos.push_back(testgen::random_poly(rng).lead_monomial());
  std::sort(monos.begin(), monos.end(), MonomialGreater{});
  std::vector<Monomial> again = monos;
  std::sort(again.begin(), again.end(), MonomialGreater{});
  CHECK(again == monos);
  for (std::size_t i = 0; i + 1 < monos.size(); ++i)
    CHECK(compare(monos[i], monos[i + 1]) >= 0);
}

TEST_CASE("order is multiplicative") {
  testgen::Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const Monomial a = testgen::random_poly(rng).lead_monomial();
    const Monomial b = testgen::random_poly(rng).lead_monomial();
    const Monomial w = testgen::random_poly(rng).lead_monomial();
    const int before = compare(a, b);
    const int after = compare(a * w, b * w);
    CHECK(before == after);
  }
}

TEST_CASE("bidegree is additive under multiplication") {
  testgen::Rng rng(13);
  for (int k = 0; k < 50; ++k) {
    const BiDegree da{rng.below(3), rng.below(3)};
    const BiDegree db{rng.below(3), rng.below(3)};
    const BiPoly f = testgen::random_bihomogeneous(rng, da);
    const BiPoly g = testgen::random_bihomogeneous(rng, db);
    CHECK((f * g).bidegree() == da + db);
  }
}

TEST_CASE("ring axioms hold exactly on random inputs") {
  testgen::Rng rng(17);
  for (int k = 0; k < 40; ++k) {
    const BiPoly a = testgen::random_poly(rng);
    const BiPoly b = testgen::random_poly(rng);
    const BiPoly c = testgen::random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("stored coefficients are nonzero and in lowest terms") {
  testgen::Rng rng(19);
  for (int k = 0; k < 40; ++k) {
    const BiPoly a = testgen::random_poly(rng);
    const BiPoly b = testgen::random_poly(rng);
    const BiPoly combined = a * b + a - b;
    for (const auto& [m, coeff] : combined.terms()) {
      CHECK(coeff != 0);
      const Int num = numerator(coeff);
      const Int den = denominator(coeff);
      const Int common = gcd(num, den);
      CHECK(den > 0);
      CHECK(common == 1);
    }
  }
}

TEST_CASE("substitution helpers") {
  // s := 1 dehomogenizes; shifting then evaluating matches direct evaluation.
  const BiPoly f = P("u^2*t^2 + s*u*v^2");
  CHECK(f.substitute_one(kVarS) == P("u^2*t^2 + u*v^2"));
  const BiPoly g = P("s^2*t + 2*s*t + t");
  CHECK(g.shift(kVarS, Rational(-1)) == P("s^2*t"));
  const std::array<Rational, 4> vals = {Rational(2), Rational(1), Rational(3),
                                        Rational(1, 2)};
  CHECK(f.evaluate(vals) == Rational(9) + Rational(2) * Rational(1, 4));
}
