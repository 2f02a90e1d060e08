#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bisyz {

// Exact arithmetic over the rationals. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the invariant the
// coefficient field needs.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& q) { return q.str(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace bisyz
