#pragma once

#include <array>
#include <string>
#include <vector>

#include "bisyz/errors.hpp"
#include "bisyz/rational.hpp"

namespace bisyz {

// Rational point of P¹×P¹ as two coordinate pairs (s:u) and (t:v), each
// normalized so its last nonzero coordinate is 1.
struct PointP1xP1 {
  std::array<Rational, 2> first{{Rational(0), Rational(1)}};
  std::array<Rational, 2> second{{Rational(0), Rational(1)}};

  static std::array<Rational, 2> normalize_pair(const Rational& a,
                                                const Rational& b) {
    if (b != 0) return {a / b, Rational(1)};
    if (a != 0) return {Rational(1), Rational(0)};
    throw Error("projective coordinate pair (0:0) is not a point");
  }

  static PointP1xP1 make(const Rational& s, const Rational& u,
                         const Rational& t, const Rational& v) {
    PointP1xP1 p;
    p.first = normalize_pair(s, u);
    p.second = normalize_pair(t, v);
    return p;
  }

  friend bool operator==(const PointP1xP1&, const PointP1xP1&) = default;

  std::string to_string() const {
    return "((" + rational_to_string(first[0]) + ":" +
           rational_to_string(first[1]) + "),(" +
           rational_to_string(second[0]) + ":" +
           rational_to_string(second[1]) + "))";
  }
};

// Deterministic order for report output.
inline bool point_less(const PointP1xP1& a, const PointP1xP1& b) {
  if (a.first[0] != b.first[0]) return a.first[0] < b.first[0];
  if (a.first[1] != b.first[1]) return a.first[1] < b.first[1];
  if (a.second[0] != b.second[0]) return a.second[0] < b.second[0];
  return a.second[1] < b.second[1];
}

// Local picture of an ideal at one base point.
struct LocalReport {
  PointP1xP1 point;
  long multiplicity = 0;   // dim O_p / I_p
  int tangent_dim = 0;     // dim m_p / (m_p^2 + I_p)
  long conormal_dim = 0;   // dim I_p / I_p^2
  bool curvilinear = false;
  bool lci = false;
};

struct BasePointLocus {
  std::vector<PointP1xP1> rational_points;
  // True exactly when the residual chart ideals after removing every found
  // point are the unit ideal, i.e. no non-rational points remain.
  bool complete = false;
};

}  // namespace bisyz
