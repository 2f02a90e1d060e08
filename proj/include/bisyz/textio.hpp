#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bisyz/module.hpp"
#include "bisyz/point.hpp"

namespace bisyz {

// An ideal as read from an input file: ordered generators, their names, and
// optional declared bidegrees (validated against the computed ones).
struct IdealSpec {
  std::vector<std::string> names;
  std::vector<BiPoly> generators;
  std::optional<std::vector<BiDegree>> declared_bidegrees;

  static IdealSpec from_generators(std::vector<BiPoly> gens);

  std::vector<BiDegree> bidegrees() const;
  int generator_count() const { return static_cast<int>(generators.size()); }
};

// Grammar:
//   poly   := ('+'|'-')? term (('+'|'-') term)*
//   term   := coeff? factor*          (at least one of the two)
//   factor := var ('^' nat)?          var in {s,u,t,v}
//   coeff  := nat ('/' nat)?
// Whitespace-insensitive; '*' optional between factors.
BiPoly parse_poly(std::string_view text);

// Canonical form: terms in descending monomial order, '*' between factors,
// exact rational coefficients. parse_poly round-trips it.
std::string to_string(const BiPoly& p);

// Ideal files: '#' starts a comment line; each generator on one line as
//   name = poly
// or, with a declared bidegree,
//   name : (m,n) = poly
IdealSpec parse_ideal_text(std::string_view text);
IdealSpec parse_ideal_file(const std::string& path);
std::string serialize_ideal(const IdealSpec& spec);

// Comma-separated component list for syzygy vectors, e.g. "s^2*t, -u*v, 0".
std::vector<BiPoly> parse_poly_list(std::string_view text);
std::string to_string(const std::vector<BiPoly>& polys);

// Point literals use the CLI format "s:u;t:v" with rational entries.
PointP1xP1 parse_point(std::string_view text);
std::string to_string(const PointP1xP1& p);

}  // namespace bisyz
