#pragma once

#include <vector>

#include "bisyz/groebner.hpp"
#include "bisyz/point.hpp"
#include "bisyz/textio.hpp"

namespace bisyz {

// True iff the dehomogenized ideal has finite colength (or is the unit
// ideal) on each of the four affine charts, i.e. V(I) ⊂ P¹×P¹ is finite.
bool is_zero_dimensional(const IdealSpec& ideal);

// The gate shared by degree/conormal/LCI computations: zero-dimensional and
// nonempty. Saturating away everything (I^sat = <1>) means there is no
// base-point scheme to measure, so degenerate inputs such as <s,u> are
// rejected alongside genuine curves.
void require_codim_two(const IdealSpec& ideal);

// All rational points of V(I), by chart-wise elimination to univariate
// polynomials, rational root extraction, back-substitution, and direct
// verification. `complete` certifies that no non-rational points remain.
BasePointLocus base_points(const IdealSpec& ideal);

long local_multiplicity(const IdealSpec& ideal, const PointP1xP1& p);
int tangent_dimension(const IdealSpec& ideal, const PointP1xP1& p);
bool is_curvilinear_at(const IdealSpec& ideal, const PointP1xP1& p);
LocalReport local_report(const IdealSpec& ideal, const PointP1xP1& p);
bool is_lci_at(const IdealSpec& ideal, const PointP1xP1& p);

// Reports for every base point. Throws RequiresRationalPointsError when the
// locus is incomplete (non-rational points would be silently missing).
std::vector<LocalReport> local_reports(const IdealSpec& ideal);

// H(I/I²) = 2·deg(Z) criterion; needs no point extraction, so it also
// covers ideals whose base points are not rational.
bool is_lci_global(const IdealSpec& ideal);

namespace geometry_detail {

// Affine charts in the fixed order (s=1,t=1), (s=1,v=1), (u=1,t=1), (u=1,v=1).
struct Chart {
  int unit_first;   // variable set to 1 in the first factor (kVarS or kVarU)
  int unit_second;  // variable set to 1 in the second factor (kVarT or kVarV)
  int free_first;   // remaining first-factor variable
  int free_second;  // remaining second-factor variable
};

const std::array<Chart, 4>& charts();
std::vector<BiPoly> chart_ideal(const IdealSpec& ideal, const Chart& chart);
bool point_in_chart(const PointP1xP1& p, const Chart& chart);
// Affine coordinates of p in the chart (free_first value, free_second value).
std::array<Rational, 2> chart_coordinates(const PointP1xP1& p,
                                          const Chart& chart);
// Full local analysis computed inside one chart containing p.
LocalReport local_report_in_chart(const IdealSpec& ideal, const PointP1xP1& p,
                                  const Chart& chart);

}  // namespace geometry_detail

}  // namespace bisyz
