#ifndef DPL_PLANAR_CURVE_HPP
#define DPL_PLANAR_CURVE_HPP

#include "dpl/rational.hpp"

#include <cstddef>
#include <vector>

namespace dpl {

struct PlanePoint {
  Rational x;
  Rational y;
};

struct PlanarHopfReport {
  std::size_t crossings = 0;
  int parity = 0;
};

/// Closed polygon through `vertices` (last joins first).  Counts transverse
/// crossings between non-adjacent edges.  Throws DegeneratePosition when a
/// vertex lies on another edge, edges overlap, or fewer than 3 vertices.
PlanarHopfReport planar_curve_hopf(const std::vector<PlanePoint>& vertices);

}  // namespace dpl

#endif  // DPL_PLANAR_CURVE_HPP
