#include "dpl/planar_curve.hpp"

#include "dpl/error.hpp"

#include <set>
#include <utility>

namespace dpl {

namespace {

int orient(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  return sgn((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool on_segment(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

PlanarHopfReport planar_curve_hopf(const std::vector<PlanePoint>& v) {
  const std::size_t n = v.size();
  if (n < 3) throw Error(ErrorKind::DegeneratePosition, "a closed polygon needs at least 3 vertices");
  auto degenerate = [](std::size_t i, std::size_t j, const char* why) {
    return Error(ErrorKind::DegeneratePosition,
                 "edges " + std::to_string(i) + " and " + std::to_string(j) + ": " + why);
  };
  PlanarHopfReport r;
  std::set<std::pair<Rational, Rational>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = v[i];
    const PlanePoint& b = v[(i + 1) % n];
    if (a.x == b.x && a.y == b.y) throw degenerate(i, i, "zero-length edge");
    for (std::size_t j = i + 1; j < n; ++j) {
      const PlanePoint& c = v[j];
      const PlanePoint& d = v[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared vertex only; a fold-back along the same line is degenerate.
        const PlanePoint& far = j == i + 1 ? d : c;
        const PlanePoint& near_a = j == i + 1 ? a : b;
        const PlanePoint& shared = j == i + 1 ? b : a;
        if (orient(near_a, shared, far) == 0 &&
            (on_segment(far, near_a, shared) || on_segment(near_a, shared, far))) {
          throw degenerate(i, j, "adjacent edges overlap");
        }
        continue;
      }
      const int o1 = orient(a, b, c), o2 = orient(a, b, d);
      const int o3 = orient(c, d, a), o4 = orient(c, d, b);
      if ((o1 == 0 && on_segment(c, a, b)) || (o2 == 0 && on_segment(d, a, b)) ||
          (o3 == 0 && on_segment(a, c, d)) || (o4 == 0 && on_segment(b, c, d))) {
        throw degenerate(i, j, "vertex lies on a non-adjacent edge");
      }
      if (o1 * o2 < 0 && o3 * o4 < 0) {
        // Intersection point, to reject three edges through one point.
        const Rational t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) /
                           ((b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x));
        std::pair<Rational, Rational> at{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        if (!seen.insert(at).second) throw degenerate(i, j, "three edges meet at one point");
        ++r.crossings;
      }
    }
  }
  r.parity = static_cast<int>(r.crossings % 2);
  return r;
}

}  // namespace dpl
