#include "dpl/circle_map.hpp"

#include "dpl/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace dpl {

namespace {

void check_domain(const std::vector<Breakpoint>& pts) {
  if (pts.empty()) {
    throw Error(ErrorKind::NonIncreasingDomain, "breakpoint list is empty");
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].x < 0 || pts[i].x >= 1) {
      throw Error(ErrorKind::NonIncreasingDomain,
                  "breakpoint " + std::to_string(i) + " lies outside [0,1): x = " + to_string(pts[i].x));
    }
    if (i > 0 && !(pts[i - 1].x < pts[i].x)) {
      throw Error(ErrorKind::NonIncreasingDomain,
                  "breakpoints not strictly increasing at index " + std::to_string(i));
    }
  }
}

void check_distinct_values(const std::vector<Breakpoint>& pts) {
  std::set<Rational> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!seen.insert(frac(pts[i].lift)).second) {
      throw Error(ErrorKind::DuplicateVertexValue,
                  "vertex value " + to_string(frac(pts[i].lift)) + " (mod 1) repeats at index " +
                      std::to_string(i));
    }
  }
}

}  // namespace

PLCircleMap PLCircleMap::make(std::vector<Breakpoint> breakpoints, std::int64_t degree) {
  check_domain(breakpoints);
  check_distinct_values(breakpoints);

  const std::size_t m = breakpoints.size();
  auto next_l = [&](std::size_t i) {
    return i + 1 < m ? breakpoints[i + 1].lift : breakpoints[0].lift + Rational(degree);
  };

  std::vector<int> seg_sign(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational rise = next_l(i) - breakpoints[i].lift;
    if (rise == 0) {
      throw Error(ErrorKind::ZeroSlopeSegment, "segment " + std::to_string(i) + " has zero slope");
    }
    seg_sign[i] = sgn(rise);
  }

  // Drop vertices between same-sign segments; the result is a reparametrization
  // of the same map, so only folds survive.
  std::vector<Breakpoint> kept;
  for (std::size_t i = 0; i < m; ++i) {
    int before = seg_sign[(i + m - 1) % m];
    if (before != seg_sign[i]) kept.push_back(breakpoints[i]);
  }
  if (kept.empty()) kept.push_back(breakpoints[0]);

  PLCircleMap f;
  f.vertices_ = std::move(kept);
  f.degree_ = degree;
  f.slopes_.reserve(f.vertices_.size());
  for (std::size_t i = 0; i < f.vertices_.size(); ++i) {
    Rational s = (f.vertex_lift(i + 1) - f.vertex_lift(i)) / (f.vertex_x(i + 1) - f.vertex_x(i));
    f.slopes_.push_back(s);
  }
  return f;
}

Rational PLCircleMap::vertex_x(std::size_t i) const {
  return i < vertices_.size() ? vertices_[i].x : Rational(vertices_[0].x + 1);
}

Rational PLCircleMap::vertex_lift(std::size_t i) const {
  return i < vertices_.size() ? vertices_[i].lift : Rational(vertices_[0].lift + Rational(degree_));
}

Rational PLCircleMap::segment_lift(std::size_t segment, const Rational& x) const {
  return vertices_[segment].lift + slopes_[segment] * (x - vertices_[segment].x);
}

Rational PLCircleMap::segment_preimage(std::size_t segment, const Rational& value) const {
  return vertices_[segment].x + (value - vertices_[segment].lift) / slopes_[segment];
}

std::size_t PLCircleMap::locate(const Rational& x, std::int64_t* period_shift) const {
  std::int64_t n = floor_int(x - vertices_[0].x);
  Rational local = x - Rational(n);
  auto it = std::upper_bound(vertices_.begin(), vertices_.end(), local,
                             [](const Rational& v, const Breakpoint& b) { return v < b.x; });
  if (period_shift) *period_shift = n;
  return static_cast<std::size_t>(std::distance(vertices_.begin(), it)) - 1;
}

Rational PLCircleMap::lift_evaluate(const Rational& x) const {
  std::int64_t n = 0;
  std::size_t i = locate(x, &n);
  return segment_lift(i, x - Rational(n)) + Rational(n * degree_);
}

Angle PLCircleMap::evaluate(const Angle& x) const { return Angle(lift_evaluate(x.value())); }

bool PLCircleMap::is_fold(std::size_t vertex) const {
  const std::size_t m = vertices_.size();
  return slope_sign((vertex + m - 1) % m) != slope_sign(vertex % m);
}

std::vector<std::size_t> PLCircleMap::fold_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (is_fold(i)) out.push_back(i);
  }
  return out;
}

std::vector<Rational> PLCircleMap::fold_values() const {
  std::vector<Rational> out;
  for (std::size_t i : fold_vertices()) out.push_back(frac(vertices_[i].lift));
  std::sort(out.begin(), out.end());
  return out;
}

bool PLCircleMap::is_regular_value(const Angle& y) const {
  for (std::size_t i : fold_vertices()) {
    if (frac(vertices_[i].lift) == y.value()) return false;
  }
  return true;
}

int PLCircleMap::sign_at(const Rational& x) const { return slope_sign(locate(x)); }

PLCircleMap covering_map(std::int64_t degree) { return PLCircleMap::make({{Rational(0), Rational(0)}}, degree); }

PLCircleMap reflect(const PLCircleMap& f) {
  const std::size_t m = f.segment_count();
  std::vector<Breakpoint> pts;
  pts.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    Rational w = -f.vertex_x(m - j);
    Rational v = -f.vertex_lift(m - j);
    std::int64_t n = floor_int(w);
    pts.push_back({w - Rational(n), v - Rational(n * f.degree())});
  }
  std::sort(pts.begin(), pts.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.x < b.x; });
  return PLCircleMap::make(std::move(pts), f.degree());
}

namespace {

// mt19937_64 output is fixed by the standard; distributions are not, so the
// draws below use the raw engine to stay reproducible across toolchains.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

constexpr std::int64_t kPositionGrid = 4096;
constexpr std::int64_t kValueGrid = 7919;

std::vector<Rational> distinct_positions(Draw& draw, int count) {
  std::set<std::int64_t> picks;
  while (static_cast<int>(picks.size()) < count) {
    picks.insert(static_cast<std::int64_t>(draw.below(kPositionGrid)));
  }
  std::vector<Rational> out;
  for (std::int64_t p : picks) out.emplace_back(Rational(p, kPositionGrid));
  for (auto& r : out) r.canonicalize();
  return out;
}

std::vector<Breakpoint> folded_breakpoints(Draw& draw, int folds, std::int64_t degree) {
  for (;;) {
    std::vector<Rational> xs = distinct_positions(draw, folds);
    int first_sign = draw.below(2) == 0 ? 1 : -1;
    std::vector<Rational> steps(folds);
    Rational signed_sum = 0;
    for (int k = 0; k < folds; ++k) {
      Rational magnitude(static_cast<long>(1 + draw.below(3 * kValueGrid / 2)), kValueGrid);
      magnitude.canonicalize();
      steps[k] = magnitude;
      signed_sum += (k % 2 == 0 ? first_sign : -first_sign) * magnitude;
    }
    Rational delta = Rational(degree) - signed_sum;
    int target = sgn(delta) == first_sign ? 0 : 1;  // parity of the steps to widen
    if (delta != 0) {
      Rational share = abs(delta) / Rational(folds / 2);
      for (int k = target; k < folds; k += 2) steps[k] += share;
    }
    std::vector<Breakpoint> pts;
    Rational value(static_cast<long>(draw.below(kValueGrid)), kValueGrid);
    value.canonicalize();
    std::set<Rational> seen;
    bool generic = true;
    for (int k = 0; k < folds; ++k) {
      pts.push_back({xs[k], value});
      generic = generic && seen.insert(frac(value)).second;
      value += (k % 2 == 0 ? first_sign : -first_sign) * steps[k];
    }
    if (generic) return pts;
  }
}

}  // namespace

PLCircleMap random_map_with_degree(std::uint64_t seed, int max_folds, std::int64_t degree) {
  if (max_folds < 0 || (degree == 0 && max_folds < 2)) {
    throw Error(ErrorKind::InfeasibleParameters, "a degree 0 map needs at least two folds");
  }
  Draw draw(seed);
  int min_folds = degree == 0 ? 2 : 0;
  int choices = (max_folds - min_folds) / 2 + 1;
  int folds = min_folds + 2 * static_cast<int>(draw.below(choices));
  if (folds == 0) {
    Rational x(static_cast<long>(draw.below(kPositionGrid)), kPositionGrid);
    Rational l(static_cast<long>(draw.below(kValueGrid)), kValueGrid);
    x.canonicalize();
    l.canonicalize();
    return PLCircleMap::make({{x, l}}, degree);
  }
  return PLCircleMap::make(folded_breakpoints(draw, folds, degree), degree);
}

PLCircleMap random_map(std::uint64_t seed, int max_folds, int max_degree) {
  int lowest = max_folds >= 2 ? 0 : 1;
  if (max_folds < 0 || max_degree < lowest) {
    throw Error(ErrorKind::InfeasibleParameters,
                "no valid map with at most " + std::to_string(max_folds) + " folds and degree in [0," +
                    std::to_string(max_degree) + "]");
  }
  Draw draw(seed ^ 0x5bd1e995ULL);
  std::int64_t degree = lowest + static_cast<std::int64_t>(draw.below(max_degree - lowest + 1));
  return random_map_with_degree(seed, max_folds, degree);
}

}  // namespace dpl
