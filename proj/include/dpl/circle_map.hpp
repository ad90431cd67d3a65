#ifndef DPL_CIRCLE_MAP_HPP
#define DPL_CIRCLE_MAP_HPP

#include "dpl/rational.hpp"

#include <cstdint>
#include <vector>

namespace dpl {

struct Breakpoint {
  Rational x;     // domain position in [0,1)
  Rational lift;  // value of the lifted map at x

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Piecewise-linear self-transverse map S^1 -> S^1 given by a lift.
///
/// Vertex i sits at (x_i, l_i); the closing vertex is (x_0 + 1, l_0 + degree).
/// Segment i joins vertex i to vertex i+1.  After construction every vertex is
/// a fold (slope sign change) unless the map is monotone, in which case a
/// single vertex remains.  Vertex values are pairwise distinct mod 1.
class PLCircleMap {
 public:
  /// Validates and normalizes.  Throws Error with NonIncreasingDomain,
  /// DuplicateVertexValue or ZeroSlopeSegment.
  static PLCircleMap make(std::vector<Breakpoint> breakpoints, std::int64_t degree);

  const std::vector<Breakpoint>& breakpoints() const { return vertices_; }
  std::int64_t degree() const { return degree_; }
  std::size_t segment_count() const { return vertices_.size(); }

  /// Domain position of vertex i for i in [0, m]; vertex m is x_0 + 1.
  Rational vertex_x(std::size_t i) const;
  /// Lift value at vertex i for i in [0, m]; vertex m is l_0 + degree.
  Rational vertex_lift(std::size_t i) const;
  const Rational& slope(std::size_t segment) const { return slopes_[segment]; }
  int slope_sign(std::size_t segment) const { return sgn(slopes_[segment]); }

  /// Lift on segment i as an affine function, valid on [vertex_x(i), vertex_x(i+1)].
  Rational segment_lift(std::size_t segment, const Rational& x) const;
  /// Inverse of segment_lift.
  Rational segment_preimage(std::size_t segment, const Rational& value) const;

  /// Index of the segment whose half-open domain [x_i, x_{i+1}) contains the
  /// representative of x shifted into [x_0, x_0 + 1); also returns the shift.
  std::size_t locate(const Rational& x, std::int64_t* period_shift = nullptr) const;

  /// Continuous lift on all of R; lift(x + 1) = lift(x) + degree.
  Rational lift_evaluate(const Rational& x) const;
  Angle evaluate(const Angle& x) const;

  bool is_fold(std::size_t vertex) const;
  std::vector<std::size_t> fold_vertices() const;
  /// Fold values mod 1, sorted.
  std::vector<Rational> fold_values() const;
  bool is_regular_value(const Angle& y) const;

  /// Sign of the slope at a point that is not a fold vertex.
  int sign_at(const Rational& x) const;

  friend bool operator==(const PLCircleMap&, const PLCircleMap&) = default;

 private:
  PLCircleMap() = default;

  std::vector<Breakpoint> vertices_;
  std::vector<Rational> slopes_;
  std::int64_t degree_ = 0;
};

/// Deterministic generator of valid maps: fold count even in [0, max_folds],
/// degree in [0, max_degree].  Throws InfeasibleParameters when no valid map
/// exists (a fold-free map needs nonzero degree).
PLCircleMap random_map(std::uint64_t seed, int max_folds, int max_degree);

/// Same family with the degree fixed (may be negative).
PLCircleMap random_map_with_degree(std::uint64_t seed, int max_folds, std::int64_t degree);

/// The d-fold cover x -> d x.
PLCircleMap covering_map(std::int64_t degree);

/// Conjugate by the reflection x -> -x on both domain and target.  Preserves
/// the degree, swaps the roles of the two ends of every target arc.
PLCircleMap reflect(const PLCircleMap& f);

}  // namespace dpl

#endif  // DPL_CIRCLE_MAP_HPP
