#ifndef DPL_INTERVAL_MAPS_HPP
#define DPL_INTERVAL_MAPS_HPP

#include "dpl/circle_map.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace dpl {

/// PL map [0,1] -> [0,1] with f(0) = 0 and f(1) = 1.  Vertex 0 sits at x = 0
/// and the last vertex at x = 1.  Non-fold interior vertices are dropped.
class IntervalMap {
 public:
  /// Throws NonIncreasingDomain, ZeroSlopeSegment or BadParameter (boundary
  /// conditions, values outside [0,1]).
  static IntervalMap make(std::vector<Breakpoint> vertices);

  const std::vector<Breakpoint>& vertices() const { return vertices_; }
  std::size_t segment_count() const { return vertices_.size() - 1; }
  Rational value_at(const Rational& x) const;
  /// True if some interior vertex takes the value 0 or 1.
  bool boundary_folds() const;

 private:
  IntervalMap() = default;
  std::vector<Breakpoint> vertices_;
};

struct IntervalMapPair {
  IntervalMap first;
  IntervalMap second;
};

/// Rejects pairs whose interior vertex values collide (across both maps).
IntervalMapPair make_pair(IntervalMap first, IntervalMap second);

using TorusPoint = std::pair<Rational, Rational>;

struct Lemma1Report {
  bool connected = false;          // corners (0,0') and (1,1') in one component
  bool collar_applied = false;     // both maps were extended over a collar and rescaled
  std::vector<TorusPoint> witness; // PL path from (0,0') to (1,1'), in original coordinates
  std::size_t component_count = 0;
};

/// Double-point set of the disjoint union inside I x I', traced from the
/// corner (0,0').
Lemma1Report lemma1_check(const IntervalMapPair& pair);

/// Generic random pair; each map has an odd number of monotone laps (at most
/// 2 * max_folds + 1 vertices inside).
IntervalMapPair random_interval_pair(std::uint64_t seed, int max_fold_pairs);

}  // namespace dpl

#endif  // DPL_INTERVAL_MAPS_HPP
