#ifndef DPL_DOUBLE_POINTS_HPP
#define DPL_DOUBLE_POINTS_HPP

#include "dpl/circle_map.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace dpl {

/// Point of the torus where the double-point curve crosses a rectangle edge,
/// or a fold point (c,c) on the diagonal where two open arcs end.
struct SigmaNode {
  Rational x;  // in [0,1)
  Rational y;  // in [0,1)
  bool diagonal = false;
  std::vector<std::size_t> edges;
};

/// Straight piece of the curve inside the rectangle segment_x x segment_y, on
/// the line lift_x(u) = lift_y(v) + shift.  Coordinates are rectangle lifts;
/// `w` is the common target lift.  End 0 has the smaller target value.
struct SigmaEdge {
  std::size_t segment_x = 0;
  std::size_t segment_y = 0;
  std::int64_t shift = 0;
  Rational u0, v0, w0;
  Rational u1, v1, w1;
  std::size_t node0 = 0;
  std::size_t node1 = 0;
  /// +1 when the component orientation runs from end 0 to end 1.
  int orientation = 1;
  std::size_t component = 0;
};

struct SigmaComponent {
  bool compact = false;
  std::vector<std::size_t> edges;  // traversal order
  std::vector<int> directions;     // +1: traversed end 0 -> end 1
  std::vector<std::size_t> nodes;  // traversal order; for arcs front/back are diagonal
  std::int64_t p1_degree = 0;      // zero for open arcs
  std::int64_t p2_degree = 0;
  std::int64_t target_winding = 0;
  Rational image_span;  // max - min of the target lift along the component
  std::size_t tau = 0;  // index of the swapped component
  std::optional<std::size_t> end_folds[2];  // fold vertices at the ends of an open arc
};

/// Orbit of tau on components: one component (tau-invariant) or a swapped pair.
struct QuotientComponent {
  std::vector<std::size_t> members;
  bool compact = false;
  bool cover_trivial = false;     // preimage in Sigma_f disconnected
  bool maps_through_arc = false;  // image under the double-point map omits a point
};

/// Component of the closure obtained by gluing open arcs at fold points.
struct ClosureComponent {
  std::vector<std::size_t> members;
  std::size_t diagonal_crossings = 0;
  std::size_t orientation_reversals = 0;
  bool orientable = true;
};

struct DoublePointCurve {
  PLCircleMap map;
  std::vector<SigmaNode> nodes;
  std::vector<SigmaEdge> edges;
  std::vector<SigmaComponent> components;
  std::vector<QuotientComponent> quotients;
  std::vector<ClosureComponent> closures;
  std::map<std::tuple<std::size_t, std::size_t, std::int64_t>, std::size_t> edge_index;

  bool tau_invariant(std::size_t c) const { return components[c].tau == c; }
};

/// Exact double-point curve {(x,y) : x != y, f(x) = f(y)} of a valid map.
DoublePointCurve sigma(const PLCircleMap& f);

/// factor 1 or 2; zero for open arcs.
std::int64_t projection_degree(const DoublePointCurve& curve, std::size_t component, int factor);

/// Component containing (x, y), or nullopt if the point is not a double point.
std::optional<std::size_t> component_of(const DoublePointCurve& curve, const Rational& x, const Rational& y);

struct RealizabilityReport {
  bool criterion_pass = true;
  std::optional<std::size_t> witness;  // tau-invariant component with odd p1 degree
  bool classical_pass = false;         // degree outside {-1, 0, 1}
  bool agreement = true;
  std::string notes;
};

RealizabilityReport realizability_report(const DoublePointCurve& curve);

/// Parity of compact tau-invariant components.
int hopf_invariant(const DoublePointCurve& curve);

struct ControlledBit {
  std::size_t quotient;
  int bit;
};
/// One bit per compact quotient component: 1 iff the double cover over it is connected.
std::vector<ControlledBit> controlled_hopf(const DoublePointCurve& curve);

bool closure_orientability(const DoublePointCurve& curve, std::size_t closure);

struct Proposition4Entry {
  std::size_t quotient;
  bool maps_through_arc;
  bool cover_trivial;
  bool compact;
};
struct Proposition4Report {
  std::vector<Proposition4Entry> entries;
  bool violation = false;
};
/// Flags a compact quotient component whose cover is nontrivial while its
/// image is a proper arc.  Never set for valid maps.
Proposition4Report proposition4_check(const DoublePointCurve& curve);

}  // namespace dpl

#endif  // DPL_DOUBLE_POINTS_HPP
