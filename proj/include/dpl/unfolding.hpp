#ifndef DPL_UNFOLDING_HPP
#define DPL_UNFOLDING_HPP

#include "dpl/double_points.hpp"
#include "dpl/preimage.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dpl {

/// Domain path from one classified arc of f^{-1}(J) to an arc of the opposite
/// sign along which the lift returns to its starting level.  Domain
/// coordinates are lifts: [domain_begin, domain_end] with begin < end.
struct BalancedPath {
  std::size_t start = 0;    // component index in `classification`
  std::size_t partner = 0;  // opposite-sign component reached
  std::int64_t partner_shift = 0;  // partner sits at its recorded position + shift
  Rational domain_begin, domain_end;
  Rational level;                  // common lift value at both path ends
  Rational min_lift, max_lift;     // extremes of the lift along the path
  std::int64_t positive_passed = 0;
  std::int64_t negative_passed = 0;
  bool closed = false;     // lift equal at both ends
  bool one_sided = false;  // lift stays on one side of `level`
  PreimageClassification classification;
};

/// First-occurrence search.  Throws NoOppositeArc when no arc of the opposite
/// sign exists or none is reachable from `start` by a one-period scan.
BalancedPath find_balanced_path(const PLCircleMap& f, const TransverseArc& arc, std::size_t start);

enum class UnfoldMode { Plain, OpenSubset, RegularValue };
enum class ArcSide { Low, High };

struct UnfoldStep {
  TransverseArc arc;
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  // Witness for the extension that produced the next step; absent on the last step.
  std::optional<Rational> witness_start;  // domain start of the negative arc handled
  std::optional<Rational> witness_partner_end;
  std::optional<ArcSide> extended;
};

struct UnfoldResult {
  TransverseArc arc;
  std::vector<UnfoldStep> trace;
};

struct UnfoldOptions {
  UnfoldMode mode = UnfoldMode::Plain;
  ArcSide side = ArcSide::Low;     // end that may move in open-subset mode
  std::optional<Rational> z;       // regular value (a lift level inside the arc) for regular-value mode
};

/// Grows J0 until its preimage has no negative arcs.  Requires deg(f) >= 0;
/// throws PreconditionUnmet otherwise, EndpointNotRegular for a bad J0.
UnfoldResult eliminate_negative_arcs(const PLCircleMap& f, const TransverseArc& j0, const UnfoldOptions& options = {});

/// True if the lift over the component passes `level` + window.
bool component_meets_level(const PLCircleMap& f, const ArcComponent& c, const Rational& level);

struct Lemma4Entry {
  std::size_t component;
  std::int64_t p1_degree;
  std::int64_t pair_count;
  bool equal;
};
struct Lemma4Report {
  std::vector<Rational> endpoints;  // exit points of the positive arcs, in [0,1)
  std::vector<Lemma4Entry> entries;
  bool all_equal = true;
};

/// Compares every component's first projection degree with the number of
/// pairs (x_1, x_i), i != 1, it contains.  Throws PreconditionUnmet unless the
/// preimage of the arc has exactly deg(f) positive arcs and no negative ones.
Lemma4Report lemma4_verify(const PLCircleMap& f, const TransverseArc& arc, const DoublePointCurve& curve);

}  // namespace dpl

#endif  // DPL_UNFOLDING_HPP
