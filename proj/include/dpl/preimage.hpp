#ifndef DPL_PREIMAGE_HPP
#define DPL_PREIMAGE_HPP

#include "dpl/circle_map.hpp"

#include <cstdint>
#include <vector>

namespace dpl {

/// Arc in the target circle, stored as a lift interval [low, high] traversed
/// counterclockwise.  When high - low < 1 this is an embedded proper arc; a
/// longer interval is an immersed arc and preimages are taken in the pullback
/// along t -> t mod 1.
class TransverseArc {
 public:
  TransverseArc(Rational low, Rational high);

  /// Arc from start to end; orientation +1 runs counterclockwise, -1 clockwise.
  static TransverseArc from_endpoints(const Angle& start, const Angle& end, int orientation = 1);

  const Rational& low() const { return low_; }
  const Rational& high() const { return high_; }
  Rational length() const { return high_ - low_; }
  bool proper() const { return length() < 1; }

  friend bool operator==(const TransverseArc&, const TransverseArc&) = default;

 private:
  Rational low_;
  Rational high_;
};

enum class ArcKind { Positive, Negative, Neutral, Circle };
enum class ArcEnd { Low, High, None };

const char* to_string(ArcKind kind);
const char* to_string(ArcEnd end);

/// One component of f^{-1}(J).  `start` is in [x_0, x_0 + 1); `end` > `start`
/// is measured along the domain lift (it may pass several periods when J is
/// immersed).  Along the component the lift stays in the window
/// [low + window, high + window], with `window` taken relative to `start`.
/// Circle components have start = x_0 and end = x_0 + 1.
struct ArcComponent {
  Rational start;
  Rational end;
  std::int64_t window = 0;
  ArcKind kind = ArcKind::Neutral;
  ArcEnd entry = ArcEnd::None;
  ArcEnd exit = ArcEnd::None;
};

struct PreimageClassification {
  std::vector<ArcComponent> components;  // sorted by (start, window)
  std::int64_t positive = 0;             // p_J
  std::int64_t negative = 0;             // m_J

  std::vector<std::size_t> indices_of(ArcKind kind) const;
};

/// Throws EndpointNotRegular if an end of J is a fold value.
PreimageClassification classify_preimage(const PLCircleMap& f, const TransverseArc& arc);

/// A regular value strictly inside the arc, as a lift level in (low, high).
Rational interior_regular_level(const PLCircleMap& f, const TransverseArc& arc);

/// Signed count of the points of each component lying over the lift level
/// `level` (strictly inside the arc and a regular value), by exact enumeration.
std::vector<std::int64_t> fiber_sign_sums(const PLCircleMap& f, const PreimageClassification& cls,
                                          const Rational& level);

/// Largest fold level (fold value + integer) strictly below `level`, and the
/// smallest one strictly above it.  The map must have folds.
Rational next_fold_level_below(const PLCircleMap& f, const Rational& level);
Rational next_fold_level_above(const PLCircleMap& f, const Rational& level);

}  // namespace dpl

#endif  // DPL_PREIMAGE_HPP
