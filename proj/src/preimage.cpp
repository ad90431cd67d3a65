#include "dpl/preimage.hpp"

#include "dpl/error.hpp"

#include <algorithm>
#include <tuple>

namespace dpl {

TransverseArc::TransverseArc(Rational low, Rational high) : low_(std::move(low)), high_(std::move(high)) {
  if (!(low_ < high_)) {
    throw Error(ErrorKind::BadParameter, "arc must have positive length");
  }
}

TransverseArc TransverseArc::from_endpoints(const Angle& start, const Angle& end, int orientation) {
  if (start == end) {
    throw Error(ErrorKind::BadParameter, "arc endpoints coincide");
  }
  if (orientation >= 0) {
    return TransverseArc(start.value(), start.value() + frac(end.value() - start.value()));
  }
  return TransverseArc(end.value(), end.value() + frac(start.value() - end.value()));
}

const char* to_string(ArcKind kind) {
  switch (kind) {
    case ArcKind::Positive: return "positive";
    case ArcKind::Negative: return "negative";
    case ArcKind::Neutral: return "neutral";
    case ArcKind::Circle: return "circle";
  }
  return "?";
}

const char* to_string(ArcEnd end) {
  switch (end) {
    case ArcEnd::Low: return "low";
    case ArcEnd::High: return "high";
    case ArcEnd::None: return "none";
  }
  return "?";
}

std::vector<std::size_t> PreimageClassification::indices_of(ArcKind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].kind == kind) out.push_back(i);
  }
  return out;
}

namespace {

struct Crossing {
  Rational u;
  ArcEnd end;
  std::int64_t window;
  bool entering;
};

std::vector<Crossing> crossings(const PLCircleMap& f, const TransverseArc& arc) {
  std::vector<Crossing> out;
  for (std::size_t i = 0; i < f.segment_count(); ++i) {
    const Rational a = f.vertex_lift(i);
    const Rational b = f.vertex_lift(i + 1);
    const Rational lo = a < b ? a : b;
    const Rational hi = a < b ? b : a;
    const int dir = f.slope_sign(i);
    for (ArcEnd end : {ArcEnd::Low, ArcEnd::High}) {
      const Rational& base = end == ArcEnd::Low ? arc.low() : arc.high();
      for (std::int64_t k = ceil_int(lo - base); k <= floor_int(hi - base); ++k) {
        Rational level = base + Rational(k);
        if (level == b) continue;  // belongs to the next segment
        bool entering = (end == ArcEnd::Low) == (dir > 0);
        out.push_back({f.segment_preimage(i, level), end, k, entering});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& p, const Crossing& q) { return p.u < q.u; });
  return out;
}

}  // namespace

PreimageClassification classify_preimage(const PLCircleMap& f, const TransverseArc& arc) {
  if (!f.is_regular_value(Angle(arc.low())) || !f.is_regular_value(Angle(arc.high()))) {
    throw Error(ErrorKind::EndpointNotRegular,
                "arc endpoints " + to_string(arc.low()) + ", " + to_string(arc.high()) + " must be regular values");
  }
  const std::int64_t d = f.degree();
  const std::vector<Crossing> cs = crossings(f, arc);
  PreimageClassification out;

  for (std::size_t e = 0; e < cs.size(); ++e) {
    if (!cs[e].entering) continue;
    const std::int64_t k = cs[e].window;
    std::size_t idx = e;
    std::int64_t wraps = 0;
    // The lift leaves the window after at most |length|/|d| + 2 periods.
    for (;;) {
      ++idx;
      if (idx == cs.size()) {
        idx = 0;
        ++wraps;
      }
      if (cs[idx].window + wraps * d == k) break;
    }
    ArcComponent c;
    c.start = cs[e].u;
    c.end = cs[idx].u + Rational(wraps);
    c.window = k;
    c.entry = cs[e].end;
    c.exit = cs[idx].end;
    if (c.entry == ArcEnd::Low && c.exit == ArcEnd::High) {
      c.kind = ArcKind::Positive;
    } else if (c.entry == ArcEnd::High && c.exit == ArcEnd::Low) {
      c.kind = ArcKind::Negative;
    } else {
      c.kind = ArcKind::Neutral;
    }
    out.components.push_back(std::move(c));
  }

  if (d == 0) {
    Rational lo = f.vertex_lift(0), hi = f.vertex_lift(0);
    for (std::size_t i = 1; i < f.segment_count(); ++i) {
      lo = std::min(lo, f.vertex_lift(i));
      hi = std::max(hi, f.vertex_lift(i));
    }
    for (std::int64_t k = floor_int(hi - arc.high()) + 1; Rational(k) < lo - arc.low(); ++k) {
      ArcComponent c;
      c.start = f.vertex_x(0);
      c.end = f.vertex_x(0) + 1;
      c.window = k;
      c.kind = ArcKind::Circle;
      out.components.push_back(std::move(c));
    }
  }

  std::sort(out.components.begin(), out.components.end(), [](const ArcComponent& p, const ArcComponent& q) {
    return std::tie(p.start, p.window) < std::tie(q.start, q.window);
  });
  for (const auto& c : out.components) {
    if (c.kind == ArcKind::Positive) ++out.positive;
    if (c.kind == ArcKind::Negative) ++out.negative;
  }
  return out;
}

Rational interior_regular_level(const PLCircleMap& f, const TransverseArc& arc) {
  Rational step = arc.length() / 2;
  for (;;) {
    for (Rational t = arc.low() + step; t < arc.high(); t += 2 * step) {
      if (f.is_regular_value(Angle(t))) return t;
    }
    step /= 2;
  }
}

Rational next_fold_level_below(const PLCircleMap& f, const Rational& level) {
  std::vector<Rational> folds = f.fold_values();
  if (folds.empty()) throw Error(ErrorKind::PreconditionUnmet, "map has no folds");
  Rational best;
  bool first = true;
  for (const Rational& phi : folds) {
    Rational r = frac(level - phi);
    Rational c = r > 0 ? Rational(level - r) : Rational(level - 1);
    if (first || c > best) best = c;
    first = false;
  }
  return best;
}

Rational next_fold_level_above(const PLCircleMap& f, const Rational& level) {
  std::vector<Rational> folds = f.fold_values();
  if (folds.empty()) throw Error(ErrorKind::PreconditionUnmet, "map has no folds");
  Rational best;
  bool first = true;
  for (const Rational& phi : folds) {
    Rational r = frac(phi - level);
    Rational c = r > 0 ? Rational(level + r) : Rational(level + 1);
    if (first || c < best) best = c;
    first = false;
  }
  return best;
}

std::vector<std::int64_t> fiber_sign_sums(const PLCircleMap& f, const PreimageClassification& cls,
                                          const Rational& level) {
  std::vector<std::int64_t> out;
  const std::size_t m = f.segment_count();
  for (const ArcComponent& c : cls.components) {
    const Rational target = level + Rational(c.window);
    std::int64_t sum = 0;
    // Segment pieces [a, b] of the component, counted half-open at a.
    std::int64_t period = floor_int(c.start - f.vertex_x(0));
    std::size_t i = f.locate(c.start);
    Rational a = c.start;
    while (a < c.end) {
      Rational b = std::min(Rational(f.vertex_x(i + 1) + period), c.end);
      const Rational la = f.lift_evaluate(a), lb = f.lift_evaluate(b);
      if ((la < target && target <= lb) || (lb <= target && target < la)) sum += f.slope_sign(i);
      a = b;
      if (++i == m) {
        i = 0;
        ++period;
      }
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace dpl
