#include "dpl/unfolding.hpp"

#include "dpl/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpl {

namespace {

struct Scan {
  std::optional<Rational> hit;
  Rational min, max;
};

// Walks the lift from u0 (where it equals `level`) in direction dir for less
// than one period and stops at the first return to `level`.
Scan scan_for_level(const PLCircleMap& f, const Rational& u0, const Rational& level, int dir) {
  std::vector<Rational> points;
  const std::int64_t base = floor_int(u0);
  for (std::size_t i = 0; i < f.segment_count(); ++i) {
    for (std::int64_t n = base - 2; n <= base + 2; ++n) {
      Rational v = f.vertex_x(i) + Rational(n);
      Rational offset = dir > 0 ? Rational(v - u0) : Rational(u0 - v);
      if (offset > 0 && offset < 1) points.push_back(v);
    }
  }
  std::sort(points.begin(), points.end());
  if (dir < 0) std::reverse(points.begin(), points.end());
  points.push_back(u0 + Rational(dir));

  Scan s{std::nullopt, level, level};
  Rational a = u0;
  Rational la = level;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const Rational& b = points[p];
    const Rational lb = f.lift_evaluate(b);
    const bool last = p + 1 == points.size();
    const bool crosses = a != u0 && sgn(la - level) * sgn(lb - level) < 0;
    if (crosses || (!last && lb == level)) {
      s.hit = a + (level - la) * (b - a) / (lb - la);
      return s;
    }
    if (last) break;
    s.min = std::min(s.min, lb);
    s.max = std::max(s.max, lb);
    a = b;
    la = lb;
  }
  return s;
}

struct Located {
  std::size_t index;
  std::int64_t shift;
};

// Component with an end (start or end) at domain point r in window k.
std::optional<Located> component_at(const PreimageClassification& cls, std::int64_t d, const Rational& r,
                                    std::int64_t k, bool at_start) {
  for (std::size_t i = 0; i < cls.components.size(); ++i) {
    const ArcComponent& c = cls.components[i];
    if (c.kind == ArcKind::Circle) continue;
    Rational diff = r - (at_start ? c.start : c.end);
    if (diff.get_den() != 1) continue;
    std::int64_t n = diff.get_num().get_si();
    if (c.window + n * d == k) return Located{i, n};
  }
  return std::nullopt;
}

enum class Search {
  ForwardFromStart,  // first return to the entry level
  BackwardFromEnd,   // first return to the exit level
};

std::optional<BalancedPath> balanced_from(const PLCircleMap& f, const TransverseArc& arc,
                                          const PreimageClassification& cls, std::size_t start, Search how) {
  const ArcComponent& c = cls.components[start];
  const std::int64_t d = f.degree();
  const Rational shift(c.window);
  const bool negative = c.kind == ArcKind::Negative;
  BalancedPath path;
  path.start = start;
  if (how == Search::ForwardFromStart) {
    path.level = (negative ? arc.high() : arc.low()) + shift;
    Scan s = scan_for_level(f, c.start, path.level, +1);
    if (!s.hit) return std::nullopt;
    auto partner = component_at(cls, d, *s.hit, c.window, false);
    if (!partner) return std::nullopt;
    path.partner = partner->index;
    path.partner_shift = partner->shift;
    path.domain_begin = c.start;
    path.domain_end = *s.hit;
    path.min_lift = s.min;
    path.max_lift = s.max;
  } else {
    path.level = (negative ? arc.low() : arc.high()) + shift;
    Scan s = scan_for_level(f, c.end, path.level, -1);
    if (!s.hit) return std::nullopt;
    auto partner = component_at(cls, d, *s.hit, c.window, true);
    if (!partner) return std::nullopt;
    path.partner = partner->index;
    path.partner_shift = partner->shift;
    path.domain_begin = *s.hit;
    path.domain_end = c.end;
    path.min_lift = s.min;
    path.max_lift = s.max;
  }
  const ArcKind want = negative ? ArcKind::Positive : ArcKind::Negative;
  if (cls.components[path.partner].kind != want) return std::nullopt;

  for (std::size_t i = 0; i < cls.components.size(); ++i) {
    const ArcComponent& o = cls.components[i];
    if (o.kind != ArcKind::Positive && o.kind != ArcKind::Negative) continue;
    for (std::int64_t n = ceil_int(path.domain_begin - o.start); Rational(o.end + n) <= path.domain_end; ++n) {
      if (i == start && n == 0) continue;
      if (i == path.partner && n == path.partner_shift) continue;
      (o.kind == ArcKind::Positive ? path.positive_passed : path.negative_passed) += 1;
    }
  }
  path.closed = f.lift_evaluate(path.domain_begin) == f.lift_evaluate(path.domain_end);
  path.one_sided = path.min_lift == path.level || path.max_lift == path.level;
  path.classification = cls;
  return path;
}

}  // namespace

BalancedPath find_balanced_path(const PLCircleMap& f, const TransverseArc& arc, std::size_t start) {
  PreimageClassification cls = classify_preimage(f, arc);
  if (start >= cls.components.size()) {
    throw Error(ErrorKind::BadParameter, "no preimage component with index " + std::to_string(start));
  }
  const ArcKind kind = cls.components[start].kind;
  if (kind != ArcKind::Positive && kind != ArcKind::Negative) {
    throw Error(ErrorKind::BadParameter, "start component must be a positive or negative arc");
  }
  const std::int64_t opposite = kind == ArcKind::Positive ? cls.negative : cls.positive;
  if (opposite == 0) {
    throw Error(ErrorKind::NoOppositeArc,
                std::string("preimage has no ") + (kind == ArcKind::Positive ? "negative" : "positive") + " arcs");
  }
  for (Search how : {Search::ForwardFromStart, Search::BackwardFromEnd}) {
    if (auto p = balanced_from(f, arc, cls, start, how)) return *p;
  }
  throw Error(ErrorKind::NoOppositeArc, "no balanced path starts at component " + std::to_string(start) +
                                            "; start from an arc whose sign opposes the degree");
}

bool component_meets_level(const PLCircleMap& f, const ArcComponent& c, const Rational& level) {
  const Rational target = level + Rational(c.window);
  Rational lo = f.lift_evaluate(c.start), hi = lo;
  auto include = [&](const Rational& u) {
    Rational v = f.lift_evaluate(u);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };
  include(c.end);
  for (std::size_t i = 0; i < f.segment_count(); ++i) {
    for (std::int64_t n = floor_int(c.start) - 1; Rational(f.vertex_x(i) + n) <= c.end; ++n) {
      Rational v = f.vertex_x(i) + Rational(n);
      if (v > c.start) include(v);
    }
  }
  return lo <= target && target <= hi;
}

namespace {

UnfoldResult eliminate_one_side(const PLCircleMap& f, const TransverseArc& j0, bool plain, ArcSide side) {
  UnfoldResult out{j0, {}};
  PreimageClassification cls = classify_preimage(f, j0);
  TransverseArc arc = j0;
  for (;;) {
    UnfoldStep step{arc, cls.positive, cls.negative, std::nullopt, std::nullopt, std::nullopt};
    if (cls.negative == 0) {
      out.trace.push_back(step);
      break;
    }
    const std::size_t neg = cls.indices_of(ArcKind::Negative).front();
    const bool bottom = plain || side == ArcSide::Low;
    auto path = balanced_from(f, arc, cls, neg, bottom ? Search::ForwardFromStart : Search::BackwardFromEnd);
    if (!path) throw std::logic_error("no balanced path from a negative arc of a non-negative degree map");
    const Rational shift(cls.components[neg].window);
    TransverseArc next = arc;
    if (bottom) {
      Rational rel = path->min_lift - shift;
      next = TransverseArc((rel + next_fold_level_below(f, rel)) / 2, arc.high());
    } else {
      Rational rel = path->max_lift - shift;
      next = TransverseArc(arc.low(), (rel + next_fold_level_above(f, rel)) / 2);
    }
    step.witness_start = cls.components[neg].start;
    step.witness_partner_end = path->domain_end;
    step.extended = bottom ? ArcSide::Low : ArcSide::High;
    out.trace.push_back(step);

    PreimageClassification next_cls = classify_preimage(f, next);
    if (next_cls.negative >= cls.negative) {
      throw std::logic_error("negative arc count did not decrease");
    }
    arc = next;
    cls = std::move(next_cls);
  }
  out.arc = arc;
  return out;
}

}  // namespace

UnfoldResult eliminate_negative_arcs(const PLCircleMap& f, const TransverseArc& j0, const UnfoldOptions& options) {
  if (f.degree() < 0) {
    throw Error(ErrorKind::PreconditionUnmet, "degree must be non-negative; reverse the target orientation first");
  }
  switch (options.mode) {
    case UnfoldMode::Plain: return eliminate_one_side(f, j0, true, ArcSide::Low);
    case UnfoldMode::OpenSubset: return eliminate_one_side(f, j0, false, options.side);
    case UnfoldMode::RegularValue: break;
  }
  if (!options.z) throw Error(ErrorKind::BadParameter, "regular-value mode needs a value z");
  const Rational& z = *options.z;
  if (!(j0.low() < z && z < j0.high())) {
    throw Error(ErrorKind::BadParameter, "z = " + to_string(z) + " must lie strictly inside the arc");
  }
  if (!f.is_regular_value(Angle(z))) {
    throw Error(ErrorKind::EndpointNotRegular, "z = " + to_string(z) + " is a fold value");
  }
  UnfoldResult first = eliminate_one_side(f, j0, true, ArcSide::Low);
  const Rational a = first.arc.low();
  const Rational b = first.arc.high();
  UnfoldResult upper = eliminate_one_side(f, TransverseArc(z, b), false, ArcSide::High);
  UnfoldResult lower = eliminate_one_side(f, TransverseArc(a, z), false, ArcSide::Low);
  TransverseArc final_arc(lower.arc.low(), upper.arc.high());
  UnfoldResult out{final_arc, first.trace};
  if (!(final_arc == first.arc)) {
    PreimageClassification cls = classify_preimage(f, final_arc);
    out.trace.back().extended = std::nullopt;
    out.trace.push_back({final_arc, cls.positive, cls.negative, std::nullopt, std::nullopt, std::nullopt});
  }
  return out;
}

Lemma4Report lemma4_verify(const PLCircleMap& f, const TransverseArc& arc, const DoublePointCurve& curve) {
  PreimageClassification cls = classify_preimage(f, arc);
  const std::int64_t d = f.degree();
  if (d < 0 || cls.negative != 0 || cls.positive != d) {
    throw Error(ErrorKind::PreconditionUnmet,
                "arc preimage has " + std::to_string(cls.positive) + " positive and " +
                    std::to_string(cls.negative) + " negative arcs; need exactly deg = " + std::to_string(d) +
                    " positive and none negative");
  }
  Lemma4Report r;
  for (std::size_t i : cls.indices_of(ArcKind::Positive)) r.endpoints.push_back(frac(cls.components[i].end));
  std::vector<std::int64_t> counts(curve.components.size(), 0);
  for (std::size_t i = 1; i < r.endpoints.size(); ++i) {
    auto c = component_of(curve, r.endpoints[0], r.endpoints[i]);
    if (!c) throw std::logic_error("positive-arc endpoint pair is not a double point");
    ++counts[*c];
  }
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    const std::int64_t p1 = curve.components[c].p1_degree;
    r.entries.push_back({c, p1, counts[c], p1 == counts[c]});
    r.all_equal = r.all_equal && p1 == counts[c];
  }
  return r;
}

}  // namespace dpl
