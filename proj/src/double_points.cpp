#include "dpl/double_points.hpp"

#include "dpl/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpl {

namespace {

std::int64_t as_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1) {
    throw std::logic_error(std::string("non-integral ") + what + ": " + to_string(r));
  }
  return r.get_num().get_si();
}

struct Builder {
  const PLCircleMap& f;
  DoublePointCurve& out;
  std::map<std::pair<Rational, Rational>, std::size_t> node_of;

  std::size_t node_at(const Rational& u, const Rational& v) {
    std::pair<Rational, Rational> key{frac(u), frac(v)};
    auto it = node_of.find(key);
    if (it != node_of.end()) return it->second;
    SigmaNode n;
    n.x = key.first;
    n.y = key.second;
    n.diagonal = n.x == n.y;
    out.nodes.push_back(std::move(n));
    node_of.emplace(key, out.nodes.size() - 1);
    return out.nodes.size() - 1;
  }

  void add_edges() {
    const std::size_t m = f.segment_count();
    for (std::size_t i = 0; i < m; ++i) {
      const Rational ai = std::min(f.vertex_lift(i), f.vertex_lift(i + 1));
      const Rational bi = std::max(f.vertex_lift(i), f.vertex_lift(i + 1));
      for (std::size_t j = 0; j < m; ++j) {
        const Rational aj = std::min(f.vertex_lift(j), f.vertex_lift(j + 1));
        const Rational bj = std::max(f.vertex_lift(j), f.vertex_lift(j + 1));
        for (std::int64_t k = ceil_int(ai - bj); k <= floor_int(bi - aj); ++k) {
          if (i == j && k == 0) continue;
          const Rational shift(k);
          const Rational lo = std::max(ai, Rational(aj + shift));
          const Rational hi = std::min(bi, Rational(bj + shift));
          if (!(lo < hi)) continue;
          SigmaEdge e;
          e.segment_x = i;
          e.segment_y = j;
          e.shift = k;
          e.w0 = lo;
          e.w1 = hi;
          e.u0 = f.segment_preimage(i, lo);
          e.u1 = f.segment_preimage(i, hi);
          e.v0 = f.segment_preimage(j, lo - shift);
          e.v1 = f.segment_preimage(j, hi - shift);
          e.orientation = f.slope_sign(i) * f.slope_sign(j);
          e.node0 = node_at(e.u0, e.v0);
          e.node1 = node_at(e.u1, e.v1);
          out.edges.push_back(std::move(e));
          const std::size_t id = out.edges.size() - 1;
          out.edge_index.emplace(std::make_tuple(i, j, k), id);
          out.nodes[out.edges[id].node0].edges.push_back(id);
          out.nodes[out.edges[id].node1].edges.push_back(id);
        }
      }
    }
    for (const SigmaNode& n : out.nodes) {
      if (n.edges.size() != 2) {
        throw std::logic_error("double-point node of degree " + std::to_string(n.edges.size()) + " at (" +
                               to_string(n.x) + ", " + to_string(n.y) + ")");
      }
    }
  }

  // Node reached by leaving `node` along edge e, and the traversal direction.
  std::pair<std::size_t, int> across(std::size_t e, std::size_t node) const {
    const SigmaEdge& s = out.edges[e];
    if (s.node0 == node) return {s.node1, 1};
    return {s.node0, -1};
  }

  std::size_t other_edge(std::size_t node, std::size_t e) const {
    const auto& es = out.nodes[node].edges;
    return es[0] == e ? es[1] : es[0];
  }

  void trace(std::size_t start_node, std::size_t first_edge, bool compact, std::vector<bool>& visited) {
    SigmaComponent c;
    c.compact = compact;
    c.nodes.push_back(start_node);
    std::size_t cur = start_node;
    std::size_t e = first_edge;
    for (;;) {
      visited[e] = true;
      auto [next, dir] = across(e, cur);
      c.edges.push_back(e);
      c.directions.push_back(dir);
      if (compact ? next == start_node : out.nodes[next].diagonal) {
        if (!compact) c.nodes.push_back(next);
        break;
      }
      c.nodes.push_back(next);
      e = other_edge(next, e);
      cur = next;
    }
    out.components.push_back(std::move(c));
  }

  void trace_components() {
    std::vector<bool> visited(out.edges.size(), false);
    for (std::size_t n = 0; n < out.nodes.size(); ++n) {
      if (!out.nodes[n].diagonal) continue;
      for (std::size_t e : out.nodes[n].edges) {
        if (!visited[e]) trace(n, e, false, visited);
      }
    }
    for (std::size_t e = 0; e < out.edges.size(); ++e) {
      if (!visited[e]) trace(out.edges[e].node0, e, true, visited);
    }
  }

  std::optional<std::size_t> fold_vertex_at(const Rational& x) const {
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
      if (f.vertex_x(i) == x) return i;
    }
    return std::nullopt;
  }

  void measure() {
    for (std::size_t ci = 0; ci < out.components.size(); ++ci) {
      SigmaComponent& c = out.components[ci];
      const int sigma = c.directions[0] * out.edges[c.edges[0]].orientation;
      Rational du = 0, dv = 0, dw = 0, wmin = 0, wmax = 0;
      for (std::size_t t = 0; t < c.edges.size(); ++t) {
        SigmaEdge& e = out.edges[c.edges[t]];
        e.component = ci;
        const int dir = c.directions[t];
        if (dir * e.orientation != sigma) {
          throw std::logic_error("inconsistent orientation along a double-point component");
        }
        du += dir * (e.u1 - e.u0);
        dv += dir * (e.v1 - e.v0);
        dw += dir * (e.w1 - e.w0);
        wmin = std::min(wmin, dw);
        wmax = std::max(wmax, dw);
      }
      c.image_span = wmax - wmin;
      if (c.compact) {
        c.p1_degree = sigma * as_integer(du, "p1 degree");
        c.p2_degree = sigma * as_integer(dv, "p2 degree");
        c.target_winding = sigma * as_integer(dw, "target winding");
      } else {
        c.end_folds[0] = fold_vertex_at(out.nodes[c.nodes.front()].x);
        c.end_folds[1] = fold_vertex_at(out.nodes[c.nodes.back()].x);
      }
    }
    for (SigmaComponent& c : out.components) {
      const SigmaEdge& e = out.edges[c.edges[0]];
      c.tau = out.edges[out.edge_index.at(std::make_tuple(e.segment_y, e.segment_x, -e.shift))].component;
    }
  }

  void quotients() {
    for (std::size_t c = 0; c < out.components.size(); ++c) {
      const SigmaComponent& comp = out.components[c];
      if (comp.tau < c) continue;
      QuotientComponent q;
      q.members.push_back(c);
      if (comp.tau != c) q.members.push_back(comp.tau);
      q.compact = comp.compact;
      q.cover_trivial = comp.tau != c;
      q.maps_through_arc = comp.target_winding == 0 && comp.image_span < 1;
      out.quotients.push_back(std::move(q));
    }
  }

  // Orientation sign of component c relative to its stored traversal.
  int traversal_sign(std::size_t c) const {
    const SigmaComponent& comp = out.components[c];
    return comp.directions[0] * out.edges[comp.edges[0]].orientation;
  }

  void closures() {
    std::vector<bool> seen(out.components.size(), false);
    for (std::size_t c = 0; c < out.components.size(); ++c) {
      if (seen[c]) continue;
      ClosureComponent cl;
      if (out.components[c].compact) {
        seen[c] = true;
        cl.members.push_back(c);
        out.closures.push_back(std::move(cl));
        continue;
      }
      // Walk the cycle of arcs glued at diagonal nodes.
      const int first_sign = traversal_sign(c);
      int sign = first_sign;
      std::size_t arc = c;
      std::size_t node = out.components[c].nodes.back();
      std::size_t in_edge = out.components[c].edges.back();
      seen[c] = true;
      cl.members.push_back(c);
      for (;;) {
        ++cl.diagonal_crossings;
        const std::size_t next_edge = other_edge(node, in_edge);
        const std::size_t next = out.edges[next_edge].component;
        const SigmaComponent& nc = out.components[next];
        const bool forward = nc.edges.front() == next_edge && nc.nodes.front() == node;
        const int next_sign = forward ? traversal_sign(next) : -traversal_sign(next);
        if (next_sign != sign) ++cl.orientation_reversals;
        if (next == c && forward) break;  // back at the starting end
        if (!seen[next]) {
          seen[next] = true;
          cl.members.push_back(next);
        }
        sign = next_sign;
        arc = next;
        node = forward ? nc.nodes.back() : nc.nodes.front();
        in_edge = forward ? nc.edges.back() : nc.edges.front();
      }
      (void)arc;
      (void)first_sign;
      cl.orientable = cl.orientation_reversals % 2 == 0;
      out.closures.push_back(std::move(cl));
    }
  }
};

}  // namespace

DoublePointCurve sigma(const PLCircleMap& f) {
  DoublePointCurve out{f, {}, {}, {}, {}, {}, {}};
  Builder b{f, out, {}};
  b.add_edges();
  b.trace_components();
  b.measure();
  b.quotients();
  b.closures();
  return out;
}

std::int64_t projection_degree(const DoublePointCurve& curve, std::size_t component, int factor) {
  if (factor != 1 && factor != 2) throw Error(ErrorKind::BadParameter, "projection factor must be 1 or 2");
  const SigmaComponent& c = curve.components.at(component);
  return factor == 1 ? c.p1_degree : c.p2_degree;
}

std::optional<std::size_t> component_of(const DoublePointCurve& curve, const Rational& x, const Rational& y) {
  if (frac(x) == frac(y)) return std::nullopt;
  const PLCircleMap& f = curve.map;
  std::int64_t nx = 0, ny = 0;
  const std::size_t i = f.locate(x, &nx);
  const std::size_t j = f.locate(y, &ny);
  const Rational diff = f.segment_lift(i, x - Rational(nx)) - f.segment_lift(j, y - Rational(ny));
  if (diff.get_den() != 1) return std::nullopt;
  auto it = curve.edge_index.find(std::make_tuple(i, j, diff.get_num().get_si()));
  if (it == curve.edge_index.end()) return std::nullopt;
  return curve.edges[it->second].component;
}

RealizabilityReport realizability_report(const DoublePointCurve& curve) {
  RealizabilityReport r;
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    const SigmaComponent& comp = curve.components[c];
    if (comp.compact && comp.tau == c && comp.p1_degree % 2 != 0) {
      r.criterion_pass = false;
      r.witness = c;
      break;
    }
  }
  const std::int64_t d = curve.map.degree();
  r.classical_pass = d > 1 || d < -1;
  r.agreement = r.criterion_pass == r.classical_pass;
  if (!r.agreement) {
    if (r.criterion_pass) {
      r.notes = "dimension-1 exception: no tau-invariant component has odd projection degree, yet a degree " +
                std::to_string(d) + " circle map is classically not realizable in the plane";
    } else {
      r.notes = "dimension-1 exception: component " + std::to_string(*r.witness) +
                " is tau-invariant with odd projection degree, yet a degree " + std::to_string(d) +
                " circle map is classically realizable in the plane";
    }
  }
  return r;
}

int hopf_invariant(const DoublePointCurve& curve) {
  int parity = 0;
  for (const QuotientComponent& q : curve.quotients) {
    if (q.compact && !q.cover_trivial) parity ^= 1;
  }
  return parity;
}

std::vector<ControlledBit> controlled_hopf(const DoublePointCurve& curve) {
  std::vector<ControlledBit> out;
  for (std::size_t q = 0; q < curve.quotients.size(); ++q) {
    if (curve.quotients[q].compact) out.push_back({q, curve.quotients[q].cover_trivial ? 0 : 1});
  }
  return out;
}

bool closure_orientability(const DoublePointCurve& curve, std::size_t closure) {
  return curve.closures.at(closure).orientable;
}

Proposition4Report proposition4_check(const DoublePointCurve& curve) {
  Proposition4Report r;
  for (std::size_t q = 0; q < curve.quotients.size(); ++q) {
    const QuotientComponent& qc = curve.quotients[q];
    r.entries.push_back({q, qc.maps_through_arc, qc.cover_trivial, qc.compact});
    if (qc.compact && qc.maps_through_arc && !qc.cover_trivial) r.violation = true;
  }
  return r;
}

}  // namespace dpl
