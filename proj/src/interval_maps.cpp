#include "dpl/interval_maps.hpp"

#include "dpl/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace dpl {

IntervalMap IntervalMap::make(std::vector<Breakpoint> v) {
  if (v.size() < 2) throw Error(ErrorKind::NonIncreasingDomain, "an interval map needs at least two vertices");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i - 1].x < v[i].x)) {
      throw Error(ErrorKind::NonIncreasingDomain, "vertices not strictly increasing at index " + std::to_string(i));
    }
    if (v[i - 1].lift == v[i].lift) {
      throw Error(ErrorKind::ZeroSlopeSegment, "segment " + std::to_string(i - 1) + " has zero slope");
    }
  }
  if (v.front().x != 0 || v.back().x != 1 || v.front().lift != 0 || v.back().lift != 1) {
    throw Error(ErrorKind::BadParameter, "interval maps must run from (0,0) to (1,1)");
  }
  for (const Breakpoint& b : v) {
    if (b.lift < 0 || b.lift > 1) {
      throw Error(ErrorKind::BadParameter, "value " + to_string(b.lift) + " leaves [0,1]");
    }
  }
  IntervalMap f;
  f.vertices_.push_back(v.front());
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (sgn(v[i].lift - v[i - 1].lift) != sgn(v[i + 1].lift - v[i].lift)) f.vertices_.push_back(v[i]);
  }
  f.vertices_.push_back(v.back());
  return f;
}

Rational IntervalMap::value_at(const Rational& x) const {
  auto it = std::upper_bound(vertices_.begin(), vertices_.end(), x,
                             [](const Rational& t, const Breakpoint& b) { return t < b.x; });
  if (it == vertices_.end()) return vertices_.back().lift;
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  return lo.lift + (hi.lift - lo.lift) * (x - lo.x) / (hi.x - lo.x);
}

bool IntervalMap::boundary_folds() const {
  for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i].lift == 0 || vertices_[i].lift == 1) return true;
  }
  return false;
}

IntervalMapPair make_pair(IntervalMap first, IntervalMap second) {
  std::set<Rational> seen;
  for (const IntervalMap* f : {&first, &second}) {
    const auto& v = f->vertices();
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      if (!seen.insert(v[i].lift).second) {
        throw Error(ErrorKind::DuplicateVertexValue, "interior vertex value " + to_string(v[i].lift) + " repeats");
      }
    }
  }
  return {std::move(first), std::move(second)};
}

namespace {

const Rational kCollar(1, 4);

// Vertex list, optionally extended by identity collars on [-c,0] and [1,1+c].
std::vector<Breakpoint> extended(const IntervalMap& f, bool collar) {
  std::vector<Breakpoint> v = f.vertices();
  if (collar) {
    v.insert(v.begin(), Breakpoint{-kCollar, -kCollar});
    v.push_back({1 + kCollar, 1 + kCollar});
  }
  return v;
}

Rational preimage(const Breakpoint& a, const Breakpoint& b, const Rational& w) {
  return a.x + (w - a.lift) * (b.x - a.x) / (b.lift - a.lift);
}

}  // namespace

Lemma1Report lemma1_check(const IntervalMapPair& pair) {
  Lemma1Report r;
  r.collar_applied = pair.first.boundary_folds() || pair.second.boundary_folds();
  const auto f = extended(pair.first, r.collar_applied);
  const auto g = extended(pair.second, r.collar_applied);

  std::map<TorusPoint, std::size_t> node_of;
  std::vector<TorusPoint> nodes;
  std::vector<std::vector<std::size_t>> incident;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto node = [&](const Rational& u, const Rational& v) {
    TorusPoint key{u, v};
    auto [it, fresh] = node_of.emplace(key, nodes.size());
    if (fresh) {
      nodes.push_back(key);
      incident.emplace_back();
    }
    return it->second;
  };
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const Rational ai = std::min(f[i].lift, f[i + 1].lift), bi = std::max(f[i].lift, f[i + 1].lift);
    for (std::size_t j = 0; j + 1 < g.size(); ++j) {
      const Rational aj = std::min(g[j].lift, g[j + 1].lift), bj = std::max(g[j].lift, g[j + 1].lift);
      const Rational lo = std::max(ai, aj), hi = std::min(bi, bj);
      if (!(lo < hi)) continue;
      std::size_t n0 = node(preimage(f[i], f[i + 1], lo), preimage(g[j], g[j + 1], lo));
      std::size_t n1 = node(preimage(f[i], f[i + 1], hi), preimage(g[j], g[j + 1], hi));
      edges.emplace_back(n0, n1);
      incident[n0].push_back(edges.size() - 1);
      incident[n1].push_back(edges.size() - 1);
    }
  }

  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  for (std::size_t n = 0; n < nodes.size(); ++n) r.component_count += find(n) == n;

  const TorusPoint start{f.front().x, g.front().x};
  const TorusPoint finish{f.back().x, g.back().x};
  auto it = node_of.find(start);
  if (it == node_of.end()) return r;
  std::vector<TorusPoint> path{start};
  std::size_t cur = it->second;
  std::size_t came = edges.size();
  for (;;) {
    std::size_t next_edge = edges.size();
    for (std::size_t e : incident[cur]) {
      if (e != came) {
        next_edge = e;
        break;
      }
    }
    if (next_edge == edges.size()) break;
    cur = edges[next_edge].first == cur ? edges[next_edge].second : edges[next_edge].first;
    came = next_edge;
    path.push_back(nodes[cur]);
    if (nodes[cur] == finish || nodes[cur] == start) break;
  }
  r.connected = path.back() == finish;
  if (r.collar_applied) {
    // Keep the part of the path inside the original square; it runs from (0,0) to (1,1).
    std::vector<TorusPoint> inside;
    for (const TorusPoint& p : path) {
      if (p.first >= 0 && p.first <= 1 && p.second >= 0 && p.second <= 1) inside.push_back(p);
    }
    path = std::move(inside);
  }
  r.witness = std::move(path);
  return r;
}

namespace {

IntervalMap random_zigzag(std::mt19937_64& engine, int max_fold_pairs, std::set<Rational>& used) {
  constexpr std::int64_t kPositions = 4096;
  constexpr std::int64_t kValues = 7919;
  for (;;) {
    const int k = static_cast<int>(engine() % static_cast<std::uint64_t>(max_fold_pairs + 1));
    std::set<std::int64_t> xs;
    while (static_cast<int>(xs.size()) < 2 * k) xs.insert(1 + static_cast<std::int64_t>(engine() % (kPositions - 1)));
    std::vector<Rational> values;
    for (int i = 0; i < 2 * k; ++i) {
      values.emplace_back(1 + static_cast<long>(engine() % (kValues - 1)), kValues);
      values.back().canonicalize();
    }
    bool ok = true;
    std::set<Rational> mine;
    for (int i = 0; i < 2 * k && ok; ++i) {
      const Rational prev = i == 0 ? Rational(0) : values[i - 1];
      ok = (i % 2 == 0 ? values[i] > prev : values[i] < prev) && !used.count(values[i]) && mine.insert(values[i]).second;
    }
    if (!ok) continue;
    std::vector<Breakpoint> v{{Rational(0), Rational(0)}};
    auto x = xs.begin();
    for (int i = 0; i < 2 * k; ++i, ++x) {
      Rational pos(static_cast<long>(*x), kPositions);
      pos.canonicalize();
      v.push_back({pos, values[i]});
    }
    v.push_back({Rational(1), Rational(1)});
    used.insert(mine.begin(), mine.end());
    return IntervalMap::make(std::move(v));
  }
}

}  // namespace

IntervalMapPair random_interval_pair(std::uint64_t seed, int max_fold_pairs) {
  if (max_fold_pairs < 0) throw Error(ErrorKind::InfeasibleParameters, "fold pair bound must be non-negative");
  std::mt19937_64 engine(seed ^ 0x2545f4914f6cdd1dULL);
  std::set<Rational> used;
  IntervalMap a = random_zigzag(engine, max_fold_pairs, used);
  IntervalMap b = random_zigzag(engine, max_fold_pairs, used);
  return make_pair(std::move(a), std::move(b));
}

}  // namespace dpl
