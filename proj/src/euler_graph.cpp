#include "dpl/euler_graph.hpp"

#include "dpl/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>

namespace dpl {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

EulerGraph::EulerGraph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
                       std::size_t free_circles)
    : vertices_(vertices),
      edges_(std::move(edges)),
      free_circles_(free_circles),
      in_(vertices, {kNone, kNone}),
      out_(vertices, {kNone, kNone}) {
  auto attach = [](std::pair<std::size_t, std::size_t>& slot, std::size_t e) {
    if (slot.first == kNone) {
      slot.first = e;
    } else if (slot.second == kNone) {
      slot.second = e;
    } else {
      return false;
    }
    return true;
  };
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [from, to] = edges_[e];
    if (from >= vertices_ || to >= vertices_) {
      throw Error(ErrorKind::BadParameter, "edge " + std::to_string(e) + " references a missing vertex");
    }
    if (!attach(out_[from], e) || !attach(in_[to], e)) {
      throw Error(ErrorKind::BadParameter, "vertex degree exceeds 2 at edge " + std::to_string(e));
    }
  }
  for (std::size_t v = 0; v < vertices_; ++v) {
    if (in_[v].second == kNone || out_[v].second == kNone) {
      throw Error(ErrorKind::BadParameter, "vertex " + std::to_string(v) + " needs in-degree 2 and out-degree 2");
    }
  }
}

std::vector<std::vector<std::size_t>> EulerGraph::components() const {
  std::vector<std::size_t> parent(vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [a, b] : edges_) parent[find(a)] = find(b);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(vertices_, kNone);
  for (std::size_t v = 0; v < vertices_; ++v) {
    std::size_t r = find(v);
    if (slot[r] == kNone) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

namespace {

std::size_t successor(const EulerGraph& g, std::size_t e, const Resolution& choice) {
  const std::size_t v = g.edges()[e].second;
  const bool first_in = g.in_edges(v).first == e;
  const bool cross = choice[v];
  const auto& out = g.out_edges(v);
  return first_in != cross ? out.first : out.second;
}

}  // namespace

std::size_t count_circuits(const EulerGraph& g, const std::vector<std::size_t>& component, const Resolution& choice) {
  if (component.empty()) return 1;
  std::vector<bool> member(g.vertex_count(), false);
  for (std::size_t v : component) member[v] = true;
  std::vector<bool> seen(g.edges().size(), false);
  std::size_t circuits = 0;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (seen[e] || !member[g.edges()[e].first]) continue;
    ++circuits;
    for (std::size_t c = e; !seen[c]; c = successor(g, c, choice)) seen[c] = true;
  }
  return circuits;
}

Resolution eulerian_resolution(const EulerGraph& g, const std::vector<std::size_t>& component) {
  Resolution choice(g.vertex_count(), false);
  if (component.empty()) return choice;
  // Hierholzer with an explicit stack of edges.
  std::vector<std::size_t> next_out(g.vertex_count(), 0);
  auto take = [&](std::size_t v) {
    const auto& o = g.out_edges(v);
    std::size_t k = next_out[v]++;
    return k == 0 ? o.first : k == 1 ? o.second : kNone;
  };
  std::vector<std::size_t> circuit;  // edges, reversed
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, edge used to reach it)
  stack.emplace_back(component.front(), kNone);
  while (!stack.empty()) {
    const std::size_t v = stack.back().first;
    const std::size_t e = take(v);
    if (e != kNone) {
      stack.emplace_back(g.edges()[e].second, e);
    } else {
      if (stack.back().second != kNone) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  for (std::size_t t = 0; t < circuit.size(); ++t) {
    const std::size_t in = circuit[t];
    const std::size_t out = circuit[(t + 1) % circuit.size()];
    const std::size_t v = g.edges()[in].second;
    if (g.in_edges(v).first == in) choice[v] = g.out_edges(v).second == out;
  }
  return choice;
}

std::vector<Resolution> brute_force_single_circuit(const EulerGraph& g, const std::vector<std::size_t>& component) {
  std::vector<Resolution> out;
  const std::size_t k = component.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Resolution choice(g.vertex_count(), false);
    for (std::size_t i = 0; i < k; ++i) choice[component[i]] = (mask >> i) & 1;
    if (count_circuits(g, component, choice) == 1) out.push_back(std::move(choice));
  }
  return out;
}

std::vector<EulerGraph> all_euler_graphs(std::size_t n) {
  std::vector<EulerGraph> out;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  std::vector<int> col(n, 0);
  // Fill row r from column c with `left` units still owed by the row.
  std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t r, std::size_t c, int left) {
    if (r == n) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (int k = 0; k < m[i][j]; ++k) edges.emplace_back(i, j);
        }
      }
      out.emplace_back(n, std::move(edges));
      return;
    }
    if (c == n) {
      if (left == 0) fill(r + 1, 0, 2);
      return;
    }
    for (int a = 0; a <= std::min(left, 2 - col[c]); ++a) {
      m[r][c] = a;
      col[c] += a;
      fill(r, c + 1, left - a);
      col[c] -= a;
    }
    m[r][c] = 0;
  };
  fill(0, 0, 2);
  return out;
}

EulerGraph random_euler_graph(std::uint64_t seed, std::size_t vertices) {
  std::mt19937_64 engine(seed ^ 0x94d049bb133111ebULL);
  std::vector<std::size_t> heads;
  for (std::size_t v = 0; v < vertices; ++v) heads.insert(heads.end(), {v, v});
  for (std::size_t i = heads.size(); i > 1; --i) std::swap(heads[i - 1], heads[engine() % i]);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < heads.size(); ++i) edges.emplace_back(i / 2, heads[i]);
  return EulerGraph(vertices, std::move(edges));
}

}  // namespace dpl
