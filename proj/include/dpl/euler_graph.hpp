#ifndef DPL_EULER_GRAPH_HPP
#define DPL_EULER_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace dpl {

/// Directed multigraph in which every vertex has in-degree 2 and out-degree 2.
/// Loops and parallel edges are allowed.  `free_circles` counts components
/// without vertices (plain circles).
class EulerGraph {
 public:
  /// Throws BadParameter unless every vertex has in- and out-degree 2.
  EulerGraph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges, std::size_t free_circles = 0);

  std::size_t vertex_count() const { return vertices_; }
  std::size_t free_circles() const { return free_circles_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// The two incoming (outgoing) edge ids at v, in edge-id order.
  const std::pair<std::size_t, std::size_t>& in_edges(std::size_t v) const { return in_[v]; }
  const std::pair<std::size_t, std::size_t>& out_edges(std::size_t v) const { return out_[v]; }

  /// Weakly connected components among vertices, as vertex lists.
  std::vector<std::vector<std::size_t>> components() const;

 private:
  std::size_t vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::size_t free_circles_;
  std::vector<std::pair<std::size_t, std::size_t>> in_, out_;
};

/// Per-vertex choice: false pairs in-edge 0 with out-edge 0, true pairs in-edge 0 with out-edge 1.
using Resolution = std::vector<bool>;

/// Number of directed circuits the edges of `component` (vertex list) split
/// into under `choice` (indexed by vertex id).
std::size_t count_circuits(const EulerGraph& g, const std::vector<std::size_t>& component, const Resolution& choice);

/// Resolution under which `component` becomes a single circuit, read off a
/// Hierholzer Eulerian circuit.  An empty component gives an empty choice.
Resolution eulerian_resolution(const EulerGraph& g, const std::vector<std::size_t>& component);

/// All choices on the component's vertices (others false) yielding one circuit.
std::vector<Resolution> brute_force_single_circuit(const EulerGraph& g, const std::vector<std::size_t>& component);

/// Every graph on `vertices` labelled vertices up to edge numbering: one per
/// non-negative integer matrix with all row and column sums 2.
std::vector<EulerGraph> all_euler_graphs(std::size_t vertices);

/// Random graph from a uniform matching of out-stubs to in-stubs.
EulerGraph random_euler_graph(std::uint64_t seed, std::size_t vertices);

}  // namespace dpl

#endif  // DPL_EULER_GRAPH_HPP
