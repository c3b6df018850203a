#pragma once

#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "parcut/types.hpp"

namespace parcut {

struct Edge {
  Vertex u;
  Vertex v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph on dense vertex ids 0..n-1 with non-negative
// integer weights. An edge of weight w stands for w parallel unit copies.
// Self-loops are rejected and the total weight always fits in 64 bits.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n) : n_(n) {}
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  EdgeId add_edge(Vertex u, Vertex v, Weight w);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  Weight total_weight() const noexcept { return total_; }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  Weight total_ = 0;
};

WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(std::string_view text);
WeightedGraph read_graph_file(const std::string& path);

// Canonical text form: header line, then one `e` line per edge in id order.
std::string serialize_graph(const WeightedGraph& g);

Weight total_weight(const WeightedGraph& g);

std::vector<Weight> weighted_degrees(const WeightedGraph& g);

// Natural logarithm of n; every size-dependent constant goes through this.
double log_n(std::size_t n);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  Vertex find(Vertex x);
  bool unite(Vertex a, Vertex b);
  void reset();

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> rank_;
};

// Spanning forest with parent pointers. Each component is rooted at its
// smallest vertex; edge_of[v] is the graph edge realizing parent[v].
struct Forest {
  std::vector<Vertex> parent;
  std::vector<EdgeId> edge_of;
  std::vector<EdgeId> edges;  // ascending
  std::size_t components = 0;
};

// Edge ids of a spanning forest of the active subgraph, found by a
// union-find sweep in ascending edge-id order.
template <std::predicate<EdgeId> Active>
std::vector<EdgeId> spanning_forest_edges(const WeightedGraph& g, Active&& active,
                                          UnionFind& uf) {
  uf.reset();
  std::vector<EdgeId> out;
  const auto& edges = g.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (!active(e)) continue;
    if (uf.unite(edges[e].u, edges[e].v)) out.push_back(e);
  }
  return out;
}

Forest forest_from_edges(const WeightedGraph& g, const std::vector<EdgeId>& forest_edges);

template <std::predicate<EdgeId> Active>
Forest spanning_forest(const WeightedGraph& g, Active&& active) {
  UnionFind uf(g.num_vertices());
  return forest_from_edges(g, spanning_forest_edges(g, active, uf));
}

inline Forest spanning_forest(const WeightedGraph& g) {
  return spanning_forest(g, [](EdgeId) { return true; });
}

// Component label per vertex (label = smallest vertex of the component).
std::vector<Vertex> component_labels(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

// Total weight of edges with endpoints on different sides.
Weight cut_value(const WeightedGraph& g, const std::vector<bool>& side);

}  // namespace parcut
