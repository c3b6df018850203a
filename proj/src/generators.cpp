#include "parcut/generators.hpp"

#include <algorithm>
#include <numeric>

#include "parcut/errors.hpp"

namespace parcut::gen {

namespace {

Weight draw_weight(Weight wmin, Weight wmax, Engine& eng) {
  if (wmin >= wmax) return wmin;
  return wmin + eng() % (wmax - wmin + 1);
}

Vertex draw_vertex(std::size_t n, Engine& eng) { return static_cast<Vertex>(eng() % n); }

void add_random_edges(WeightedGraph& g, std::size_t count, Weight wmin, Weight wmax, Engine& eng) {
  const std::size_t n = g.num_vertices();
  if (n < 2) return;
  for (std::size_t i = 0; i < count; ++i) {
    Vertex u = draw_vertex(n, eng);
    Vertex v = draw_vertex(n - 1, eng);
    if (v >= u) ++v;
    g.add_edge(u, v, draw_weight(wmin, wmax, eng));
  }
}

}  // namespace

WeightedGraph random_connected(std::size_t n, std::size_t m, Weight wmin, Weight wmax, Engine& eng) {
  WeightedGraph g(n);
  if (n < 2) return g;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), eng);
  for (std::size_t i = 1; i < n; ++i) {
    g.add_edge(perm[i], perm[eng() % i], draw_weight(wmin, wmax, eng));
  }
  if (m > n - 1) add_random_edges(g, m - (n - 1), wmin, wmax, eng);
  return g;
}

WeightedGraph gnm(std::size_t n, std::size_t m, Weight wmin, Weight wmax, Engine& eng) {
  WeightedGraph g(n);
  add_random_edges(g, m, wmin, wmax, eng);
  return g;
}

WeightedGraph cycle_with_chords(std::size_t n, std::size_t chords, Weight wmin, Weight wmax, Engine& eng) {
  WeightedGraph g(n);
  for (Vertex v = 0; v < n && n >= 2; ++v) {
    if (n == 2 && v == 1) break;
    g.add_edge(v, static_cast<Vertex>((v + 1) % n), draw_weight(wmin, wmax, eng));
  }
  add_random_edges(g, chords, wmin, wmax, eng);
  return g;
}

WeightedGraph two_clique_bridge(std::size_t k, Weight clique_w, Weight bridge) {
  WeightedGraph g(2 * k);
  for (std::size_t side = 0; side < 2; ++side) {
    const Vertex base = static_cast<Vertex>(side * k);
    for (Vertex a = 0; a < k; ++a) {
      for (Vertex b = a + 1; b < k; ++b) g.add_edge(base + a, base + b, clique_w);
    }
  }
  if (k > 0) g.add_edge(0, static_cast<Vertex>(k), bridge);
  return g;
}

WeightedGraph grid(std::size_t rows, std::size_t cols, Weight w) {
  WeightedGraph g(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Vertex v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) g.add_edge(v, v + 1, w);
      if (r + 1 < rows) g.add_edge(v, static_cast<Vertex>(v + cols), w);
    }
  }
  return g;
}

WeightedGraph circulant(std::size_t n, std::size_t k, Weight w) {
  if (2 * k >= n) throw ParameterError("circulant offsets must stay below n/2");
  WeightedGraph g(n);
  for (std::size_t d = 1; d <= k; ++d) {
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + d) % n), w);
  }
  return g;
}

WeightedGraph cycle(std::size_t n, Weight w) {
  WeightedGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n), w);
  return g;
}

WeightedGraph path(std::size_t n, Weight w) {
  WeightedGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, w);
  return g;
}

WeightedGraph star(std::size_t leaves, Weight w) {
  WeightedGraph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v, w);
  return g;
}

RootedTree random_tree(std::size_t n, Engine& eng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin() + 1, perm.end(), eng);
  std::vector<Vertex> parent(n, kNoVertex);
  for (std::size_t i = 1; i < n; ++i) parent[perm[i]] = perm[eng() % i];
  return RootedTree::from_parents(std::move(parent), 0);
}

RootedTree random_spanning_tree(const WeightedGraph& g, Engine& eng) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::shuffle(order.begin(), order.end(), eng);
  UnionFind uf(g.num_vertices());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (EdgeId e : order) {
    if (uf.unite(g.edge(e).u, g.edge(e).v)) edges.push_back({g.edge(e).u, g.edge(e).v});
  }
  return RootedTree::from_edges(g.num_vertices(), edges, 0);
}

}  // namespace parcut::gen
