#pragma once

#include <cstddef>

#include "parcut/graph.hpp"
#include "parcut/rng.hpp"
#include "parcut/tree_decomp.hpp"

namespace parcut::gen {

// Uniform random spanning tree skeleton plus extra uniform random edges;
// weights uniform in [wmin, wmax]. Always connected.
WeightedGraph random_connected(std::size_t n, std::size_t m, Weight wmin, Weight wmax, Engine& eng);

// G(n, m) with uniform weights; may be disconnected.
WeightedGraph gnm(std::size_t n, std::size_t m, Weight wmin, Weight wmax, Engine& eng);

WeightedGraph cycle_with_chords(std::size_t n, std::size_t chords, Weight wmin, Weight wmax, Engine& eng);

// Two cliques on k vertices each, joined by one edge of weight bridge.
WeightedGraph two_clique_bridge(std::size_t k, Weight clique_w, Weight bridge);

WeightedGraph grid(std::size_t rows, std::size_t cols, Weight w);

// Vertex i joined to i+1, ..., i+k (mod n), all with weight w.
WeightedGraph circulant(std::size_t n, std::size_t k, Weight w);

WeightedGraph cycle(std::size_t n, Weight w = 1);
WeightedGraph path(std::size_t n, Weight w = 1);
WeightedGraph star(std::size_t leaves, Weight w = 1);

// Random labeled tree on n vertices rooted at 0.
RootedTree random_tree(std::size_t n, Engine& eng);

// Spanning tree of g from Kruskal under random edge priorities, rooted at 0.
RootedTree random_spanning_tree(const WeightedGraph& g, Engine& eng);

}  // namespace parcut::gen
