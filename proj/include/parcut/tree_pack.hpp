#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "parcut/graph.hpp"
#include "parcut/rng.hpp"
#include "parcut/sparsify.hpp"
#include "parcut/tree_decomp.hpp"

namespace parcut {

struct TreePacking {
  std::vector<std::vector<EdgeId>> trees;  // edge ids of the packed graph, ascending
  std::vector<Weight> loads;
};

// Greedy packing: each round takes a minimum spanning tree under the
// current loads (ties by edge id) and charges each of its edges one unit.
// Stops early, discarding the offending tree, once some chosen edge would
// carry more load than its weight.
TreePacking greedy_tree_packing(const WeightedGraph& h, std::size_t rounds);

struct PackParams {
  double c_pack = 3.0;
  std::optional<std::size_t> rounds;  // overrides ceil(c_pack * ln n)
  SparsifierParams sparsifier;
  bool replicate = true;  // pack on ceil(rate) copies of H when the sampling rate exceeds 1
};

std::size_t packing_rounds(std::size_t n, const PackParams& params);

struct PackedTrees {
  std::vector<RootedTree> trees;
  Sparsifier sparsifier;
  TreePacking packing;
  Weight replication = 1;
};

PackedTrees pack_for_mincut_detail(const WeightedGraph& g, double epsilon, Weight lambda_est,
                                   const SeededRng& rng, const PackParams& params = {});

std::vector<RootedTree> pack_for_mincut(const WeightedGraph& g, double epsilon, Weight lambda_est,
                                        const SeededRng& rng, const PackParams& params = {});

RootedTree rooted_tree_of(const WeightedGraph& h, const std::vector<EdgeId>& tree_edges,
                          Vertex root = 0);

}  // namespace parcut
