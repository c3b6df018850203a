#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "parcut/cut_result.hpp"
#include "parcut/graph.hpp"
#include "parcut/tree_decomp.hpp"

namespace parcut {

inline constexpr std::size_t kBruteForceMaxVertices = 20;

// Exhaustive minimum over all bipartitions; n must be in [2, 20].
CutResult brute_force_mincut(const WeightedGraph& g);

// Maximum-adjacency-order minimum cut over an adjacency matrix.
CutResult stoer_wagner(const WeightedGraph& g);

// Weight of graph edges whose tree path contains exactly one of the tree
// edges e and f (lower endpoints). With e == f, the edges whose path
// contains e. Paths are walked explicitly through parent pointers.
Weight brute_force_cut_query(const WeightedGraph& g, const RootedTree& t, Vertex e, Vertex f);

// Minimum over all one- and two-edge subsets of the tree, by brute force.
Weight exhaustive_two_respecting(const WeightedGraph& g, const RootedTree& t);

// Number of tree edges with endpoints on different sides.
std::size_t tree_crossings(const RootedTree& t, const std::vector<bool>& side);

enum class MongeMode { partial, full };

struct MongeViolation {
  std::size_t i;
  std::size_t j;
};

// Checks M[i][j] - M[i][j+1] >= M[i+1][j] - M[i+1][j+1] on every
// quadruple. Partial mode skips quadruples touching the diagonal.
std::vector<MongeViolation> monge_audit(std::size_t rows, std::size_t cols,
                                        const std::function<Weight(std::size_t, std::size_t)>& at,
                                        MongeMode mode);

}  // namespace parcut
