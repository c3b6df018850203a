#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parcut/two_respect.hpp"

namespace parcut {

struct CutStats {
  std::uint64_t cut_queries = 0;
  std::uint64_t forests = 0;
  std::size_t depth = 0;
  std::size_t trees = 0;
  std::size_t groups = 0;
  std::size_t tuples = 0;
  Weight lambda_est = 0;
  std::string lambda_source;
  double sample_p = 1.0;
  bool sparsifier_fallback = false;
};

struct CutResult {
  Weight value = 0;
  std::vector<Vertex> partition;  // smaller side, ascending
  std::optional<std::size_t> tree;
  CutCandidate witness;
  std::vector<std::pair<Vertex, Vertex>> tree_edges;  // (child, parent) of the witness edges
  std::uint64_t seed = 0;
  CutStats stats;
};

// Smaller side of the bipartition; on equal sizes the side holding vertex 0.
std::vector<Vertex> normalize_partition(const std::vector<bool>& side);

std::vector<bool> side_of(std::size_t n, const std::vector<Vertex>& partition);

}  // namespace parcut
