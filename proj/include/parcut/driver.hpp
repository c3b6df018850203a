#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "parcut/approx_hierarchy.hpp"
#include "parcut/cut_result.hpp"
#include "parcut/graph.hpp"
#include "parcut/tree_decomp.hpp"
#include "parcut/two_respect.hpp"

namespace parcut {

enum class Mode { approx, exact, oracle };

std::string mode_name(Mode m);

struct RunConfig {
  Mode mode = Mode::exact;
  double epsilon_pack = 1.0 / 3.0;
  double epsilon_rq = 0.25;
  double scale = 1.0;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 keeps the OpenMP default
  std::optional<Weight> lambda_hint;
  std::optional<std::size_t> trees;  // packing rounds, default ceil(c_pack ln n)
  std::size_t repeats = 1;
  double c_pack = 3.0;
  // Allow the approximation pipeline as the source of the underestimate.
  bool use_approx = true;

  void validate() const;
};

struct LambdaEstimate {
  Weight value = 0;
  std::string source;  // "hint", "approx" or "certificate"
};

// Constant-factor underestimate of the minimum cut used to size the
// sparsifier: the hint if given; half the approximation estimate when every
// weighted degree clears the skeleton threshold; otherwise the exact value
// on a min-degree certificate.
LambdaEstimate lambda_underestimate(const WeightedGraph& g, const RunConfig& cfg);

CutResult exact_mincut(const WeightedGraph& g, const RunConfig& cfg);

// Exhaustive search when n <= 20, otherwise Stoer-Wagner.
CutResult oracle_mincut(const WeightedGraph& g);

// Vertex side (true = inside) cut by the candidate's tree edges: one edge
// gives its subtree, two disjoint edges the union, nested edges the
// difference.
std::vector<bool> recover_partition(const RootedTree& tree, const CutCandidate& c);

}  // namespace parcut
