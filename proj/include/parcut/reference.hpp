#pragma once

#include <vector>

#include "parcut/approx_hierarchy.hpp"
#include "parcut/graph.hpp"
#include "parcut/range_query.hpp"
#include "parcut/rng.hpp"
#include "parcut/sparsify.hpp"
#include "parcut/two_respect.hpp"

// Single-threaded counterparts of the parallel kernels, on the same random
// streams.
namespace parcut::reference {

std::vector<Weight> sample_edge_weights(const WeightedGraph& g, const SkeletonParams& params,
                                        const SeededRng& rng);

Hierarchy build_hierarchy(const WeightedGraph& g, const HierarchyConstants& c, const SeededRng& rng);

Weight range_sum(const std::vector<Point2D>& pts, std::int64_t x1, std::int64_t x2, std::int64_t y1,
                 std::int64_t y2);

// All one- and two-edge cuts of the tree through cut queries.
CutCandidate two_respecting_scan(const WeightedGraph& g, const RootedTree& t, double epsilon);

}  // namespace parcut::reference
