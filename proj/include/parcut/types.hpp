#pragma once

#include <cstdint>
#include <limits>

namespace parcut {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Sentinel for binarization edges and "no candidate" values.
inline constexpr Weight kInfWeight = std::numeric_limits<Weight>::max();

// Largest weight accepted for a single edge.
inline constexpr Weight kMaxEdgeWeight = Weight{1} << 62;

}  // namespace parcut
