#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "parcut/types.hpp"

namespace parcut {

// Rooted spanning tree. A tree edge is named by its lower endpoint: edge u
// joins u and parent[u].
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;                 // kNoVertex at the root
  std::vector<std::vector<Vertex>> children;  // ascending ids

  std::size_t size() const noexcept { return parent.size(); }

  static RootedTree from_parents(std::vector<Vertex> parent, Vertex root);
  // Orients an undirected edge list (must form a spanning tree) away from root.
  static RootedTree from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                               Vertex root = 0);
};

struct PostorderIndex {
  std::vector<std::uint32_t> post;
  std::vector<std::uint32_t> size;
  std::vector<std::uint32_t> start;
  std::vector<Vertex> order;  // order[post[u]] == u
  std::vector<std::uint32_t> depth;

  std::size_t n() const noexcept { return post.size(); }

  // a is an ancestor of b or equal to it
  bool contains(Vertex a, Vertex b) const { return start[a] <= post[b] && post[b] <= post[a]; }
  bool disjoint(Vertex a, Vertex b) const { return !contains(a, b) && !contains(b, a); }
};

PostorderIndex root_and_index(const RootedTree& t);

inline constexpr std::uint32_t kNoPath = 0xffffffffu;

struct PathPartition {
  // Each path lists the lower endpoints of its edges, root side first.
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::uint32_t> bough_of;  // per vertex; kNoPath at the root
  std::vector<std::uint32_t> position;  // index within its path
  std::size_t phases = 0;

  Vertex head(std::uint32_t p) const { return paths[p].front(); }
};

PathPartition bough_decomposition(const RootedTree& t);

// Paths met by the root-to-u tree path, from u upward.
std::vector<std::uint32_t> root_paths(const PathPartition& pp, const RootedTree& t, Vertex u);

struct PathHit {
  std::uint32_t path;
  Vertex deepest;  // lowest edge of the path on the root-to-u tree path
};

std::vector<PathHit> root_path_hits(const PathPartition& pp, const RootedTree& t, Vertex u);

struct Binarized {
  RootedTree tree;
  std::vector<Weight> weight;  // per lower endpoint; kInfWeight for added edges
  std::vector<Vertex> origin;  // original vertex each node stands for
  std::size_t original_size = 0;

  bool is_virtual_edge(Vertex u) const { return u >= original_size; }
  std::size_t added_edges() const { return tree.size() - original_size; }
};

// Replaces each node with d > 2 children by a right-leaning chain of d - 2
// added nodes. Original ids are kept; added nodes get ids n, n+1, ...
Binarized binarize(const RootedTree& t, std::span<const Weight> weights);
Binarized binarize(const RootedTree& t);

struct CentroidTree {
  Vertex root = kNoVertex;
  // anc[v][d] is the centroid of the depth-d component containing v; the
  // last entry is v itself.
  std::vector<std::vector<Vertex>> anc;
  std::vector<std::size_t> component_size;  // per centroid vertex
  std::size_t depth = 0;

  std::size_t level(Vertex c) const { return anc[c].size() - 1; }
};

CentroidTree centroid_decomposition(const RootedTree& t);

}  // namespace parcut
