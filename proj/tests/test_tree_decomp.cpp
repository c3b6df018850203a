#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "parcut/generators.hpp"
#include "parcut/tree_decomp.hpp"

using namespace parcut;

namespace {

RootedTree path_tree(std::size_t n) {
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex v = 1; v < n; ++v) parent[v] = v - 1;
  return RootedTree::from_parents(parent, 0);
}

RootedTree star_tree(std::size_t leaves) {
  std::vector<Vertex> parent(leaves + 1, 0);
  parent[0] = kNoVertex;
  return RootedTree::from_parents(parent, 0);
}

RootedTree complete_binary(std::size_t n) {
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex v = 1; v < n; ++v) parent[v] = (v - 1) / 2;
  return RootedTree::from_parents(parent, 0);
}

// A mix of shapes: uniform random, deep caterpillars and bushy trees.
RootedTree shaped_tree(std::uint64_t seed) {
  Engine eng = SeededRng(seed).derive("shape").engine();
  const std::size_t n = 1 + eng() % 64;
  switch (seed % 4) {
    case 0: return gen::random_tree(n, eng);
    case 1: {
      std::vector<Vertex> parent(n, kNoVertex);
      for (Vertex v = 1; v < n; ++v) parent[v] = eng() % 3 == 0 ? static_cast<Vertex>(eng() % v) : v - 1;
      return RootedTree::from_parents(parent, 0);
    }
    case 2: {
      std::vector<Vertex> parent(n, kNoVertex);
      for (Vertex v = 1; v < n; ++v) parent[v] = static_cast<Vertex>(eng() % std::min<Vertex>(v, 3));
      return RootedTree::from_parents(parent, 0);
    }
    default: {
      RootedTree t = gen::random_tree(n, eng);
      const Vertex root = static_cast<Vertex>(eng() % n);
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (Vertex v = 0; v < n; ++v) {
        if (v != t.root) edges.push_back({v, t.parent[v]});
      }
      return RootedTree::from_edges(n, edges, root);
    }
  }
}

bool naive_ancestor(const RootedTree& t, Vertex a, Vertex b) {
  for (Vertex x = b; x != kNoVertex; x = t.parent[x]) {
    if (x == a) return true;
  }
  return false;
}

std::size_t centroid_depth_bound(std::size_t n) {
  return static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(n)))) + 1;
}

}  // namespace

TEST(Rooting, FromEdgesOrientsAwayFromRoot) {
  const std::vector<std::pair<Vertex, Vertex>> edges = {{0, 1}, {2, 1}, {1, 3}};
  const RootedTree t = RootedTree::from_edges(4, edges, 2);
  EXPECT_EQ(t.root, 2u);
  EXPECT_EQ(t.parent, (std::vector<Vertex>{1, 2, kNoVertex, 1}));
  EXPECT_EQ(t.children[1], (std::vector<Vertex>{0, 3}));
}

TEST(Postorder, PathExample) {
  const PostorderIndex idx = root_and_index(path_tree(3));
  EXPECT_EQ(idx.post, (std::vector<std::uint32_t>{2, 1, 0}));
  EXPECT_EQ(idx.size, (std::vector<std::uint32_t>{3, 2, 1}));
  EXPECT_EQ(idx.start, (std::vector<std::uint32_t>{0, 0, 0}));
  EXPECT_EQ(idx.depth, (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(Postorder, SingletonAndStar) {
  const PostorderIndex one = root_and_index(path_tree(1));
  EXPECT_EQ(one.post, (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(one.size, (std::vector<std::uint32_t>{1}));
  EXPECT_EQ(one.start, (std::vector<std::uint32_t>{0}));

  const PostorderIndex star = root_and_index(star_tree(3));
  EXPECT_EQ(star.post, (std::vector<std::uint32_t>{3, 0, 1, 2}));
  EXPECT_EQ(star.size[0], 4u);
  EXPECT_EQ(star.start[0], 0u);
}

TEST(Postorder, SubtreeRangesMatchNaiveDescendants) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const RootedTree t = shaped_tree(s);
    const PostorderIndex idx = root_and_index(t);
    const std::size_t n = t.size();
    for (Vertex u = 0; u < n; ++u) {
      ASSERT_EQ(idx.order[idx.post[u]], u);
      std::set<Vertex> range, naive;
      for (std::uint32_t j = idx.start[u]; j <= idx.post[u]; ++j) range.insert(idx.order[j]);
      for (Vertex v = 0; v < n; ++v) {
        if (naive_ancestor(t, u, v)) naive.insert(v);
        ASSERT_EQ(idx.contains(u, v), naive_ancestor(t, u, v));
      }
      ASSERT_EQ(range, naive) << "seed " << s << " u " << u;
      ASSERT_EQ(idx.size[u], naive.size());
    }
  }
}

TEST(Boughs, PathIsOneBough) {
  const RootedTree t = path_tree(6);
  const PathPartition pp = bough_decomposition(t);
  ASSERT_EQ(pp.paths.size(), 1u);
  EXPECT_EQ(pp.paths[0], (std::vector<Vertex>{1, 2, 3, 4, 5}));
  EXPECT_EQ(root_paths(pp, t, 5), (std::vector<std::uint32_t>{0}));
  EXPECT_TRUE(root_paths(pp, t, 0).empty());
}

TEST(Boughs, StarHasSingleEdgeBoughs) {
  const RootedTree t = star_tree(3);
  const PathPartition pp = bough_decomposition(t);
  ASSERT_EQ(pp.paths.size(), 3u);
  for (const auto& p : pp.paths) EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(root_paths(pp, t, 2), (std::vector<std::uint32_t>{pp.bough_of[2]}));
}

TEST(Boughs, CompleteBinaryTree) {
  const RootedTree t = complete_binary(7);
  const PathPartition pp = bough_decomposition(t);
  for (Vertex leaf : {3u, 4u, 5u, 6u}) {
    EXPECT_LE(static_cast<double>(root_paths(pp, t, leaf).size()), 2.0 * std::log2(7.0));
  }
  std::vector<std::uint32_t> naive;
  for (Vertex x = 3; x != 0; x = t.parent[x]) {
    if (naive.empty() || naive.back() != pp.bough_of[x]) naive.push_back(pp.bough_of[x]);
  }
  EXPECT_EQ(root_paths(pp, t, 3), naive);
}

TEST(Boughs, CoverageOrderAndBounds) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const RootedTree t = shaped_tree(s);
    const PathPartition pp = bough_decomposition(t);
    const std::size_t n = t.size();
    std::vector<int> seen(n, 0);
    for (std::uint32_t p = 0; p < pp.paths.size(); ++p) {
      const auto& path = pp.paths[p];
      ASSERT_FALSE(path.empty());
      for (std::size_t i = 0; i < path.size(); ++i) {
        ++seen[path[i]];
        ASSERT_EQ(pp.bough_of[path[i]], p);
        ASSERT_EQ(pp.position[path[i]], i);
        if (i > 0) ASSERT_EQ(t.parent[path[i]], path[i - 1]);
      }
      for (Vertex c : t.children[path.back()]) ASSERT_EQ(pp.head(pp.bough_of[c]), c);
    }
    for (Vertex v = 0; v < n; ++v) ASSERT_EQ(seen[v], v == t.root ? 0 : 1);
    if (n > 1) EXPECT_LE(pp.phases, centroid_depth_bound(n));
    for (Vertex u = 0; u < n; ++u) {
      std::vector<std::uint32_t> naive;
      for (Vertex x = u; x != t.root; x = t.parent[x]) {
        if (naive.empty() || naive.back() != pp.bough_of[x]) naive.push_back(pp.bough_of[x]);
      }
      const auto got = root_paths(pp, t, u);
      ASSERT_EQ(got, naive) << "seed " << s << " u " << u;
      ASSERT_LE(got.size(), pp.phases);
      const auto hits = root_path_hits(pp, t, u);
      ASSERT_EQ(hits.size(), got.size());
      for (std::size_t k = 0; k < hits.size(); ++k) {
        ASSERT_EQ(hits[k].path, got[k]);
        ASSERT_EQ(pp.bough_of[hits[k].deepest], got[k]);
        ASSERT_TRUE(naive_ancestor(t, hits[k].deepest, u));
        const auto& path = pp.paths[got[k]];
        const std::size_t pos = pp.position[hits[k].deepest];
        if (pos + 1 < path.size()) ASSERT_FALSE(naive_ancestor(t, path[pos + 1], u));
      }
    }
  }
}

TEST(Binarize, BinaryTreesAndPathsUnchanged) {
  for (const RootedTree& t : {complete_binary(7), path_tree(5), path_tree(1)}) {
    const Binarized b = binarize(t);
    EXPECT_EQ(b.added_edges(), 0u);
    EXPECT_EQ(b.tree.parent, t.parent);
    for (Vertex v = 0; v < t.size(); ++v) EXPECT_EQ(b.origin[v], v);
  }
}

TEST(Binarize, FourLeafStarGetsCaterpillar) {
  const RootedTree t = star_tree(4);
  const std::vector<Weight> w = {0, 3, 5, 7, 9};
  const Binarized b = binarize(t, w);
  EXPECT_EQ(b.tree.size(), 7u);
  EXPECT_EQ(b.added_edges(), 2u);
  std::size_t inf = 0;
  for (Vertex v = 0; v < b.tree.size(); ++v) {
    EXPECT_LE(b.tree.children[v].size(), 2u);
    if (v != b.tree.root && b.weight[v] == kInfWeight) ++inf;
  }
  EXPECT_EQ(inf, 2u);
  EXPECT_EQ(b.origin[5], 0u);
  EXPECT_EQ(b.origin[6], 0u);
  for (Vertex leaf = 1; leaf <= 4; ++leaf) EXPECT_EQ(b.weight[leaf], w[leaf]);
}

TEST(Binarize, RandomTreesKeepStructure) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const RootedTree t = shaped_tree(s);
    std::vector<Weight> w(t.size());
    for (Vertex v = 0; v < t.size(); ++v) w[v] = 1 + v;
    const Binarized b = binarize(t, w);
    const std::size_t n = t.size();
    std::size_t expected_added = 0;
    for (Vertex v = 0; v < n; ++v) expected_added += t.children[v].size() > 2 ? t.children[v].size() - 2 : 0;
    ASSERT_EQ(b.added_edges(), expected_added);
    ASSERT_EQ(b.original_size, n);
    for (Vertex v = 0; v < b.tree.size(); ++v) {
      ASSERT_LE(b.tree.children[v].size(), 2u);
      if (v >= n) {
        ASSERT_TRUE(b.is_virtual_edge(v));
        ASSERT_EQ(b.weight[v], kInfWeight);
        ASSERT_EQ(b.origin[b.tree.parent[v]], b.origin[v]);
      }
    }
    // Contracting the added nodes gives back the original tree.
    for (Vertex v = 0; v < n; ++v) {
      if (v == t.root) continue;
      Vertex p = b.tree.parent[v];
      while (p >= n) p = b.tree.parent[p];
      ASSERT_EQ(p, t.parent[v]);
      ASSERT_EQ(b.weight[v], w[v]);
    }
    const PostorderIndex bi = root_and_index(b.tree), ti = root_and_index(t);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(bi.contains(u, v), ti.contains(u, v));
    }
  }
}

TEST(Centroid, Examples) {
  const CentroidTree p5 = centroid_decomposition(path_tree(5));
  EXPECT_EQ(p5.root, 2u);
  const CentroidTree one = centroid_decomposition(path_tree(1));
  EXPECT_EQ(one.root, 0u);
  EXPECT_EQ(one.depth, 1u);
  const CentroidTree p15 = centroid_decomposition(path_tree(15));
  EXPECT_EQ(p15.root, 7u);
  EXPECT_EQ(p15.depth, 4u);
}

TEST(Centroid, ComponentBoundsOnBinarizedTrees) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const RootedTree t = binarize(shaped_tree(s)).tree;
    const std::size_t n = t.size();
    const CentroidTree ct = centroid_decomposition(t);
    ASSERT_LE(ct.depth, centroid_depth_bound(n));
    ASSERT_EQ(ct.component_size[ct.root], n);
    std::vector<std::size_t> count(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_FALSE(ct.anc[v].empty());
      ASSERT_EQ(ct.anc[v].front(), ct.root);
      ASSERT_EQ(ct.anc[v].back(), v);
      for (std::size_t d = 0; d < ct.anc[v].size(); ++d) {
        const Vertex c = ct.anc[v][d];
        ASSERT_EQ(ct.level(c), d);
        ++count[c];
      }
    }
    for (Vertex c = 0; c < n; ++c) {
      // Vertices that list c as an ancestor centroid form its component.
      ASSERT_EQ(count[c], ct.component_size[c]);
      ASSERT_LE(ct.component_size[c], n >> ct.level(c));
      for (Vertex v = 0; v < n; ++v) {
        if (ct.anc[v].size() <= ct.level(c) || ct.anc[v][ct.level(c)] != c) continue;
        // Removing c leaves pieces of at most half the component.
        if (v == c) continue;
        if (ct.anc[v].size() > ct.level(c) + 1) {
          ASSERT_LE(2 * ct.component_size[ct.anc[v][ct.level(c) + 1]], ct.component_size[c]);
        }
      }
    }
  }
}
