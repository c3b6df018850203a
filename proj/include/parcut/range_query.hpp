#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "parcut/graph.hpp"
#include "parcut/tree_decomp.hpp"

namespace parcut {

struct QueryCounter {
  std::uint64_t visits = 0;
};

struct Point1D {
  std::uint32_t key;
  Weight w;
};

struct Point2D {
  std::uint32_t x;
  std::uint32_t y;
  Weight w;
};

// max(2, floor(universe^epsilon))
std::size_t range_degree(std::size_t universe, double epsilon);

// Complete b-ary tree over key-sorted points. Node j of level L covers the
// sorted leaves [j*b^L, (j+1)*b^L) and stores their total weight.
class RangeTree1D {
 public:
  RangeTree1D() = default;
  RangeTree1D(std::vector<Point1D> points, std::size_t degree);

  Weight query(std::int64_t x1, std::int64_t x2, QueryCounter* counter = nullptr) const;

  std::size_t degree() const noexcept { return b_; }
  std::size_t height() const noexcept { return level_w_.empty() ? 0 : level_w_.size() - 1; }
  std::size_t num_points() const noexcept { return keys_.size(); }
  Weight total() const { return level_w_.empty() ? 0 : level_w_.back()[0]; }
  const std::vector<Weight>& level_weights(std::size_t level) const { return level_w_[level]; }
  const std::vector<std::uint32_t>& keys() const noexcept { return keys_; }

 private:
  Weight descend(std::size_t level, std::size_t j, std::int64_t x1, std::int64_t x2,
                 QueryCounter* counter) const;

  std::size_t b_ = 2;
  std::vector<std::uint32_t> keys_;
  std::vector<std::vector<Weight>> level_w_;  // level 0 = leaves
  std::vector<std::size_t> span_;             // b^L
};

RangeTree1D build_1d(std::vector<Point1D> points, double epsilon, std::size_t universe = 0);

// Two-level tree: a b-ary tree over x-sorted points whose internal nodes
// each carry a y-keyed RangeTree1D of the points below them.
class RangeTree2D {
 public:
  RangeTree2D() = default;
  RangeTree2D(std::vector<Point2D> points, std::size_t degree);

  Weight query(std::int64_t x1, std::int64_t x2, std::int64_t y1, std::int64_t y2,
               QueryCounter* counter = nullptr) const;

  std::size_t degree() const noexcept { return b_; }
  std::size_t height() const noexcept { return aux_.empty() ? 0 : aux_.size(); }
  std::size_t num_points() const noexcept { return pts_.size(); }
  const std::vector<Point2D>& points() const noexcept { return pts_; }
  // Auxiliary y-tree of first-level node j at level >= 1.
  const RangeTree1D& aux(std::size_t level, std::size_t j) const { return aux_[level - 1][j]; }

 private:
  Weight descend(std::size_t level, std::size_t j, std::int64_t x1, std::int64_t x2,
                 std::int64_t y1, std::int64_t y2, QueryCounter* counter) const;

  std::size_t b_ = 2;
  std::vector<Point2D> pts_;  // sorted by (x, y)
  std::vector<std::vector<RangeTree1D>> aux_;
  std::vector<std::size_t> span_;
};

RangeTree2D build_2d(std::vector<Point2D> points, double epsilon, std::size_t universe = 0);

// Visit budgets used by the audits (constant 4).
std::uint64_t query_budget_1d(std::size_t degree, std::size_t height);
std::uint64_t query_budget_2d(std::size_t degree, std::size_t height);

// Cut queries against a rooted spanning tree. Each graph edge (a, b) is a
// point at (post a, post b) and at its mirror. Vertices of the tree beyond
// the graph's vertex count (binarization nodes) carry no edges.
class CutOracle {
 public:
  CutOracle(const WeightedGraph& g, const RootedTree& t, double epsilon);

  const RootedTree& tree() const noexcept { return tree_; }
  const PostorderIndex& index() const noexcept { return idx_; }
  const RangeTree2D& plane() const noexcept { return rt_; }
  std::size_t num_points() const noexcept { return rt_.num_points(); }

  Weight rect(std::int64_t x1, std::int64_t x2, std::int64_t y1, std::int64_t y2,
              QueryCounter* counter = nullptr) const;

  Weight cost(Vertex u, QueryCounter* counter = nullptr) const;
  Weight cross_cost(Vertex u, Vertex v, QueryCounter* counter = nullptr) const;
  Weight down_cost(Vertex u, Vertex v, QueryCounter* counter = nullptr) const;
  Weight cut_query(Vertex e, Vertex f, QueryCounter* counter = nullptr) const;
  Weight one_respecting_cost(Vertex e, QueryCounter* counter = nullptr) const;

  bool cross_interested(Vertex e, Vertex f) const;
  bool down_interested(Vertex e, Vertex f) const;

 private:
  RootedTree tree_;
  PostorderIndex idx_;
  RangeTree2D rt_;
};

CutOracle build_cut_oracle(const WeightedGraph& g, const RootedTree& t, double epsilon);

}  // namespace parcut
