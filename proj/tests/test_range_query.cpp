#include <gtest/gtest.h>

#include <algorithm>

#include "parcut/errors.hpp"
#include "parcut/generators.hpp"
#include "parcut/oracle.hpp"
#include "parcut/range_query.hpp"

using namespace parcut;

namespace {

std::vector<Point1D> sample_1d() { return {{1, 2}, {3, 5}, {7, 1}}; }

RootedTree tree_of(std::vector<Vertex> parent) { return RootedTree::from_parents(std::move(parent), 0); }

struct Fixture {
  WeightedGraph g = parse_graph("p 4 4\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 0 1");
  RootedTree t = tree_of({kNoVertex, 0, 1, 2});
};

bool in_subtree(const RootedTree& t, Vertex a, Vertex v) {
  for (Vertex x = v; x != kNoVertex; x = t.parent[x]) {
    if (x == a) return true;
  }
  return false;
}

Weight naive_between(const WeightedGraph& g, auto&& in_a, auto&& in_b) {
  Weight s = 0;
  for (const Edge& e : g.edges()) {
    if ((in_a(e.u) && in_b(e.v)) || (in_a(e.v) && in_b(e.u))) s += e.w;
  }
  return s;
}

}  // namespace

TEST(RangeDegree, Formula) {
  EXPECT_EQ(range_degree(16, 0.5), 4u);
  EXPECT_EQ(range_degree(1000, 1.0), 1000u);
  EXPECT_EQ(range_degree(3, 0.1), 2u);
  EXPECT_EQ(range_degree(0, 0.5), 2u);
  EXPECT_THROW(range_degree(10, 0.0), ParameterError);
  EXPECT_THROW(range_degree(10, 1.5), ParameterError);
}

TEST(RangeTree1D, Examples) {
  for (double eps : {0.2, 0.5, 1.0}) {
    const RangeTree1D rt = build_1d(sample_1d(), eps, 8);
    EXPECT_EQ(rt.total(), 8u);
    EXPECT_EQ(rt.query(1, 3), 7u);
    EXPECT_EQ(rt.query(4, 6), 0u);
    EXPECT_EQ(rt.query(0, 7), 8u);
    EXPECT_EQ(rt.query(3, 1), 0u);
    EXPECT_EQ(rt.query(-5, 100), 8u);
  }
}

TEST(RangeTree1D, Empty) {
  const RangeTree1D rt = build_1d({}, 0.5, 8);
  EXPECT_EQ(rt.total(), 0u);
  EXPECT_EQ(rt.query(0, 7), 0u);
}

TEST(RangeTree1D, SixteenUnitPointsDegreeFour) {
  std::vector<Point1D> pts;
  for (std::uint32_t k = 0; k < 16; ++k) pts.push_back({k, 1});
  const RangeTree1D rt = build_1d(pts, 0.5, 16);
  ASSERT_EQ(rt.degree(), 4u);
  EXPECT_EQ(rt.height(), 2u);
  EXPECT_EQ(rt.level_weights(1), (std::vector<Weight>{4, 4, 4, 4}));
}

TEST(RangeTree1D, MatchesScanWithinVisitBound) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    Engine eng = SeededRng(s).derive("1d").engine();
    const std::uint32_t universe = 1 + eng() % 300;
    std::vector<Point1D> pts(eng() % 200);
    for (auto& p : pts) p = {static_cast<std::uint32_t>(eng() % universe), eng() % 1000};
    const double eps = 0.05 + 0.95 * static_cast<double>(eng() % 100) / 100.0;
    const RangeTree1D rt = build_1d(pts, eps, universe);
    for (int q = 0; q < 50; ++q) {
      std::int64_t a = eng() % universe, b = eng() % universe;
      if (a > b) std::swap(a, b);
      Weight want = 0;
      for (const auto& p : pts) want += (a <= p.key && p.key <= b) ? p.w : 0;
      QueryCounter c;
      ASSERT_EQ(rt.query(a, b, &c), want);
      ASSERT_LE(c.visits, 2 * rt.degree() * (rt.height() + 1));
      ASSERT_LE(c.visits, query_budget_1d(rt.degree(), rt.height()));
    }
  }
}

TEST(RangeTree2D, Examples) {
  const RangeTree2D one = build_2d({{0, 0, 3}}, 0.5, 4);
  EXPECT_EQ(one.query(0, 0, 0, 0), 3u);
  EXPECT_EQ(one.query(0, 3, 0, 3), 3u);
  EXPECT_EQ(one.query(1, 3, 0, 3), 0u);

  const RangeTree2D grid = build_2d({{1, 1, 1}, {0, 1, 1}, {1, 0, 1}, {0, 0, 1}}, 0.5, 2);
  EXPECT_EQ(grid.aux(grid.height(), 0).keys(), (std::vector<std::uint32_t>{0, 0, 1, 1}));
  EXPECT_EQ(grid.query(0, 1, 0, 0), 2u);
  EXPECT_EQ(grid.query(0, 1, 0, 1), 4u);
  EXPECT_EQ(grid.query(1, 0, 0, 1), 0u);
  EXPECT_EQ(grid.query(0, 1, 1, 0), 0u);

  const RangeTree2D empty = build_2d({}, 0.5, 4);
  EXPECT_EQ(empty.query(0, 3, 0, 3), 0u);
}

TEST(RangeTree2D, MatchesScanWithinVisitBound) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Engine eng = SeededRng(s).derive("2d").engine();
    const std::uint32_t universe = 1 + eng() % 64;
    std::vector<Point2D> pts(s < 20 ? 50 : eng() % 300);
    for (auto& p : pts) {
      p = {static_cast<std::uint32_t>(eng() % universe), static_cast<std::uint32_t>(eng() % universe), eng() % 100};
    }
    const double eps = 0.1 + 0.9 * static_cast<double>(eng() % 100) / 100.0;
    const RangeTree2D rt = build_2d(pts, eps, universe);
    for (int q = 0; q < 200; ++q) {
      std::int64_t x1 = eng() % universe, x2 = eng() % universe, y1 = eng() % universe, y2 = eng() % universe;
      if (x1 > x2) std::swap(x1, x2);
      if (y1 > y2) std::swap(y1, y2);
      Weight want = 0;
      for (const auto& p : pts) want += (x1 <= p.x && p.x <= x2 && y1 <= p.y && p.y <= y2) ? p.w : 0;
      QueryCounter c;
      ASSERT_EQ(rt.query(x1, x2, y1, y2, &c), want);
      ASSERT_LE(c.visits, query_budget_2d(rt.degree(), rt.height()));
    }
  }
}

TEST(CutOracle, FixtureCosts) {
  Fixture f;
  const CutOracle o(f.g, f.t, 0.5);
  EXPECT_EQ(o.num_points(), 8u);
  EXPECT_EQ(o.cost(1), 2u);
  EXPECT_EQ(o.cost(3), 2u);
  EXPECT_EQ(o.one_respecting_cost(1), 2u);
  EXPECT_EQ(o.cut_query(1, 3), 2u);
  EXPECT_EQ(o.cut_query(1, 2), 2u);
  EXPECT_EQ(o.cut_query(3, 1), 2u);
  EXPECT_THROW(o.cost(0), ContractError);
  EXPECT_THROW(o.cut_query(2, 2), ContractError);
}

TEST(CutOracle, CrossAndDown) {
  // Root 0 with children 1 and 2, leaf 3 under 2; unit tree edges plus (1,3) of weight 10.
  const WeightedGraph g = parse_graph("p 4 4\ne 0 1 1\ne 0 2 1\ne 2 3 1\ne 1 3 10");
  const RootedTree t = tree_of({kNoVertex, 0, 0, 2});
  const CutOracle o(g, t, 0.5);
  EXPECT_EQ(o.cross_cost(1, 2), 10u);
  EXPECT_EQ(o.cross_cost(2, 1), 10u);
  EXPECT_EQ(o.down_cost(2, 3), 10u);
  EXPECT_EQ(o.cross_cost(1, 3), 10u);
  EXPECT_THROW(o.cross_cost(2, 3), ContractError);
  EXPECT_THROW(o.down_cost(1, 3), ContractError);
  EXPECT_THROW(o.down_cost(3, 2), ContractError);

  const WeightedGraph sparse = parse_graph("p 4 3\ne 0 1 1\ne 0 2 1\ne 2 3 1");
  const CutOracle so(sparse, t, 0.5);
  EXPECT_EQ(so.cross_cost(1, 2), 0u);
  EXPECT_EQ(so.cross_cost(1, 3), 0u);
}

TEST(CutOracle, EmptyGraphSingleVertex) {
  const WeightedGraph g(1);
  const RootedTree t = tree_of({kNoVertex});
  const CutOracle o(g, t, 0.5);
  EXPECT_EQ(o.num_points(), 0u);
  EXPECT_EQ(o.rect(0, 0, 0, 0), 0u);
}

TEST(CutOracle, BridgeCost) {
  const WeightedGraph g = parse_graph("p 3 2\ne 0 1 7\ne 1 2 4");
  const CutOracle o(g, tree_of({kNoVertex, 0, 1}), 0.5);
  EXPECT_EQ(o.cost(1), 7u);
  EXPECT_EQ(o.cost(2), 4u);
  EXPECT_EQ(o.cut_query(1, 2), 11u);
}

TEST(CutOracle, Interest) {
  const RootedTree star = tree_of({kNoVertex, 0, 0});
  const WeightedGraph with = parse_graph("p 3 3\ne 0 1 1\ne 0 2 1\ne 1 2 10");
  EXPECT_TRUE(CutOracle(with, star, 0.5).cross_interested(1, 2));
  const WeightedGraph without = parse_graph("p 3 2\ne 0 1 1\ne 0 2 1");
  EXPECT_FALSE(CutOracle(without, star, 0.5).cross_interested(1, 2));

  const RootedTree path = tree_of({kNoVertex, 0, 1});
  const WeightedGraph back = parse_graph("p 3 3\ne 0 1 1\ne 1 2 1\ne 2 0 10");
  const CutOracle o(back, path, 0.5);
  EXPECT_TRUE(o.down_interested(1, 2));
  EXPECT_THROW(o.down_interested(2, 1), ContractError);
  EXPECT_THROW(CutOracle(with, star, 0.5).cross_interested(1, 1), ContractError);
}

TEST(CutOracle, MatchesNaiveOnRandomTrees) {
  for (std::uint64_t s = 0; s < 80; ++s) {
    Engine eng = SeededRng(s).derive("oracle").engine();
    const std::size_t n = 2 + eng() % 12;
    const WeightedGraph g = gen::gnm(n, eng() % (3 * n), 0, 20, eng);
    const RootedTree t = gen::random_tree(n, eng);
    const CutOracle o(g, t, 0.1 + 0.1 * static_cast<double>(s % 9));
    for (Vertex u = 0; u < n; ++u) {
      if (u == t.root) continue;
      auto in_u = [&](Vertex x) { return in_subtree(t, u, x); };
      auto out_u = [&](Vertex x) { return !in_subtree(t, u, x); };
      const Weight cu = naive_between(g, in_u, out_u);
      ASSERT_EQ(o.cost(u), cu);
      ASSERT_EQ(o.one_respecting_cost(u), brute_force_cut_query(g, t, u, u));
      for (Vertex v = 0; v < n; ++v) {
        if (v == t.root || v == u) continue;
        auto in_v = [&](Vertex x) { return in_subtree(t, v, x); };
        ASSERT_EQ(o.cut_query(u, v), brute_force_cut_query(g, t, u, v));
        ASSERT_EQ(o.cut_query(u, v), o.cut_query(v, u));
        if (!in_subtree(t, u, v) && !in_subtree(t, v, u)) {
          const Weight x = naive_between(g, in_u, in_v);
          ASSERT_EQ(o.cross_cost(u, v), x);
          ASSERT_EQ(o.cross_interested(u, v), cu < 2 * x);
        } else if (in_subtree(t, u, v)) {
          const Weight d = naive_between(g, in_v, out_u);
          ASSERT_EQ(o.down_cost(u, v), d);
          ASSERT_EQ(o.down_interested(u, v), cu < 2 * d);
        }
      }
    }
  }
}

TEST(CutOracle, ExtraTreeNodesCarryNoEdges) {
  // Binarized star: node ids beyond the graph's vertex count.
  const WeightedGraph g = parse_graph("p 5 4\ne 0 1 2\ne 0 2 3\ne 0 3 4\ne 0 4 5");
  const RootedTree star = tree_of({kNoVertex, 0, 0, 0, 0});
  const Binarized b = binarize(star);
  const CutOracle o(g, b.tree, 0.5);
  for (Vertex leaf = 1; leaf <= 4; ++leaf) EXPECT_EQ(o.cost(leaf), g.edge(leaf - 1).w);
  EXPECT_EQ(o.cost(5), 3u + 4u + 5u);
}
