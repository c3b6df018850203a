#include <gtest/gtest.h>

#include <algorithm>

#include "parcut/driver.hpp"
#include "parcut/errors.hpp"
#include "parcut/generators.hpp"
#include "parcut/oracle.hpp"

using namespace parcut;

namespace {

WeightedGraph c4() { return parse_graph("p 4 4\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 0 1"); }

WeightedGraph two_triangles() {
  return parse_graph("p 6 7\ne 0 1 5\ne 1 2 5\ne 0 2 5\ne 3 4 5\ne 4 5 5\ne 3 5 5\ne 2 3 1");
}

CutCandidate cand(std::vector<Vertex> edges) {
  CutCandidate c;
  c.value = 0;
  c.kind = edges.size() == 1 ? CandidateKind::single_edge : CandidateKind::cross_path;
  c.edges = std::move(edges);
  return c;
}

}  // namespace

TEST(ExactMincut, CycleOfFour) {
  RunConfig cfg;
  cfg.seed = 7;
  const CutResult r = exact_mincut(c4(), cfg);
  EXPECT_EQ(r.value, 2u);
  ASSERT_FALSE(r.partition.empty());
  ASSERT_LE(r.partition.size(), 2u);
  EXPECT_EQ(cut_value(c4(), side_of(4, r.partition)), 2u);
  EXPECT_TRUE(r.tree.has_value());
  EXPECT_EQ(r.seed, 7u);
}

TEST(ExactMincut, BridgeSeparatesTriangles) {
  const CutResult r = exact_mincut(two_triangles(), {});
  EXPECT_EQ(r.value, 1u);
  EXPECT_EQ(r.partition, (std::vector<Vertex>{0, 1, 2}));
  ASSERT_EQ(r.tree_edges.size(), 1u);
  const auto [c, p] = r.tree_edges[0];
  EXPECT_TRUE((c == 2 && p == 3) || (c == 3 && p == 2));
}

TEST(ExactMincut, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Engine eng = SeededRng(s).derive("driver").engine();
    const std::size_t n = 2 + eng() % 11;
    const WeightedGraph g = gen::random_connected(n, n - 1 + eng() % (3 * n), 1, 12, eng);
    RunConfig cfg;
    cfg.seed = s;
    const CutResult r = exact_mincut(g, cfg);
    const CutResult want = brute_force_mincut(g);
    ASSERT_EQ(r.value, want.value) << "seed " << s;
    const auto side = side_of(n, r.partition);
    ASSERT_EQ(cut_value(g, side), r.value);
    ASSERT_FALSE(r.partition.empty());
    ASSERT_LE(2 * r.partition.size(), n);
  }
}

TEST(ExactMincut, SeedDeterminism) {
  Engine eng = SeededRng(3).engine();
  const WeightedGraph g = gen::random_connected(60, 240, 1, 20, eng);
  RunConfig cfg;
  cfg.seed = 11;
  const CutResult a = exact_mincut(g, cfg);
  const CutResult b = exact_mincut(g, cfg);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.partition, b.partition);
  EXPECT_EQ(a.tree, b.tree);
  EXPECT_EQ(a.stats.cut_queries, b.stats.cut_queries);
}

TEST(ExactMincut, DisconnectedGivesZero) {
  const CutResult r = exact_mincut(parse_graph("p 5 3\ne 0 1 4\ne 1 2 4\ne 3 4 4"), {});
  EXPECT_EQ(r.value, 0u);
  EXPECT_EQ(r.partition, (std::vector<Vertex>{3, 4}));
  EXPECT_FALSE(r.tree.has_value());
}

TEST(ExactMincut, Rejections) {
  EXPECT_THROW(exact_mincut(WeightedGraph(1), {}), ParameterError);
  RunConfig bad;
  bad.epsilon_pack = 0.0;
  EXPECT_THROW(exact_mincut(c4(), bad), ParameterError);
}

TEST(ExactMincut, MultigraphAndRepeats) {
  WeightedGraph g(3);
  g.add_edge(0, 1, 2);
  g.add_edge(0, 1, 3);
  g.add_edge(1, 2, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(0, 2, 1);
  RunConfig cfg;
  cfg.repeats = 3;
  const CutResult r = exact_mincut(g, cfg);
  EXPECT_EQ(r.value, 3u);
  EXPECT_EQ(r.partition, (std::vector<Vertex>{2}));
  EXPECT_GE(r.stats.trees, 3u);
}

TEST(RecoverPartition, Examples) {
  const RootedTree path = RootedTree::from_parents({kNoVertex, 0, 1, 2}, 0);
  EXPECT_EQ(recover_partition(path, cand({3})), (std::vector<bool>{false, false, false, true}));
  EXPECT_EQ(recover_partition(path, cand({1, 3})), (std::vector<bool>{false, true, true, false}));
  EXPECT_EQ(recover_partition(path, CutCandidate{}), (std::vector<bool>(4, false)));

  const RootedTree star = RootedTree::from_parents({kNoVertex, 0, 0, 0}, 0);
  EXPECT_EQ(recover_partition(star, cand({1, 3})), (std::vector<bool>{false, true, false, true}));

  // r - x - y with y below x: the pair isolates x alone.
  const RootedTree rxy = RootedTree::from_parents({kNoVertex, 0, 1}, 0);
  EXPECT_EQ(recover_partition(rxy, cand({1, 2})), (std::vector<bool>{false, true, false}));
}

TEST(RecoverPartition, RealizesTwoRespectingValue) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Engine eng = SeededRng(s).derive("recover").engine();
    const std::size_t n = 2 + eng() % 10;
    const WeightedGraph g = gen::random_connected(n, n + eng() % (2 * n), 1, 9, eng);
    const RootedTree t = gen::random_spanning_tree(g, eng);
    const CutCandidate c = min_2_respecting(g, t, 0.25);
    ASSERT_EQ(cut_value(g, recover_partition(t, c)), c.value) << "seed " << s;
  }
}

TEST(Partition, Normalization) {
  EXPECT_EQ(normalize_partition({true, true, false, true}), (std::vector<Vertex>{2}));
  EXPECT_EQ(normalize_partition({false, true, true, false}), (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(normalize_partition({true, false}), (std::vector<Vertex>{0}));
  EXPECT_EQ(side_of(3, {2}), (std::vector<bool>{false, false, true}));
}

TEST(LambdaRule, Sources) {
  RunConfig hint;
  hint.lambda_hint = 5;
  const LambdaEstimate h = lambda_underestimate(c4(), hint);
  EXPECT_EQ(h.value, 5u);
  EXPECT_EQ(h.source, "hint");

  const LambdaEstimate small = lambda_underestimate(c4(), {});
  EXPECT_EQ(small.source, "certificate");
  EXPECT_EQ(small.value, 2u);

  const WeightedGraph heavy = gen::circulant(64, 4, 250);
  RunConfig cfg;
  cfg.scale = 0.05;
  const LambdaEstimate a = lambda_underestimate(heavy, cfg);
  EXPECT_EQ(a.source, "approx");
  EXPECT_GE(a.value, 1u);
  EXPECT_LE(a.value, 2000u);

  cfg.use_approx = false;
  const LambdaEstimate cert = lambda_underestimate(heavy, cfg);
  EXPECT_EQ(cert.source, "certificate");
  EXPECT_EQ(cert.value, 2000u);
}

TEST(OracleMincut, SwitchesAtTwentyVertices) {
  Engine eng = SeededRng(4).engine();
  const WeightedGraph small = gen::random_connected(20, 60, 1, 9, eng);
  EXPECT_EQ(oracle_mincut(small).value, stoer_wagner(small).value);
  const WeightedGraph big = gen::random_connected(40, 120, 1, 9, eng);
  EXPECT_EQ(oracle_mincut(big).value, stoer_wagner(big).value);
}

TEST(RunConfigCheck, Validate) {
  EXPECT_NO_THROW(RunConfig{}.validate());
  auto bad = [](auto mutate) {
    RunConfig c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(bad([](RunConfig& c) { c.epsilon_pack = 1.5; }).validate(), ParameterError);
  EXPECT_THROW(bad([](RunConfig& c) { c.epsilon_rq = 0.0; }).validate(), ParameterError);
  EXPECT_THROW(bad([](RunConfig& c) { c.scale = -1.0; }).validate(), ParameterError);
  EXPECT_THROW(bad([](RunConfig& c) { c.lambda_hint = 0; }).validate(), ParameterError);
  EXPECT_THROW(bad([](RunConfig& c) { c.trees = 0; }).validate(), ParameterError);
  EXPECT_THROW(bad([](RunConfig& c) { c.repeats = 0; }).validate(), ParameterError);
  EXPECT_THROW(bad([](RunConfig& c) { c.c_pack = 0.0; }).validate(), ParameterError);
  EXPECT_EQ(mode_name(Mode::approx), "approx");
  EXPECT_EQ(mode_name(Mode::oracle), "oracle");
}
