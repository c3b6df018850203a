#include "parcut/driver.hpp"

#include <algorithm>

#include "parcut/errors.hpp"
#include "parcut/oracle.hpp"
#include "parcut/sparsify.hpp"
#include "parcut/tree_pack.hpp"

namespace parcut {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::approx: return "approx";
    case Mode::exact: return "exact";
    case Mode::oracle: return "oracle";
  }
  return "exact";
}

void RunConfig::validate() const {
  if (!(epsilon_pack > 0.0 && epsilon_pack <= 1.0)) throw ParameterError("eps-pack must lie in (0,1]");
  if (!(epsilon_rq > 0.0 && epsilon_rq <= 1.0)) throw ParameterError("eps-rq must lie in (0,1]");
  if (!(scale > 0.0)) throw ParameterError("scale must be positive");
  if (lambda_hint && *lambda_hint == 0) throw ParameterError("lambda hint must be positive");
  if (trees && *trees == 0) throw ParameterError("tree count must be positive");
  if (repeats == 0) throw ParameterError("repeat count must be positive");
  if (!(c_pack > 0.0)) throw ParameterError("c_pack must be positive");
}

std::vector<Vertex> normalize_partition(const std::vector<bool>& side) {
  const std::size_t n = side.size();
  const std::size_t inside = static_cast<std::size_t>(std::count(side.begin(), side.end(), true));
  bool pick;
  if (2 * inside != n) {
    pick = 2 * inside < n;
  } else {
    pick = n > 0 && side[0];
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == pick) out.push_back(v);
  }
  return out;
}

std::vector<bool> side_of(std::size_t n, const std::vector<Vertex>& partition) {
  std::vector<bool> side(n, false);
  for (Vertex v : partition) side[v] = true;
  return side;
}

LambdaEstimate lambda_underestimate(const WeightedGraph& g, const RunConfig& cfg) {
  if (cfg.lambda_hint) return {*cfg.lambda_hint, "hint"};
  const auto deg = weighted_degrees(g);
  const Weight min_deg = *std::min_element(deg.begin(), deg.end());
  const HierarchyConstants c = HierarchyConstants::for_graph(g.num_vertices(), cfg.scale);
  if (cfg.use_approx && static_cast<double>(min_deg) >= c.c_skeleton * c.scale * c.logn) {
    ApproxResult a = approximate_mincut(g, c, SeededRng(cfg.seed).derive("approx"));
    if (a.estimate >= 2) return {a.estimate / 2, "approx"};
  }
  const Weight lambda = stoer_wagner(k_certificate(g, std::max<Weight>(1, min_deg))).value;
  return {std::max<Weight>(1, lambda), "certificate"};
}

std::vector<bool> recover_partition(const RootedTree& tree, const CutCandidate& c) {
  const PostorderIndex idx = root_and_index(tree);
  std::vector<bool> side(tree.size(), false);
  if (c.edges.empty()) return side;
  auto mark = [&](Vertex e, bool value) {
    for (std::uint32_t i = idx.start[e]; i <= idx.post[e]; ++i) side[idx.order[i]] = value;
  };
  if (c.edges.size() == 1) {
    mark(c.edges[0], true);
    return side;
  }
  const Vertex e = c.edges[0], f = c.edges[1];
  if (idx.contains(e, f)) {
    mark(e, true);
    mark(f, false);
  } else if (idx.contains(f, e)) {
    mark(f, true);
    mark(e, false);
  } else {
    mark(e, true);
    mark(f, true);
  }
  return side;
}

CutResult oracle_mincut(const WeightedGraph& g) {
  if (g.num_vertices() <= kBruteForceMaxVertices) return brute_force_mincut(g);
  return stoer_wagner(g);
}

CutResult exact_mincut(const WeightedGraph& g, const RunConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  if (n < 2) throw ParameterError("minimum cut needs at least two vertices");
  CutResult res;
  res.seed = cfg.seed;
  if (!is_connected(g)) {
    const auto label = component_labels(g);
    std::vector<bool> side(n);
    for (Vertex v = 0; v < n; ++v) side[v] = label[v] == label[0];
    res.value = 0;
    res.partition = normalize_partition(side);
    res.stats.lambda_source = "disconnected";
    return res;
  }
  const SeededRng rng(cfg.seed);
  const LambdaEstimate lam = lambda_underestimate(g, cfg);
  res.stats.lambda_est = lam.value;
  res.stats.lambda_source = lam.source;

  PackParams pack;
  pack.c_pack = cfg.c_pack;
  pack.rounds = cfg.trees;
  std::vector<RootedTree> trees;
  for (std::size_t r = 0; r < cfg.repeats; ++r) {
    PackedTrees packed =
        pack_for_mincut_detail(g, cfg.epsilon_pack, lam.value, rng.derive("repeat", r), pack);
    res.stats.forests += packed.packing.trees.size();
    res.stats.sample_p = packed.sparsifier.p;
    res.stats.sparsifier_fallback = res.stats.sparsifier_fallback || packed.sparsifier.fallback;
    for (auto& t : packed.trees) trees.push_back(std::move(t));
  }
  res.stats.trees = trees.size();

  const std::int64_t nt = static_cast<std::int64_t>(trees.size());
  std::vector<TwoRespectResult> per(nt);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < nt; ++i) per[i] = min_2_respecting_detail(g, trees[i], cfg.epsilon_rq);

  std::size_t best = 0;
  for (std::int64_t i = 0; i < nt; ++i) {
    res.stats.cut_queries += per[i].stats.cut_queries;
    res.stats.depth = std::max(res.stats.depth, per[i].stats.depth);
    res.stats.groups += per[i].stats.groups;
    res.stats.tuples += per[i].stats.tuples;
    if (per[i].best.value < per[best].best.value) best = static_cast<std::size_t>(i);
  }
  const RootedTree& tree = trees[best];
  res.witness = per[best].best;
  res.tree = best;
  res.value = res.witness.value;
  const auto side = recover_partition(tree, res.witness);
  if (cut_value(g, side) != res.value) throw Error("recovered partition does not realize the cut value");
  res.partition = normalize_partition(side);
  for (Vertex e : res.witness.edges) res.tree_edges.push_back({e, tree.parent[e]});
  return res;
}

}  // namespace parcut
