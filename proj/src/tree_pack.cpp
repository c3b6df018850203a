#include "parcut/tree_pack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "parcut/errors.hpp"

namespace parcut {

TreePacking greedy_tree_packing(const WeightedGraph& h, std::size_t rounds) {
  if (rounds == 0) throw ParameterError("packing needs at least one round");
  const std::size_t n = h.num_vertices();
  if (!is_connected(h)) throw ParameterError("tree packing requires a connected graph");
  TreePacking out;
  out.loads.assign(h.num_edges(), 0);
  std::vector<EdgeId> order;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (h.edge(e).w > 0) order.push_back(e);
  }
  UnionFind uf(n);
  for (std::size_t r = 0; r < rounds; ++r) {
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      return out.loads[a] != out.loads[b] ? out.loads[a] < out.loads[b] : a < b;
    });
    uf.reset();
    std::vector<EdgeId> tree;
    bool over = false;
    for (EdgeId e : order) {
      if (tree.size() + 1 == n) break;
      if (!uf.unite(h.edge(e).u, h.edge(e).v)) continue;
      if (out.loads[e] + 1 > h.edge(e).w) {
        over = true;
        break;
      }
      tree.push_back(e);
    }
    if (over) break;
    for (EdgeId e : tree) ++out.loads[e];
    std::sort(tree.begin(), tree.end());
    out.trees.push_back(std::move(tree));
  }
  return out;
}

std::size_t packing_rounds(std::size_t n, const PackParams& params) {
  if (params.rounds) return std::max<std::size_t>(1, *params.rounds);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(params.c_pack * log_n(n))));
}

RootedTree rooted_tree_of(const WeightedGraph& h, const std::vector<EdgeId>& tree_edges,
                          Vertex root) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(tree_edges.size());
  for (EdgeId e : tree_edges) pairs.push_back({h.edge(e).u, h.edge(e).v});
  return RootedTree::from_edges(h.num_vertices(), pairs, root);
}

PackedTrees pack_for_mincut_detail(const WeightedGraph& g, double epsilon, Weight lambda_est,
                                   const SeededRng& rng, const PackParams& params) {
  if (!is_connected(g)) throw ParameterError("tree packing requires a connected graph");
  PackedTrees out;
  out.sparsifier = build_sparsifier_detail(g, epsilon, lambda_est, rng.derive("sparsifier"),
                                           params.sparsifier);
  const WeightedGraph& h = out.sparsifier.h;
  const std::size_t rounds = packing_rounds(g.num_vertices(), params);
  const double rate = skeleton_rate(g.num_vertices(), epsilon, lambda_est, params.sparsifier);
  if (params.replicate && rate > 1.0) {
    Weight heaviest = 1;
    for (const Edge& e : h.edges()) heaviest = std::max(heaviest, e.w);
    const double r = std::min(std::ceil(rate), static_cast<double>(rounds));
    out.replication = std::max<Weight>(1, std::min<Weight>(static_cast<Weight>(r), kMaxEdgeWeight / heaviest));
  }
  if (out.replication > 1) {
    WeightedGraph copies(h.num_vertices());
    for (const Edge& e : h.edges()) copies.add_edge(e.u, e.v, e.w * out.replication);
    out.packing = greedy_tree_packing(copies, rounds);
  } else {
    out.packing = greedy_tree_packing(h, rounds);
  }
  for (const auto& t : out.packing.trees) out.trees.push_back(rooted_tree_of(h, t));
  return out;
}

std::vector<RootedTree> pack_for_mincut(const WeightedGraph& g, double epsilon, Weight lambda_est,
                                        const SeededRng& rng, const PackParams& params) {
  return pack_for_mincut_detail(g, epsilon, lambda_est, rng, params).trees;
}

}  // namespace parcut
