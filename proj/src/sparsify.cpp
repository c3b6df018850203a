#include "parcut/sparsify.hpp"

#include <algorithm>
#include <cmath>

#include "parcut/errors.hpp"

namespace parcut {

Weight sample_binomial_truncated(Weight trials, double p, Weight cap, double u) {
  if (trials == 0 || p <= 0.0 || cap == 0) return 0;
  if (p >= 1.0) return std::min(trials, cap);
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double log_pmf = static_cast<double>(trials) * log_q;
  double cdf = std::exp(log_pmf);
  Weight k = 0;
  while (u >= cdf && k < trials && k < cap) {
    log_pmf += std::log(static_cast<double>(trials - k)) - std::log(static_cast<double>(k + 1)) +
               log_p - log_q;
    ++k;
    cdf += std::exp(log_pmf);
  }
  return k;
}

std::vector<Weight> sample_edge_weights(const WeightedGraph& g, const SkeletonParams& params,
                                        const SeededRng& rng) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw ParameterError("sampling probability outside [0,1]");
  const auto& edges = g.edges();
  const std::int64_t m = static_cast<std::int64_t>(edges.size());
  std::vector<Weight> out(edges.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < m; ++e) {
    Engine eng = rng.derive("skeleton", static_cast<std::uint64_t>(e)).engine();
    out[e] = sample_binomial_truncated(edges[e].w, params.p, params.cap, uniform01(eng));
  }
  return out;
}

WeightedGraph sample_skeleton(const WeightedGraph& g, const SkeletonParams& params,
                              const SeededRng& rng) {
  auto w = sample_edge_weights(g, params, rng);
  WeightedGraph out(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (w[e] > 0) out.add_edge(g.edge(e).u, g.edge(e).v, w[e]);
  }
  return out;
}

std::vector<Weight> certificate_weights(const WeightedGraph& g, Weight k) {
  if (k == 0) throw ParameterError("certificate parameter k must be positive");
  std::vector<Weight> residual(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) residual[e] = g.edge(e).w;
  std::vector<Weight> kept(g.num_edges(), 0);
  UnionFind uf(g.num_vertices());
  Weight remaining = k;
  while (remaining > 0) {
    auto forest = spanning_forest_edges(g, [&](EdgeId e) { return residual[e] > 0; }, uf);
    if (forest.empty()) break;
    // Same forest for `rounds` consecutive peels.
    Weight rounds = remaining;
    for (EdgeId e : forest) rounds = std::min(rounds, residual[e]);
    for (EdgeId e : forest) {
      residual[e] -= rounds;
      kept[e] += rounds;
    }
    remaining -= rounds;
  }
  return kept;
}

WeightedGraph k_certificate(const WeightedGraph& g, Weight k) {
  auto kept = certificate_weights(g, k);
  WeightedGraph out(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (kept[e] > 0) out.add_edge(g.edge(e).u, g.edge(e).v, kept[e]);
  }
  return out;
}

double skeleton_rate(std::size_t n, double epsilon, Weight lambda_est,
                     const SparsifierParams& params) {
  if (lambda_est == 0) throw ParameterError("lambda_est must be positive");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ParameterError("epsilon must lie in (0,1]");
  return 3.0 * (params.d + 2.0) * log_n(n) /
         (epsilon * epsilon * params.gamma * static_cast<double>(lambda_est));
}

double skeleton_probability(std::size_t n, double epsilon, Weight lambda_est,
                            const SparsifierParams& params) {
  return std::min(1.0, skeleton_rate(n, epsilon, lambda_est, params));
}

namespace {

Weight cap_for(double p, double epsilon, Weight lambda_est, const SparsifierParams& params) {
  double c = std::ceil(2.0 + (1.0 + epsilon) * params.slack * p * static_cast<double>(lambda_est));
  if (c >= static_cast<double>(kMaxEdgeWeight)) return kMaxEdgeWeight;
  return static_cast<Weight>(c);
}

}  // namespace

Sparsifier build_sparsifier_detail(const WeightedGraph& g, double epsilon, Weight lambda_est,
                                   const SeededRng& rng, const SparsifierParams& params) {
  Sparsifier s;
  s.p = skeleton_probability(g.num_vertices(), epsilon, lambda_est, params);
  s.cap = cap_for(s.p, epsilon, lambda_est, params);
  s.k = s.cap;
  WeightedGraph skeleton = sample_skeleton(g, SkeletonParams{s.p, s.cap, epsilon}, rng);
  s.h = k_certificate(skeleton, s.k);
  if (!is_connected(s.h) && is_connected(g)) {
    s.fallback = true;
    s.p = 1.0;
    s.cap = cap_for(1.0, epsilon, lambda_est, params);
    s.k = s.cap;
    s.h = k_certificate(sample_skeleton(g, SkeletonParams{1.0, s.cap, epsilon}, rng), s.k);
  }
  return s;
}

WeightedGraph build_sparsifier(const WeightedGraph& g, double epsilon, Weight lambda_est,
                               const SeededRng& rng, const SparsifierParams& params) {
  return build_sparsifier_detail(g, epsilon, lambda_est, rng, params).h;
}

}  // namespace parcut
