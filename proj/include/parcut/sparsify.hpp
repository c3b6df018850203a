#pragma once

#include <vector>

#include "parcut/graph.hpp"
#include "parcut/rng.hpp"

namespace parcut {

struct SkeletonParams {
  double p = 1.0;
  Weight cap = kInfWeight;
  double epsilon = 1.0;
};

struct SparsifierParams {
  double d = 2.0;
  double gamma = 1.0;
  // Multiplier on p * lambda_est when sizing the weight cap and certificate.
  double slack = 3.0;
};

// Inverse-transform draw from Binomial(trials, p) given a uniform u in
// [0,1), walking the CDF upward from 0 and stopping at cap.
Weight sample_binomial_truncated(Weight trials, double p, Weight cap, double u);

// Sampled weight per input edge (same ids as g, zeros kept).
std::vector<Weight> sample_edge_weights(const WeightedGraph& g, const SkeletonParams& params,
                                        const SeededRng& rng);

WeightedGraph sample_skeleton(const WeightedGraph& g, const SkeletonParams& params,
                              const SeededRng& rng);

// Forest-peeling certificate: the union of k successive spanning forests of
// the multigraph view, with multiplicities as weights. Output edge ids
// match g's edge ids; edges used by no forest keep weight 0.
std::vector<Weight> certificate_weights(const WeightedGraph& g, Weight k);

WeightedGraph k_certificate(const WeightedGraph& g, Weight k);

struct Sparsifier {
  WeightedGraph h;
  double p = 1.0;
  Weight cap = 0;
  Weight k = 0;
  bool fallback = false;  // sampled graph was disconnected; used p = 1
};

// Unclamped sampling rate; values above 1 mean the graph is too light to sample.
double skeleton_rate(std::size_t n, double epsilon, Weight lambda_est,
                     const SparsifierParams& params = {});

double skeleton_probability(std::size_t n, double epsilon, Weight lambda_est,
                            const SparsifierParams& params = {});

Sparsifier build_sparsifier_detail(const WeightedGraph& g, double epsilon, Weight lambda_est,
                                   const SeededRng& rng, const SparsifierParams& params = {});

WeightedGraph build_sparsifier(const WeightedGraph& g, double epsilon, Weight lambda_est,
                               const SeededRng& rng, const SparsifierParams& params = {});

}  // namespace parcut
