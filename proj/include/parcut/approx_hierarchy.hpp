#pragma once

#include <cstddef>
#include <vector>

#include "parcut/graph.hpp"
#include "parcut/rng.hpp"

namespace parcut {

struct HierarchyConstants {
  double c_skeleton = 100.0;
  double c_crit = 500.0;
  double c_count = 400.0;
  double c_sf = 200.0;
  double scale = 1.0;
  double logn = 0.0;

  static HierarchyConstants for_graph(std::size_t n, double scale = 1.0);

  void validate() const;

  double critical_threshold() const { return c_crit * scale * logn; }
  Weight count_budget() const;
  Weight forest_budget() const;
  // Layer min-cuts at or below this mark the skeleton layer.
  double layer_bound() const { return 1.25 * c_skeleton * scale * logn; }
};

std::size_t critical_layer(Weight w, const HierarchyConstants& c);

// Smallest k with 2^k >= total.
std::size_t layer_count(Weight total);

// Truncated hierarchy stored per edge: trunc(e, i) is the multiplicity of e
// in the i-th truncated layer, for i in [0, k].
class Hierarchy {
 public:
  Hierarchy() = default;
  Hierarchy(std::size_t num_edges, std::size_t k);

  std::size_t k() const noexcept { return k_; }
  std::size_t num_edges() const noexcept { return m_; }

  Weight trunc(EdgeId e, std::size_t i) const { return i > k_ ? 0 : mult_[e * (k_ + 1) + i]; }
  Weight exclusive(EdgeId e, std::size_t i) const { return trunc(e, i) - trunc(e, i + 1); }
  std::size_t critical(EdgeId e) const { return crit_[e]; }

  Weight& trunc_ref(EdgeId e, std::size_t i) { return mult_[e * (k_ + 1) + i]; }
  void set_critical(EdgeId e, std::size_t t) { crit_[e] = static_cast<std::uint32_t>(t); }

  WeightedGraph trunc_view(const WeightedGraph& g, std::size_t i) const;
  WeightedGraph exclusive_layer(const WeightedGraph& g, std::size_t i) const;

  // Copies produced by sampling at the critical layer and every descent below it.
  Weight materialized_copies() const;

 private:
  std::size_t m_ = 0;
  std::size_t k_ = 0;
  std::vector<Weight> mult_;
  std::vector<std::uint32_t> crit_;
};

Hierarchy build_truncated_exclusive_hierarchy(const WeightedGraph& g, const HierarchyConstants& c,
                                              const SeededRng& rng);

struct CertificateLayer {
  std::size_t i = 0;
  std::vector<Weight> mult;  // indexed by edge id of the source graph
};

struct CertificateHierarchy {
  std::vector<CertificateLayer> layers;  // layers[i].i == i
  std::vector<Weight> participation;     // forests each edge was part of
  std::size_t forests = 0;
};

CertificateHierarchy build_certificate_hierarchy(const Hierarchy& h, const WeightedGraph& g,
                                                 const HierarchyConstants& c);

enum class UnionSolver { exact, oracle };

WeightedGraph union_graph(const WeightedGraph& g, const CertificateHierarchy& certs, std::size_t i);

Weight mincut_of_union(const WeightedGraph& g, const CertificateHierarchy& certs, std::size_t i,
                       UnionSolver mode, const SeededRng& rng = SeededRng(0));

struct ApproxResult {
  Weight estimate = 0;
  std::size_t layer = 0;
  std::vector<Weight> layer_cuts;
  std::size_t forests = 0;
};

ApproxResult approximate_mincut(const WeightedGraph& g, const HierarchyConstants& c,
                                const SeededRng& rng, UnionSolver mode = UnionSolver::exact);

}  // namespace parcut
