#include "parcut/approx_hierarchy.hpp"

#include <algorithm>
#include <cmath>

#include "parcut/driver.hpp"
#include "parcut/errors.hpp"
#include "parcut/oracle.hpp"
#include "parcut/sparsify.hpp"

namespace parcut {

HierarchyConstants HierarchyConstants::for_graph(std::size_t n, double scale) {
  HierarchyConstants c;
  c.scale = scale;
  c.logn = log_n(n);
  c.validate();
  return c;
}

void HierarchyConstants::validate() const {
  if (!(scale > 0.0)) throw ParameterError("constant scale must be positive");
  if (!(c_sf > 0.0 && c_count >= 2.0 * c_sf && c_crit >= c_count)) {
    throw ParameterError("hierarchy constants must satisfy c_crit >= c_count >= 2 c_sf > 0");
  }
  if (!(c_skeleton > 0.0)) throw ParameterError("c_skeleton must be positive");
}

Weight HierarchyConstants::count_budget() const {
  return static_cast<Weight>(std::max(1.0, std::ceil(c_count * scale * logn)));
}

Weight HierarchyConstants::forest_budget() const {
  return static_cast<Weight>(std::max(1.0, std::ceil(c_sf * scale * logn)));
}

std::size_t critical_layer(Weight w, const HierarchyConstants& c) {
  const long double thr = c.critical_threshold();
  std::size_t t = 0;
  while (t < 63 && static_cast<long double>(w) >= thr * std::ldexp(1.0L, static_cast<int>(t + 1))) {
    ++t;
  }
  return t;
}

std::size_t layer_count(Weight total) {
  std::size_t k = 0;
  while (k < 64 && (Weight{1} << k) < total) ++k;
  return k;
}

Hierarchy::Hierarchy(std::size_t num_edges, std::size_t k)
    : m_(num_edges), k_(k), mult_(num_edges * (k + 1), 0), crit_(num_edges, 0) {}

WeightedGraph Hierarchy::trunc_view(const WeightedGraph& g, std::size_t i) const {
  WeightedGraph out(g.num_vertices());
  for (EdgeId e = 0; e < m_; ++e) {
    if (Weight w = trunc(e, i)) out.add_edge(g.edge(e).u, g.edge(e).v, w);
  }
  return out;
}

WeightedGraph Hierarchy::exclusive_layer(const WeightedGraph& g, std::size_t i) const {
  WeightedGraph out(g.num_vertices());
  for (EdgeId e = 0; e < m_; ++e) {
    if (Weight w = exclusive(e, i)) out.add_edge(g.edge(e).u, g.edge(e).v, w);
  }
  return out;
}

Weight Hierarchy::materialized_copies() const {
  Weight total = 0;
  for (EdgeId e = 0; e < m_; ++e) {
    for (std::size_t i = crit_[e]; i <= k_; ++i) total += trunc(e, i);
  }
  return total;
}

Hierarchy build_truncated_exclusive_hierarchy(const WeightedGraph& g, const HierarchyConstants& c,
                                              const SeededRng& rng) {
  c.validate();
  const std::size_t k = layer_count(g.total_weight());
  Hierarchy h(g.num_edges(), k);
  const std::int64_t m = static_cast<std::int64_t>(g.num_edges());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t e = 0; e < m; ++e) {
    const EdgeId id = static_cast<EdgeId>(e);
    const Weight w = g.edge(id).w;
    const std::size_t t = std::min(critical_layer(w, c), k);
    h.set_critical(id, t);
    Engine eng = rng.derive("hierarchy", static_cast<std::uint64_t>(e)).engine();
    Weight x = t == 0 ? w
                      : sample_binomial_truncated(w, std::ldexp(1.0, -static_cast<int>(t)),
                                                  kInfWeight, uniform01(eng));
    for (std::size_t i = 0; i <= t; ++i) h.trunc_ref(id, i) = x;
    for (std::size_t i = t + 1; i <= k; ++i) {
      x = sample_binomial_truncated(x, 0.5, kInfWeight, uniform01(eng));
      h.trunc_ref(id, i) = x;
    }
  }
  return h;
}

CertificateHierarchy build_certificate_hierarchy(const Hierarchy& h, const WeightedGraph& g,
                                                 const HierarchyConstants& c) {
  const std::size_t m = h.num_edges();
  const Weight forest_budget = c.forest_budget();
  CertificateHierarchy out;
  out.layers.resize(h.k() + 1);
  out.participation.assign(m, 0);
  std::vector<Weight> count(m, c.count_budget());
  std::vector<Weight> residual(m);
  UnionFind uf(g.num_vertices());
  for (std::size_t step = 0; step <= h.k(); ++step) {
    const std::size_t i = h.k() - step;
    CertificateLayer& layer = out.layers[i];
    layer.i = i;
    layer.mult.assign(m, 0);
    for (EdgeId e = 0; e < m; ++e) residual[e] = h.exclusive(e, i);
    Weight forests = 0;
    while (forests < forest_budget) {
      for (EdgeId e = 0; e < m; ++e) {
        if (count[e] == 0) residual[e] = 0;
      }
      auto forest = spanning_forest_edges(g, [&](EdgeId e) { return residual[e] > 0; }, uf);
      if (forest.empty()) break;
      // Forest repeats until an edge or a budget runs out.
      Weight rounds = forest_budget - forests;
      for (EdgeId e : forest) rounds = std::min(rounds, residual[e]);
      for (EdgeId e = 0; e < m; ++e) {
        if (residual[e] > 0) rounds = std::min(rounds, count[e]);
      }
      for (EdgeId e = 0; e < m; ++e) {
        if (residual[e] > 0) count[e] -= rounds;
      }
      for (EdgeId e : forest) {
        residual[e] -= rounds;
        layer.mult[e] += rounds;
        out.participation[e] += rounds;
      }
      forests += rounds;
    }
    out.forests += forests;
  }
  return out;
}

WeightedGraph union_graph(const WeightedGraph& g, const CertificateHierarchy& certs, std::size_t i) {
  WeightedGraph out(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Weight w = 0;
    for (std::size_t j = i; j < certs.layers.size(); ++j) w += certs.layers[j].mult[e];
    if (w > 0) out.add_edge(g.edge(e).u, g.edge(e).v, w);
  }
  return out;
}

Weight mincut_of_union(const WeightedGraph& g, const CertificateHierarchy& certs, std::size_t i,
                       UnionSolver mode, const SeededRng& rng) {
  WeightedGraph u = union_graph(g, certs, i);
  if (u.num_vertices() < 2 || !is_connected(u)) return 0;
  if (mode == UnionSolver::oracle) return stoer_wagner(u).value;
  RunConfig cfg;
  cfg.seed = rng.derive("union", i).seed();
  cfg.use_approx = false;
  return exact_mincut(u, cfg).value;
}

ApproxResult approximate_mincut(const WeightedGraph& g, const HierarchyConstants& c,
                                const SeededRng& rng, UnionSolver mode) {
  ApproxResult res;
  if (g.num_vertices() < 2 || !is_connected(g)) return res;
  Hierarchy h = build_truncated_exclusive_hierarchy(g, c, rng.derive("truncated"));
  CertificateHierarchy certs = build_certificate_hierarchy(h, g, c);
  res.forests = certs.forests;
  const std::int64_t layers = static_cast<std::int64_t>(h.k() + 1);
  res.layer_cuts.assign(layers, 0);
  const SeededRng union_rng = rng.derive("unions");
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < layers; ++i) {
    res.layer_cuts[i] = mincut_of_union(g, certs, static_cast<std::size_t>(i), mode, union_rng);
  }
  const double bound = c.layer_bound();
  std::size_t s = h.k();
  for (std::size_t i = 0; i <= h.k(); ++i) {
    if (static_cast<double>(res.layer_cuts[i]) <= bound) {
      s = i;
      break;
    }
  }
  res.layer = s;
  res.estimate = res.layer_cuts[s] << s;
  return res;
}

}  // namespace parcut
