#include "parcut/reference.hpp"

#include <algorithm>
#include <cmath>

namespace parcut::reference {

std::vector<Weight> sample_edge_weights(const WeightedGraph& g, const SkeletonParams& params,
                                        const SeededRng& rng) {
  std::vector<Weight> out(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Engine eng = rng.derive("skeleton", e).engine();
    out[e] = sample_binomial_truncated(g.edge(e).w, params.p, params.cap, uniform01(eng));
  }
  return out;
}

Hierarchy build_hierarchy(const WeightedGraph& g, const HierarchyConstants& c, const SeededRng& rng) {
  const std::size_t k = layer_count(g.total_weight());
  Hierarchy h(g.num_edges(), k);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Weight w = g.edge(e).w;
    const std::size_t t = std::min(critical_layer(w, c), k);
    h.set_critical(e, t);
    Engine eng = rng.derive("hierarchy", e).engine();
    Weight x = w;
    if (t > 0) x = sample_binomial_truncated(w, std::ldexp(1.0, -static_cast<int>(t)), kInfWeight, uniform01(eng));
    for (std::size_t i = 0; i <= t; ++i) h.trunc_ref(e, i) = x;
    for (std::size_t i = t + 1; i <= k; ++i) {
      x = sample_binomial_truncated(x, 0.5, kInfWeight, uniform01(eng));
      h.trunc_ref(e, i) = x;
    }
  }
  return h;
}

Weight range_sum(const std::vector<Point2D>& pts, std::int64_t x1, std::int64_t x2, std::int64_t y1,
                 std::int64_t y2) {
  Weight total = 0;
  for (const Point2D& p : pts) {
    if (x1 <= p.x && p.x <= x2 && y1 <= p.y && p.y <= y2) total += p.w;
  }
  return total;
}

CutCandidate two_respecting_scan(const WeightedGraph& g, const RootedTree& t, double epsilon) {
  const CutOracle o(g, t, epsilon);
  CutCandidate best;
  for (Vertex e = 0; e < t.size(); ++e) {
    if (e == t.root) continue;
    CutCandidate c;
    c.value = o.cost(e);
    c.edges = {e};
    c.kind = CandidateKind::single_edge;
    if (better(c, best)) best = std::move(c);
    for (Vertex f = e + 1; f < t.size(); ++f) {
      if (f == t.root) continue;
      CutCandidate d = make_candidate(o.cut_query(e, f), e, f, CandidateKind::cross_path);
      if (better(d, best)) best = std::move(d);
    }
  }
  return best;
}

}  // namespace parcut::reference
