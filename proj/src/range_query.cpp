#include "parcut/range_query.hpp"

#include <algorithm>
#include <cmath>

#include "parcut/errors.hpp"

namespace parcut {

std::size_t range_degree(std::size_t universe, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ParameterError("range-tree epsilon must lie in (0,1]");
  double b = std::floor(std::pow(static_cast<double>(std::max<std::size_t>(universe, 1)), epsilon) + 1e-9);
  return std::max<std::size_t>(2, static_cast<std::size_t>(b));
}

namespace {

std::vector<std::size_t> spans_for(std::size_t m, std::size_t b) {
  std::vector<std::size_t> span{1};
  while (span.back() < m) span.push_back(span.back() * b);
  return span;
}

}  // namespace

RangeTree1D::RangeTree1D(std::vector<Point1D> points, std::size_t degree) : b_(std::max<std::size_t>(2, degree)) {
  std::stable_sort(points.begin(), points.end(),
                   [](const Point1D& a, const Point1D& b) { return a.key < b.key; });
  const std::size_t m = points.size();
  if (m == 0) return;
  keys_.resize(m);
  span_ = spans_for(m, b_);
  level_w_.resize(span_.size());
  level_w_[0].resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    keys_[i] = points[i].key;
    level_w_[0][i] = points[i].w;
  }
  for (std::size_t L = 1; L < span_.size(); ++L) {
    const auto& below = level_w_[L - 1];
    auto& here = level_w_[L];
    here.assign((below.size() + b_ - 1) / b_, 0);
    for (std::size_t i = 0; i < below.size(); ++i) here[i / b_] += below[i];
  }
}

Weight RangeTree1D::descend(std::size_t level, std::size_t j, std::int64_t x1, std::int64_t x2,
                            QueryCounter* counter) const {
  if (counter) ++counter->visits;
  const std::size_t lo = j * span_[level];
  const std::size_t hi = std::min(lo + span_[level], keys_.size()) - 1;
  const std::int64_t kl = keys_[lo], kh = keys_[hi];
  if (kh < x1 || kl > x2) return 0;
  if (x1 <= kl && kh <= x2) return level_w_[level][j];
  Weight sum = 0;
  const std::size_t first = j * b_;
  const std::size_t last = std::min(first + b_, level_w_[level - 1].size());
  for (std::size_t c = first; c < last; ++c) sum += descend(level - 1, c, x1, x2, counter);
  return sum;
}

Weight RangeTree1D::query(std::int64_t x1, std::int64_t x2, QueryCounter* counter) const {
  if (x1 > x2 || keys_.empty()) return 0;
  return descend(level_w_.size() - 1, 0, x1, x2, counter);
}

RangeTree1D build_1d(std::vector<Point1D> points, double epsilon, std::size_t universe) {
  if (universe == 0) {
    universe = points.size();
    for (const auto& p : points) universe = std::max<std::size_t>(universe, p.key + 1);
  }
  return RangeTree1D(std::move(points), range_degree(universe, epsilon));
}

RangeTree2D::RangeTree2D(std::vector<Point2D> points, std::size_t degree) : b_(std::max<std::size_t>(2, degree)) {
  std::stable_sort(points.begin(), points.end(), [](const Point2D& a, const Point2D& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts_ = std::move(points);
  const std::size_t m = pts_.size();
  if (m == 0) return;
  span_ = spans_for(m, b_);
  aux_.resize(span_.size() - 1);
  for (std::size_t L = 1; L < span_.size(); ++L) {
    const std::size_t count = (m + span_[L] - 1) / span_[L];
    auto& level = aux_[L - 1];
    level.resize(count);
    const std::int64_t nodes = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t j = 0; j < nodes; ++j) {
      const std::size_t lo = static_cast<std::size_t>(j) * span_[L];
      const std::size_t hi = std::min(lo + span_[L], m);
      std::vector<Point1D> ys;
      ys.reserve(hi - lo);
      for (std::size_t i = lo; i < hi; ++i) ys.push_back({pts_[i].y, pts_[i].w});
      level[j] = RangeTree1D(std::move(ys), b_);
    }
  }
}

Weight RangeTree2D::descend(std::size_t level, std::size_t j, std::int64_t x1, std::int64_t x2,
                            std::int64_t y1, std::int64_t y2, QueryCounter* counter) const {
  if (counter) ++counter->visits;
  const std::size_t lo = j * span_[level];
  const std::size_t hi = std::min(lo + span_[level], pts_.size()) - 1;
  const std::int64_t kl = pts_[lo].x, kh = pts_[hi].x;
  if (kh < x1 || kl > x2) return 0;
  if (level == 0) {
    const std::int64_t y = pts_[lo].y;
    return (y1 <= y && y <= y2) ? pts_[lo].w : 0;
  }
  if (x1 <= kl && kh <= x2) return aux_[level - 1][j].query(y1, y2, counter);
  Weight sum = 0;
  const std::size_t first = j * b_;
  const std::size_t below = level == 1 ? pts_.size() : aux_[level - 2].size();
  const std::size_t last = std::min(first + b_, below);
  for (std::size_t c = first; c < last; ++c) sum += descend(level - 1, c, x1, x2, y1, y2, counter);
  return sum;
}

Weight RangeTree2D::query(std::int64_t x1, std::int64_t x2, std::int64_t y1, std::int64_t y2,
                          QueryCounter* counter) const {
  if (x1 > x2 || y1 > y2 || pts_.empty()) return 0;
  return descend(span_.size() - 1, 0, x1, x2, y1, y2, counter);
}

RangeTree2D build_2d(std::vector<Point2D> points, double epsilon, std::size_t universe) {
  if (universe == 0) {
    universe = points.size();
    for (const auto& p : points) universe = std::max<std::size_t>({universe, p.x + 1u, p.y + 1u});
  }
  return RangeTree2D(std::move(points), range_degree(universe, epsilon));
}

std::uint64_t query_budget_1d(std::size_t degree, std::size_t height) {
  return 4ull * degree * (height + 1);
}

std::uint64_t query_budget_2d(std::size_t degree, std::size_t height) {
  return 4ull * degree * degree * (height + 1) * (height + 1);
}

namespace {

RangeTree2D plane_of(const WeightedGraph& g, const RootedTree& t, const PostorderIndex& idx,
                     double epsilon) {
  if (t.size() < g.num_vertices()) throw ParameterError("tree does not span the graph");
  std::vector<Point2D> pts;
  pts.reserve(2 * g.num_edges());
  for (const Edge& e : g.edges()) {
    if (e.w == 0) continue;
    pts.push_back({idx.post[e.u], idx.post[e.v], e.w});
    pts.push_back({idx.post[e.v], idx.post[e.u], e.w});
  }
  return RangeTree2D(std::move(pts), range_degree(t.size(), epsilon));
}

}  // namespace

CutOracle::CutOracle(const WeightedGraph& g, const RootedTree& t, double epsilon)
    : tree_(t), idx_(root_and_index(t)), rt_(plane_of(g, t, idx_, epsilon)) {}

Weight CutOracle::rect(std::int64_t x1, std::int64_t x2, std::int64_t y1, std::int64_t y2,
                       QueryCounter* counter) const {
  return rt_.query(x1, x2, y1, y2, counter);
}

Weight CutOracle::cost(Vertex u, QueryCounter* counter) const {
  if (u >= idx_.n()) throw IdError("vertex out of range");
  if (u == tree_.root) throw ContractError("the root has no parent edge");
  const std::int64_t s = idx_.start[u], p = idx_.post[u], last = static_cast<std::int64_t>(idx_.n()) - 1;
  return rect(s, p, 0, s - 1, counter) + rect(s, p, p + 1, last, counter);
}

Weight CutOracle::cross_cost(Vertex u, Vertex v, QueryCounter* counter) const {
  if (!idx_.disjoint(u, v)) throw ContractError("cross_cost needs disjoint subtrees");
  return rect(idx_.start[v], idx_.post[v], idx_.start[u], idx_.post[u], counter);
}

Weight CutOracle::down_cost(Vertex u, Vertex v, QueryCounter* counter) const {
  if (!idx_.contains(u, v)) throw ContractError("down_cost needs v inside the subtree of u");
  const std::int64_t s = idx_.start[u], p = idx_.post[u], last = static_cast<std::int64_t>(idx_.n()) - 1;
  const std::int64_t sv = idx_.start[v], pv = idx_.post[v];
  return rect(sv, pv, 0, s - 1, counter) + rect(sv, pv, p + 1, last, counter);
}

Weight CutOracle::cut_query(Vertex e, Vertex f, QueryCounter* counter) const {
  if (e == f) throw ContractError("cut_query needs two distinct tree edges");
  const Weight ce = cost(e, counter);
  const Weight cf = cost(f, counter);
  Weight shared;
  if (idx_.contains(e, f)) {
    shared = down_cost(e, f, counter);
  } else if (idx_.contains(f, e)) {
    shared = down_cost(f, e, counter);
  } else {
    shared = cross_cost(e, f, counter);
  }
  return (ce - shared) + (cf - shared);
}

Weight CutOracle::one_respecting_cost(Vertex e, QueryCounter* counter) const { return cost(e, counter); }

bool CutOracle::cross_interested(Vertex e, Vertex f) const {
  const Weight x = cross_cost(e, f);
  return x > cost(e) - x;
}

bool CutOracle::down_interested(Vertex e, Vertex f) const {
  if (e == f) throw ContractError("down_interested needs f strictly below e");
  const Weight d = down_cost(e, f);
  return d > cost(e) - d;
}

CutOracle build_cut_oracle(const WeightedGraph& g, const RootedTree& t, double epsilon) {
  return CutOracle(g, t, epsilon);
}

}  // namespace parcut
