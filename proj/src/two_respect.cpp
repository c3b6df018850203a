#include "parcut/two_respect.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "parcut/errors.hpp"

namespace parcut {

std::string_view kind_name(CandidateKind k) {
  switch (k) {
    case CandidateKind::single_edge: return "single_edge";
    case CandidateKind::same_path: return "same_path";
    case CandidateKind::cross_path: return "cross_path";
    case CandidateKind::none: break;
  }
  return "none";
}

bool better(const CutCandidate& a, const CutCandidate& b) {
  if (a.valid() != b.valid()) return a.valid();
  if (a.value != b.value) return a.value < b.value;
  return a.edges < b.edges;
}

CutCandidate make_candidate(Weight value, Vertex e, Vertex f, CandidateKind kind) {
  CutCandidate c;
  c.value = value;
  c.kind = kind;
  if (e == f) c.edges = {e};
  else c.edges = {std::min(e, f), std::max(e, f)};
  return c;
}

namespace {

void monge_rows(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1, std::size_t depth,
                const std::function<Weight(std::size_t, std::size_t)>& at, MongeResult& res) {
  if (r0 >= r1) return;
  res.depth = std::max(res.depth, depth);
  const std::size_t mid = r0 + (r1 - r0) / 2;
  std::size_t arg = c0;
  Weight best = kInfWeight;
  for (std::size_t c = c0; c <= c1; ++c) {
    const Weight v = at(mid, c);
    ++res.queries;
    if (c == c0 || v < best) {
      best = v;
      arg = c;
    }
  }
  if (!res.found || best < res.value) {
    res.found = true;
    res.value = best;
    res.row = mid;
    res.col = arg;
  }
  monge_rows(r0, mid, c0, arg, depth + 1, at, res);
  monge_rows(mid + 1, r1, arg, c1, depth + 1, at, res);
}

}  // namespace

MongeResult monge_min(std::size_t rows, std::size_t cols,
                      const std::function<Weight(std::size_t, std::size_t)>& at) {
  MongeResult res;
  if (rows == 0 || cols == 0) return res;
  if (rows <= cols) {
    monge_rows(0, rows, 0, cols - 1, 1, at, res);
    return res;
  }
  monge_rows(0, cols, 0, rows - 1, 1, [&](std::size_t i, std::size_t j) { return at(j, i); }, res);
  std::swap(res.row, res.col);
  return res;
}

namespace {

void path_rec(std::span<const Vertex> path, std::size_t lo, std::size_t hi, std::size_t depth,
              const CutOracle& o, CutCandidate& best, SearchCount& count) {
  if (hi - lo < 2) return;
  count.depth = std::max(count.depth, depth);
  const std::size_t mid = lo + (hi - lo) / 2;
  // Rows are the upper half, columns the lower half taken bottom-up.
  auto at = [&](std::size_t i, std::size_t j) { return o.cut_query(path[lo + i], path[hi - 1 - j]); };
  MongeResult m = monge_min(mid - lo, hi - mid, at);
  count.queries += m.queries;
  count.depth = std::max(count.depth, depth + m.depth);
  CutCandidate c = make_candidate(m.value, path[lo + m.row], path[hi - 1 - m.col], CandidateKind::same_path);
  if (better(c, best)) best = std::move(c);
  path_rec(path, lo, mid, depth + 1, o, best, count);
  path_rec(path, mid, hi, depth + 1, o, best, count);
}

}  // namespace

CutCandidate single_path_min(std::span<const Vertex> path, const CutOracle& o, SearchCount* count) {
  CutCandidate best;
  SearchCount local;
  path_rec(path, 0, path.size(), 1, o, best, local);
  if (count) {
    count->queries += local.queries;
    count->depth = std::max(count->depth, local.depth);
  }
  return best;
}

Vertex lowest_on_root_path(const RootedTree& t, const CentroidTree& ct,
                           const std::function<bool(Vertex)>& pred) {
  if (!pred(t.root)) return kNoVertex;
  Vertex node = ct.root;
  while (true) {
    const std::size_t d = ct.level(node);
    if (pred(node)) {
      Vertex down = kNoVertex;
      for (Vertex ch : t.children[node]) {
        if (pred(ch)) {
          down = ch;
          break;
        }
      }
      if (down == kNoVertex) return node;
      node = ct.anc[down][d + 1];
    } else {
      node = ct.anc[t.parent[node]][d + 1];
    }
  }
}

Vertex cross_endpoint(const CutOracle& o, const CentroidTree& ct, Vertex u) {
  const PostorderIndex& idx = o.index();
  const Weight cu = o.cost(u);
  auto pred = [&](Vertex v) {
    if (idx.contains(u, v)) return false;
    Weight x = idx.contains(v, u) ? cu - o.down_cost(v, u) : o.cross_cost(u, v);
    return x > cu - x;
  };
  Vertex a = lowest_on_root_path(o.tree(), ct, pred);
  if (a == kNoVertex || idx.contains(a, u)) return kNoVertex;
  return a;
}

Vertex down_endpoint(const CutOracle& o, const CentroidTree& ct, Vertex u) {
  const PostorderIndex& idx = o.index();
  const Weight cu = o.cost(u);
  auto pred = [&](Vertex v) {
    if (idx.contains(v, u)) return true;
    if (!idx.contains(u, v)) return false;
    Weight x = o.down_cost(u, v);
    return x > cu - x;
  };
  Vertex a = lowest_on_root_path(o.tree(), ct, pred);
  return a == u ? kNoVertex : a;
}

InterestEndpoints interest_endpoints(const CutOracle& o, const CentroidTree& ct,
                                     const std::vector<bool>& eligible) {
  const std::size_t n = o.tree().size();
  InterestEndpoints ep;
  ep.c.assign(n, kNoVertex);
  ep.d.assign(n, kNoVertex);
  const std::int64_t sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < sn; ++i) {
    const Vertex u = static_cast<Vertex>(i);
    if (!eligible[u]) continue;
    ep.c[u] = cross_endpoint(o, ct, u);
    ep.d[u] = down_endpoint(o, ct, u);
  }
  return ep;
}

std::vector<InterestTuple> interest_tuples(const PathPartition& pp, const CutOracle& o,
                                           const InterestEndpoints& ep,
                                           const std::vector<bool>& eligible) {
  const RootedTree& t = o.tree();
  const PostorderIndex& idx = o.index();
  const std::size_t n = t.size();
  // Deepest eligible edge at or above each vertex within its own path.
  std::vector<Vertex> eligible_up(n, kNoVertex);
  for (const auto& path : pp.paths) {
    Vertex last = kNoVertex;
    for (Vertex v : path) {
      if (eligible[v]) last = v;
      eligible_up[v] = last;
    }
  }
  std::vector<std::vector<InterestTuple>> per(n);
  const std::int64_t sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < sn; ++i) {
    const Vertex u = static_cast<Vertex>(i);
    if (!eligible[u]) continue;
    const std::uint32_t p = pp.bough_of[u];
    auto& out = per[u];
    auto emit = [&](std::uint32_t q) { out.push_back({p, q, u, pp.position[u]}); };
    if (ep.c[u] != kNoVertex) {
      for (const PathHit& h : root_path_hits(pp, t, ep.c[u])) {
        if (h.path != p && !idx.contains(h.deepest, u)) emit(h.path);
      }
    }
    if (ep.d[u] != kNoVertex) {
      for (const PathHit& h : root_path_hits(pp, t, ep.d[u])) {
        const Vertex head = pp.head(h.path);
        if (h.path != p && head != u && idx.contains(u, head)) emit(h.path);
      }
    }
    const Weight cu = o.cost(u);
    const auto up = root_path_hits(pp, t, u);
    for (std::size_t k = 1; k < up.size(); ++k) {
      const Vertex y = eligible_up[up[k].deepest];
      if (y == kNoVertex) continue;
      const Weight x = o.down_cost(y, u);
      if (x > cu - x) emit(up[k].path);
    }
  }
  std::vector<InterestTuple> tuples;
  for (auto& v : per) tuples.insert(tuples.end(), v.begin(), v.end());
  return tuples;
}

std::vector<PairGroup> group_pairs(std::vector<InterestTuple> tuples) {
  auto key = [](const InterestTuple& t) {
    return std::make_tuple(std::min(t.p, t.q), std::max(t.p, t.q), t.p, t.rank, t.e);
  };
  std::sort(tuples.begin(), tuples.end(),
            [&](const InterestTuple& a, const InterestTuple& b) { return key(a) < key(b); });
  std::vector<PairGroup> out;
  std::size_t i = 0;
  while (i < tuples.size()) {
    const std::uint32_t lo = std::min(tuples[i].p, tuples[i].q);
    const std::uint32_t hi = std::max(tuples[i].p, tuples[i].q);
    PairGroup g{lo, {}, hi, {}};
    for (; i < tuples.size() && std::min(tuples[i].p, tuples[i].q) == lo &&
           std::max(tuples[i].p, tuples[i].q) == hi;
         ++i) {
      auto& side = tuples[i].p == lo ? g.r : g.s;
      if (side.empty() || side.back() != tuples[i].e) side.push_back(tuples[i].e);
    }
    if (!g.r.empty() && !g.s.empty()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<MongeBlock> split_group(const PairGroup& g, const CutOracle& o) {
  const PostorderIndex& idx = o.index();
  const Vertex top_r = g.r.front();
  const Vertex top_s = g.s.front();
  std::vector<MongeBlock> blocks;
  auto add = [&](std::vector<Vertex> rows, std::vector<Vertex> cols, bool nested) {
    if (!rows.empty() && !cols.empty()) blocks.push_back({std::move(rows), std::move(cols), nested});
  };
  // Rows above the branching point are ancestors of every column; rows
  // below it have subtrees disjoint from all columns (and symmetrically).
  std::size_t a = 0, b = 0;
  if (idx.contains(top_r, top_s)) {
    while (a < g.r.size() && idx.contains(g.r[a], top_s)) ++a;
  } else if (idx.contains(top_s, top_r)) {
    while (b < g.s.size() && idx.contains(g.s[b], top_r)) ++b;
  }
  if (a > 0) {
    add({g.r.begin(), g.r.begin() + a}, g.s, true);
    add({g.r.begin() + a, g.r.end()}, g.s, false);
  } else if (b > 0) {
    add(g.r, {g.s.begin(), g.s.begin() + b}, true);
    add(g.r, {g.s.begin() + b, g.s.end()}, false);
  } else {
    add(g.r, g.s, false);
  }
  return blocks;
}

CutCandidate pair_min(const PairGroup& g, const CutOracle& o, SearchCount* count) {
  CutCandidate best;
  if (g.r.empty() || g.s.empty()) return best;
  for (const MongeBlock& blk : split_group(g, o)) {
    const std::size_t nc = blk.cols.size();
    auto col = [&](std::size_t j) { return blk.nested ? blk.cols[nc - 1 - j] : blk.cols[j]; };
    auto at = [&](std::size_t i, std::size_t j) { return o.cut_query(blk.rows[i], col(j)); };
    MongeResult m = monge_min(blk.rows.size(), nc, at);
    if (count) {
      count->queries += m.queries;
      count->depth = std::max(count->depth, m.depth);
    }
    CutCandidate c = make_candidate(m.value, blk.rows[m.row], col(m.col), CandidateKind::cross_path);
    if (better(c, best)) best = std::move(c);
  }
  return best;
}

double single_path_budget(std::size_t length) {
  if (length < 2) return 0.0;
  const double l = static_cast<double>(length);
  return 4.0 * l * std::log2(l) * std::log2(l);
}

double pair_budget(std::size_t r, std::size_t s) {
  const double t = static_cast<double>(r + s);
  return 4.0 * t * std::log2(t + 1.0);
}

TwoRespectPlan plan_two_respecting(const Binarized& bin, const CutOracle& o) {
  const RootedTree& t = bin.tree;
  TwoRespectPlan plan;
  plan.eligible.assign(t.size(), false);
  for (Vertex v = 0; v < t.size(); ++v) plan.eligible[v] = v != t.root && !bin.is_virtual_edge(v);
  plan.pp = bough_decomposition(t);
  plan.ct = centroid_decomposition(t);
  for (const auto& path : plan.pp.paths) {
    std::vector<Vertex> real;
    for (Vertex v : path) {
      if (plan.eligible[v]) real.push_back(v);
    }
    plan.real_paths.push_back(std::move(real));
  }
  InterestEndpoints ep = interest_endpoints(o, plan.ct, plan.eligible);
  auto tuples = interest_tuples(plan.pp, o, ep, plan.eligible);
  plan.tuples = tuples.size();
  plan.groups = group_pairs(std::move(tuples));
  return plan;
}

TwoRespectResult min_2_respecting_detail(const WeightedGraph& g, const RootedTree& tree,
                                         double epsilon) {
  if (tree.size() != g.num_vertices()) throw ParameterError("tree must span the graph");
  TwoRespectResult res;
  if (tree.size() < 2) return res;
  const Binarized bin = binarize(tree);
  const CutOracle o(g, bin.tree, epsilon);
  const TwoRespectPlan plan = plan_two_respecting(bin, o);
  const std::size_t n = bin.tree.size();
  res.stats.added_nodes = bin.added_edges();
  res.stats.paths = plan.pp.paths.size();
  res.stats.tuples = plan.tuples;
  res.stats.groups = plan.groups.size();

  for (Vertex u = 0; u < n; ++u) {
    if (!plan.eligible[u]) continue;
    CutCandidate c;
    c.value = o.one_respecting_cost(u);
    c.edges = {u};
    c.kind = CandidateKind::single_edge;
    ++res.stats.cut_queries;
    if (better(c, res.best)) res.best = std::move(c);
  }

  const std::int64_t np = static_cast<std::int64_t>(plan.real_paths.size());
  std::vector<CutCandidate> path_best(np);
  std::vector<SearchCount> path_count(np);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < np; ++i) {
    path_best[i] = single_path_min(plan.real_paths[i], o, &path_count[i]);
  }
  const std::int64_t ng = static_cast<std::int64_t>(plan.groups.size());
  std::vector<CutCandidate> group_best(ng);
  std::vector<SearchCount> group_count(ng);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < ng; ++i) {
    group_best[i] = pair_min(plan.groups[i], o, &group_count[i]);
  }

  for (std::int64_t i = 0; i < np; ++i) {
    if (plan.real_paths[i].size() >= 2) {
      res.stats.path_audits.push_back({plan.real_paths[i].size(), path_count[i].queries});
    }
    res.stats.cut_queries += path_count[i].queries;
    res.stats.depth = std::max(res.stats.depth, path_count[i].depth);
    if (better(path_best[i], res.best)) res.best = path_best[i];
  }
  for (std::int64_t i = 0; i < ng; ++i) {
    res.stats.group_audits.push_back(
        {plan.groups[i].r.size(), plan.groups[i].s.size(), group_count[i].queries});
    res.stats.cut_queries += group_count[i].queries;
    res.stats.depth = std::max(res.stats.depth, group_count[i].depth);
    if (better(group_best[i], res.best)) res.best = group_best[i];
  }
  return res;
}

CutCandidate min_2_respecting(const WeightedGraph& g, const RootedTree& tree, double epsilon) {
  return min_2_respecting_detail(g, tree, epsilon).best;
}

}  // namespace parcut
