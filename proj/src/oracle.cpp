#include "parcut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "parcut/errors.hpp"

namespace parcut {

CutResult brute_force_mincut(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw ParameterError("minimum cut needs at least two vertices");
  if (n > kBruteForceMaxVertices) throw ParameterError("exhaustive oracle limited to 20 vertices");
  std::vector<std::vector<std::pair<Vertex, Weight>>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  // Vertex n-1 stays outside S; walk the other vertices in Gray-code order.
  std::vector<bool> in(n, false);
  Weight cut = 0;
  Weight best = kInfWeight;
  std::uint64_t best_mask = 0, mask = 0;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < limit; ++i) {
    const unsigned v = static_cast<unsigned>(std::countr_zero(i));
    in[v] = !in[v];
    mask ^= std::uint64_t{1} << v;
    for (auto [x, w] : adj[v]) {
      if (in[x] == in[v]) {
        cut -= w;
      } else {
        cut += w;
      }
    }
    if (cut < best) {
      best = cut;
      best_mask = mask;
    }
  }
  std::vector<bool> side(n, false);
  for (std::size_t v = 0; v + 1 < n; ++v) side[v] = (best_mask >> v) & 1u;
  CutResult r;
  r.value = best;
  r.partition = normalize_partition(side);
  r.stats.lambda_source = "oracle";
  return r;
}

CutResult stoer_wagner(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw ParameterError("minimum cut needs at least two vertices");
  std::vector<std::vector<Weight>> a(n, std::vector<Weight>(n, 0));
  for (const Edge& e : g.edges()) {
    a[e.u][e.v] += e.w;
    a[e.v][e.u] += e.w;
  }
  std::vector<std::vector<Vertex>> members(n);
  for (Vertex v = 0; v < n; ++v) members[v] = {v};
  std::vector<Vertex> alive(n);
  for (Vertex v = 0; v < n; ++v) alive[v] = v;
  Weight best = kInfWeight;
  std::vector<Vertex> best_side;
  std::vector<Weight> key(n);
  std::vector<bool> added(n);
  while (alive.size() > 1) {
    for (Vertex v : alive) {
      key[v] = 0;
      added[v] = false;
    }
    Vertex prev = alive[0], last = alive[0];
    for (std::size_t step = 0; step < alive.size(); ++step) {
      Vertex sel = kNoVertex;
      for (Vertex v : alive) {
        if (!added[v] && (sel == kNoVertex || key[v] > key[sel])) sel = v;
      }
      added[sel] = true;
      prev = last;
      last = sel;
      for (Vertex v : alive) {
        if (!added[v]) key[v] += a[sel][v];
      }
    }
    if (key[last] < best) {
      best = key[last];
      best_side = members[last];
    }
    // Merge last into prev.
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    for (Vertex v : alive) {
      a[prev][v] += a[last][v];
      a[v][prev] = a[prev][v];
    }
    a[prev][prev] = 0;
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  std::vector<bool> side(n, false);
  for (Vertex v : best_side) side[v] = true;
  CutResult r;
  r.value = best;
  r.partition = normalize_partition(side);
  r.stats.lambda_source = "oracle";
  return r;
}

namespace {

std::vector<std::uint32_t> depths(const RootedTree& t) {
  std::vector<std::uint32_t> d(t.size(), 0);
  std::vector<Vertex> stack{t.root};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex c : t.children[x]) {
      d[c] = d[x] + 1;
      stack.push_back(c);
    }
  }
  return d;
}

// Tree edges (lower endpoints) on the a-b path.
std::vector<Vertex> tree_path(const RootedTree& t, const std::vector<std::uint32_t>& depth, Vertex a,
                              Vertex b) {
  std::vector<Vertex> out;
  while (a != b) {
    if (depth[a] >= depth[b]) {
      out.push_back(a);
      a = t.parent[a];
    } else {
      out.push_back(b);
      b = t.parent[b];
    }
  }
  return out;
}

}  // namespace

Weight brute_force_cut_query(const WeightedGraph& g, const RootedTree& t, Vertex e, Vertex f) {
  const auto depth = depths(t);
  Weight total = 0;
  for (const Edge& ed : g.edges()) {
    const auto path = tree_path(t, depth, ed.u, ed.v);
    const bool has_e = std::find(path.begin(), path.end(), e) != path.end();
    const bool has_f = std::find(path.begin(), path.end(), f) != path.end();
    if (e == f ? has_e : has_e != has_f) total += ed.w;
  }
  return total;
}

Weight exhaustive_two_respecting(const WeightedGraph& g, const RootedTree& t) {
  Weight best = kInfWeight;
  for (Vertex e = 0; e < t.size(); ++e) {
    if (e == t.root) continue;
    for (Vertex f = e; f < t.size(); ++f) {
      if (f == t.root) continue;
      best = std::min(best, brute_force_cut_query(g, t, e, f));
    }
  }
  return best;
}

std::size_t tree_crossings(const RootedTree& t, const std::vector<bool>& side) {
  std::size_t c = 0;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (v != t.root && side[v] != side[t.parent[v]]) ++c;
  }
  return c;
}

std::vector<MongeViolation> monge_audit(std::size_t rows, std::size_t cols,
                                        const std::function<Weight(std::size_t, std::size_t)>& at,
                                        MongeMode mode) {
  std::vector<MongeViolation> out;
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (mode == MongeMode::partial && i + 1 >= j && i <= j + 1) continue;
      // a - b >= c - d  <=>  a + d >= b + c; sums can need 65 bits.
      __extension__ using u128 = unsigned __int128;
      const u128 lhs = static_cast<u128>(at(i, j)) + at(i + 1, j + 1);
      const u128 rhs = static_cast<u128>(at(i, j + 1)) + at(i + 1, j);
      if (lhs < rhs) out.push_back({i, j});
    }
  }
  return out;
}

}  // namespace parcut
