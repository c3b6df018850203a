#include "parcut/tree_decomp.hpp"

#include <algorithm>
#include <string>

#include "parcut/errors.hpp"

namespace parcut {

RootedTree RootedTree::from_parents(std::vector<Vertex> parent, Vertex root) {
  const std::size_t n = parent.size();
  if (root >= n) throw IdError("tree root out of range");
  if (parent[root] != kNoVertex) throw ParameterError("root must have no parent");
  RootedTree t;
  t.root = root;
  t.parent = std::move(parent);
  t.children.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    if (v == root) continue;
    if (t.parent[v] >= n) throw ParameterError("vertex " + std::to_string(v) + " has no parent");
    t.children[t.parent[v]].push_back(v);
  }
  std::vector<Vertex> stack{root};
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex c : t.children[x]) stack.push_back(c);
  }
  if (reached != n) throw ParameterError("parent array does not form a tree");
  return t;
}

RootedTree RootedTree::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                                  Vertex root) {
  if (n == 0) throw ParameterError("empty tree");
  if (edges.size() + 1 != n) throw ParameterError("spanning tree needs n - 1 edges");
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw IdError("tree edge endpoint out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue{root};
  seen[root] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Vertex x = queue[h];
    for (Vertex y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (queue.size() != n) throw ParameterError("tree edges do not span the vertex set");
  return from_parents(std::move(parent), root);
}

PostorderIndex root_and_index(const RootedTree& t) {
  const std::size_t n = t.size();
  PostorderIndex idx;
  idx.post.assign(n, 0);
  idx.size.assign(n, 1);
  idx.start.assign(n, 0);
  idx.order.assign(n, 0);
  idx.depth.assign(n, 0);
  if (n == 0) return idx;
  std::vector<std::pair<Vertex, std::size_t>> stack{{t.root, 0}};
  std::uint32_t next = 0;
  while (!stack.empty()) {
    auto& [x, ci] = stack.back();
    if (ci < t.children[x].size()) {
      Vertex c = t.children[x][ci++];
      idx.depth[c] = idx.depth[x] + 1;
      stack.push_back({c, 0});
      continue;
    }
    idx.post[x] = next;
    idx.order[next] = x;
    ++next;
    if (t.parent[x] != kNoVertex) idx.size[t.parent[x]] += idx.size[x];
    stack.pop_back();
  }
  for (Vertex v = 0; v < n; ++v) idx.start[v] = idx.post[v] + 1 - idx.size[v];
  return idx;
}

PathPartition bough_decomposition(const RootedTree& t) {
  const std::size_t n = t.size();
  PathPartition pp;
  pp.bough_of.assign(n, kNoPath);
  pp.position.assign(n, 0);
  std::vector<std::uint32_t> remaining(n);
  for (Vertex v = 0; v < n; ++v) remaining[v] = static_cast<std::uint32_t>(t.children[v].size());
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (v != t.root && remaining[v] == 0) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    ++pp.phases;
    std::vector<Vertex> tops;
    for (Vertex leaf : leaves) {
      std::vector<Vertex> chain{leaf};
      Vertex x = t.parent[leaf];
      while (x != t.root && remaining[x] == 1) {
        chain.push_back(x);
        x = t.parent[x];
      }
      std::reverse(chain.begin(), chain.end());
      const auto id = static_cast<std::uint32_t>(pp.paths.size());
      for (std::uint32_t i = 0; i < chain.size(); ++i) {
        pp.bough_of[chain[i]] = id;
        pp.position[chain[i]] = i;
      }
      pp.paths.push_back(std::move(chain));
      tops.push_back(x);
    }
    std::vector<Vertex> next;
    for (Vertex x : tops) {
      if (--remaining[x] == 0 && x != t.root) next.push_back(x);
    }
    std::sort(next.begin(), next.end());
    leaves = std::move(next);
  }
  return pp;
}

std::vector<PathHit> root_path_hits(const PathPartition& pp, const RootedTree& t, Vertex u) {
  std::vector<PathHit> out;
  Vertex v = u;
  while (v != t.root) {
    std::uint32_t p = pp.bough_of[v];
    out.push_back({p, v});
    v = t.parent[pp.head(p)];
  }
  return out;
}

std::vector<std::uint32_t> root_paths(const PathPartition& pp, const RootedTree& t, Vertex u) {
  std::vector<std::uint32_t> out;
  for (const PathHit& h : root_path_hits(pp, t, u)) out.push_back(h.path);
  return out;
}

Binarized binarize(const RootedTree& t, std::span<const Weight> weights) {
  const std::size_t n = t.size();
  if (weights.size() != n) throw ParameterError("binarize needs one weight per vertex");
  std::size_t extra = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (t.children[v].size() > 2) extra += t.children[v].size() - 2;
  }
  std::vector<Vertex> parent(t.parent);
  parent.resize(n + extra, kNoVertex);
  Binarized b;
  b.original_size = n;
  b.weight.assign(weights.begin(), weights.end());
  b.weight.resize(n + extra, kInfWeight);
  b.origin.resize(n + extra);
  for (Vertex v = 0; v < n; ++v) b.origin[v] = v;
  Vertex next = static_cast<Vertex>(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& ch = t.children[v];
    const std::size_t d = ch.size();
    if (d <= 2) continue;
    // v keeps ch[0] and the first added node; each added node keeps one
    // child and the next added node; the last keeps two children.
    Vertex hold = v;
    for (std::size_t j = 0; j + 2 < d; ++j) {
      parent[ch[j]] = hold;
      Vertex x = next++;
      parent[x] = hold;
      b.origin[x] = v;
      hold = x;
    }
    parent[ch[d - 2]] = hold;
    parent[ch[d - 1]] = hold;
  }
  b.tree = RootedTree::from_parents(std::move(parent), t.root);
  return b;
}

Binarized binarize(const RootedTree& t) {
  std::vector<Weight> w(t.size(), 1);
  if (!w.empty()) w[t.root] = 0;
  return binarize(t, w);
}

CentroidTree centroid_decomposition(const RootedTree& t) {
  const std::size_t n = t.size();
  CentroidTree ct;
  ct.anc.assign(n, {});
  ct.component_size.assign(n, 0);
  if (n == 0) return ct;
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    if (t.parent[v] != kNoVertex) {
      adj[v].push_back(t.parent[v]);
      adj[t.parent[v]].push_back(v);
    }
  }
  std::vector<bool> removed(n, false);
  std::vector<std::uint32_t> sub(n, 0);
  std::vector<Vertex> bfs_parent(n, kNoVertex);
  std::vector<Vertex> pending{t.root};
  std::vector<Vertex> comp;
  while (!pending.empty()) {
    Vertex s = pending.back();
    pending.pop_back();
    comp.assign(1, s);
    bfs_parent[s] = kNoVertex;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      Vertex x = comp[h];
      for (Vertex y : adj[x]) {
        if (removed[y] || y == bfs_parent[x]) continue;
        bfs_parent[y] = x;
        comp.push_back(y);
      }
    }
    const std::size_t size = comp.size();
    for (auto it = comp.rbegin(); it != comp.rend(); ++it) {
      sub[*it] = 1;
      for (Vertex y : adj[*it]) {
        if (!removed[y] && y != bfs_parent[*it]) sub[*it] += sub[y];
      }
    }
    Vertex best = kNoVertex;
    for (Vertex x : comp) {
      std::size_t largest = size - sub[x];
      for (Vertex y : adj[x]) {
        if (!removed[y] && y != bfs_parent[x]) largest = std::max<std::size_t>(largest, sub[y]);
      }
      if (2 * largest <= size && (best == kNoVertex || x < best)) best = x;
    }
    for (Vertex x : comp) ct.anc[x].push_back(best);
    ct.component_size[best] = size;
    if (ct.root == kNoVertex) ct.root = best;
    ct.depth = std::max(ct.depth, ct.anc[best].size());
    removed[best] = true;
    for (Vertex y : adj[best]) {
      if (!removed[y]) pending.push_back(y);
    }
  }
  return ct;
}

}  // namespace parcut
