#include "parcut/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>

#include "parcut/errors.hpp"

namespace parcut {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v, e.w);
}

EdgeId WeightedGraph::add_edge(Vertex u, Vertex v, Weight w) {
  if (u >= n_ || v >= n_) {
    throw IdError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                  std::to_string(v) + ") with n = " + std::to_string(n_));
  }
  if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
  if (w > kMaxEdgeWeight) throw RangeError("edge weight exceeds 2^62");
  if (total_ > std::numeric_limits<Weight>::max() - w) {
    throw RangeError("total edge weight overflows 64 bits");
  }
  total_ += w;
  edges_.push_back(Edge{u, v, w});
  return static_cast<EdgeId>(edges_.size() - 1);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  if (!tok.empty() && tok.front() == '-') {
    bool digits = tok.size() > 1;
    for (char c : tok.substr(1)) digits = digits && std::isdigit(static_cast<unsigned char>(c));
    if (digits) throw RangeError("line " + std::to_string(line) + ": negative " + what);
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw RangeError("line " + std::to_string(line) + ": " + what + " out of range");
  }
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  WeightedGraph g;
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = split_ws(raw);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (toks.size() != 3) throw ParseError(lineno, "header must be 'p <n> <m>'");
      n = parse_uint(toks[1], lineno, "vertex count");
      m = parse_uint(toks[2], lineno, "edge count");
      if (n > std::numeric_limits<Vertex>::max() - 1) throw RangeError("vertex count too large");
      g = WeightedGraph(n);
      have_header = true;
      continue;
    }
    if (toks[0] == "e") {
      if (!have_header) throw ParseError(lineno, "edge before header");
      if (toks.size() != 4) throw ParseError(lineno, "edge must be 'e <u> <v> <w>'");
      std::uint64_t u = parse_uint(toks[1], lineno, "vertex id");
      std::uint64_t v = parse_uint(toks[2], lineno, "vertex id");
      std::uint64_t w = parse_uint(toks[3], lineno, "weight");
      if (u >= n || v >= n) {
        throw IdError("line " + std::to_string(lineno) + ": vertex id out of range");
      }
      if (u == v) throw ParseError(lineno, "self-loop");
      if (w > kMaxEdgeWeight) {
        throw RangeError("line " + std::to_string(lineno) + ": weight exceeds 2^62");
      }
      if (g.num_edges() == m) throw ParseError(lineno, "more edges than declared");
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + std::string(toks[0]) + "'");
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (g.num_edges() != m) throw ParseError(lineno, "fewer edges than declared");
  return g;
}

WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_graph(in);
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

Weight total_weight(const WeightedGraph& g) { return g.total_weight(); }

std::vector<Weight> weighted_degrees(const WeightedGraph& g) {
  std::vector<Weight> deg(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    deg[e.u] += e.w;
    deg[e.v] += e.w;
  }
  return deg;
}

double log_n(std::size_t n) { return n < 2 ? 0.0 : std::log(static_cast<double>(n)); }

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { reset(); }

void UnionFind::reset() {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
  std::fill(rank_.begin(), rank_.end(), 0);
}

Vertex UnionFind::find(Vertex x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(Vertex a, Vertex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

Forest forest_from_edges(const WeightedGraph& g, const std::vector<EdgeId>& forest_edges) {
  const std::size_t n = g.num_vertices();
  Forest f;
  f.parent.assign(n, kNoVertex);
  f.edge_of.assign(n, kNoEdge);
  f.edges = forest_edges;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(n);
  for (EdgeId e : forest_edges) {
    const Edge& ed = g.edge(e);
    adj[ed.u].push_back({ed.v, e});
    adj[ed.v].push_back({ed.u, e});
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    ++f.components;
    seen[r] = true;
    stack.push_back(r);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (auto [y, e] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        f.parent[y] = x;
        f.edge_of[y] = e;
        stack.push_back(y);
      }
    }
  }
  return f;
}

std::vector<Vertex> component_labels(const WeightedGraph& g) {
  UnionFind uf(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (e.w > 0) uf.unite(e.u, e.v);
  }
  std::vector<Vertex> label(g.num_vertices(), kNoVertex);
  std::vector<Vertex> root_label(g.num_vertices(), kNoVertex);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Vertex r = uf.find(v);
    if (root_label[r] == kNoVertex) root_label[r] = v;
    label[v] = root_label[r];
  }
  return label;
}

bool is_connected(const WeightedGraph& g) {
  if (g.num_vertices() <= 1) return true;
  auto label = component_labels(g);
  for (Vertex l : label) {
    if (l != 0) return false;
  }
  return true;
}

Weight cut_value(const WeightedGraph& g, const std::vector<bool>& side) {
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) total += e.w;
  }
  return total;
}

}  // namespace parcut
