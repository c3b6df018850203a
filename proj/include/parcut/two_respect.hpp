#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "parcut/graph.hpp"
#include "parcut/range_query.hpp"
#include "parcut/tree_decomp.hpp"

namespace parcut {

enum class CandidateKind { none, single_edge, same_path, cross_path };

std::string_view kind_name(CandidateKind k);

// A cut given by one or two tree edges (lower endpoints, ascending).
struct CutCandidate {
  Weight value = kInfWeight;
  std::vector<Vertex> edges;
  CandidateKind kind = CandidateKind::none;

  bool valid() const noexcept { return kind != CandidateKind::none; }
};

// Order by (value, edge ids); invalid candidates sort last.
bool better(const CutCandidate& a, const CutCandidate& b);

CutCandidate make_candidate(Weight value, Vertex e, Vertex f, CandidateKind kind);

struct MongeResult {
  Weight value = kInfWeight;
  std::size_t row = 0;
  std::size_t col = 0;
  std::uint64_t queries = 0;
  std::size_t depth = 0;
  bool found = false;
};

// Minimum entry of a rows x cols matrix whose leftmost row minima move
// weakly right from row to row (M[i][j] + M[i+1][j+1] <= M[i][j+1] + M[i+1][j]).
// Recurses over the shorter side.
MongeResult monge_min(std::size_t rows, std::size_t cols,
                      const std::function<Weight(std::size_t, std::size_t)>& at);

struct SearchCount {
  std::uint64_t queries = 0;
  std::size_t depth = 0;
};

// Minimum cut(e_i, e_j), i < j, over a descending chain of tree edges.
CutCandidate single_path_min(std::span<const Vertex> path, const CutOracle& o,
                             SearchCount* count = nullptr);

struct InterestEndpoints {
  std::vector<Vertex> c;  // cross endpoint per vertex, kNoVertex if none
  std::vector<Vertex> d;  // down endpoint per vertex, kNoVertex if none
};

// Lowest vertex of the root path on which pred holds, found by descending
// the centroid tree. pred must hold exactly on a path starting at the root.
Vertex lowest_on_root_path(const RootedTree& t, const CentroidTree& ct,
                           const std::function<bool(Vertex)>& pred);

Vertex cross_endpoint(const CutOracle& o, const CentroidTree& ct, Vertex u);
Vertex down_endpoint(const CutOracle& o, const CentroidTree& ct, Vertex u);

InterestEndpoints interest_endpoints(const CutOracle& o, const CentroidTree& ct,
                                     const std::vector<bool>& eligible);

struct InterestTuple {
  std::uint32_t p;     // home path of e
  std::uint32_t q;     // path e is interested in
  Vertex e;
  std::uint32_t rank;  // position of e in p, root side first

  friend bool operator==(const InterestTuple&, const InterestTuple&) = default;
};

std::vector<InterestTuple> interest_tuples(const PathPartition& pp, const CutOracle& o,
                                           const InterestEndpoints& ep,
                                           const std::vector<bool>& eligible);

struct PairGroup {
  std::uint32_t p;
  std::vector<Vertex> r;  // edges of p interested in q, root side first
  std::uint32_t q;
  std::vector<Vertex> s;  // edges of q interested in p, root side first

  friend bool operator==(const PairGroup&, const PairGroup&) = default;
};

// Groups with p < q that have interest in both directions.
std::vector<PairGroup> group_pairs(std::vector<InterestTuple> tuples);

// Sub-block of a pair group whose entries are all of one shape: every row
// edge is an ancestor of every column edge (or the reverse), or all row and
// column subtrees are disjoint.
struct MongeBlock {
  std::vector<Vertex> rows;
  std::vector<Vertex> cols;
  bool nested = false;
};

std::vector<MongeBlock> split_group(const PairGroup& g, const CutOracle& o);

CutCandidate pair_min(const PairGroup& g, const CutOracle& o, SearchCount* count = nullptr);

struct PathAudit {
  std::size_t length;
  std::uint64_t queries;
};

struct GroupAudit {
  std::size_t r;
  std::size_t s;
  std::uint64_t queries;
};

struct TwoRespectStats {
  std::uint64_t cut_queries = 0;
  std::size_t depth = 0;
  std::size_t paths = 0;
  std::size_t tuples = 0;
  std::size_t groups = 0;
  std::size_t added_nodes = 0;
  std::vector<PathAudit> path_audits;
  std::vector<GroupAudit> group_audits;
};

struct TwoRespectResult {
  CutCandidate best;
  TwoRespectStats stats;
};

// Budgets for the audits (constant 4).
double single_path_budget(std::size_t length);
double pair_budget(std::size_t r, std::size_t s);

// Everything min_2_respecting builds for a tree, exposed for audits.
struct TwoRespectPlan {
  std::vector<bool> eligible;  // real tree edges of the binarized tree
  PathPartition pp;
  CentroidTree ct;
  std::vector<std::vector<Vertex>> real_paths;
  std::vector<PairGroup> groups;
  std::size_t tuples = 0;
};

// o must be built on bin.tree.
TwoRespectPlan plan_two_respecting(const Binarized& bin, const CutOracle& o);

TwoRespectResult min_2_respecting_detail(const WeightedGraph& g, const RootedTree& tree,
                                         double epsilon);

CutCandidate min_2_respecting(const WeightedGraph& g, const RootedTree& tree, double epsilon);

}  // namespace parcut
