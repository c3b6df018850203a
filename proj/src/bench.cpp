#include "parcut/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "parcut/errors.hpp"
#include "parcut/generators.hpp"

namespace parcut {

std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream out;
  out << r.family << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.mode << ',' << r.value << ','
      << std::setprecision(17) << r.ms << ',' << r.cut_queries << ',' << r.forests << ',' << r.depth;
  return out.str();
}

BenchRecord parse_csv_row(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) f.push_back(cur);
  if (f.size() != 10) throw ParseError(1, "bench row needs 10 fields");
  BenchRecord r;
  try {
    r.family = f[0];
    r.n = std::stoull(f[1]);
    r.m = std::stoull(f[2]);
    r.seed = std::stoull(f[3]);
    r.mode = f[4];
    r.value = std::stoull(f[5]);
    r.ms = std::stod(f[6]);
    r.cut_queries = std::stoull(f[7]);
    r.forests = std::stoull(f[8]);
    r.depth = std::stoull(f[9]);
  } catch (const std::logic_error&) {
    throw ParseError(1, "malformed bench row");
  }
  return r;
}

WeightedGraph bench_graph(const std::string& family, std::size_t n, std::uint64_t seed) {
  Engine eng = SeededRng(seed).derive("bench-graph").engine();
  if (family == "gnm") return gen::random_connected(n, 4 * n, 1, 10, eng);
  if (family == "cycle") return gen::cycle(n, 1);
  if (family == "cycle_chords") return gen::cycle_with_chords(n, n / 2, 1, 10, eng);
  if (family == "two_clique") return gen::two_clique_bridge(std::max<std::size_t>(2, n / 2), 3, 1);
  if (family == "grid") {
    const auto side = static_cast<std::size_t>(std::max(2.0, std::floor(std::sqrt(static_cast<double>(n)))));
    return gen::grid(side, side, 1);
  }
  if (family == "multigraph") return gen::circulant(std::max<std::size_t>(n, 9), 4, 250);
  throw ParameterError("unknown graph family '" + family + "'");
}

BenchRecord run_cell(const BenchCell& cell) {
  const WeightedGraph g = bench_graph(cell.family, cell.n, cell.seed);
  BenchRecord r;
  r.family = cell.family;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.seed = cell.seed;
  r.mode = mode_name(cell.mode);
  const auto t0 = std::chrono::steady_clock::now();
  if (cell.mode == Mode::approx) {
    const auto a = approximate_mincut(g, HierarchyConstants::for_graph(g.num_vertices(), cell.scale),
                                      SeededRng(cell.seed));
    r.value = a.estimate;
    r.forests = a.forests;
    r.depth = a.layer;
  } else if (cell.mode == Mode::oracle) {
    r.value = oracle_mincut(g).value;
  } else {
    RunConfig cfg;
    cfg.seed = cell.seed;
    cfg.scale = cell.scale;
    const CutResult c = exact_mincut(g, cfg);
    r.value = c.value;
    r.cut_queries = c.stats.cut_queries;
    r.forests = c.stats.forests;
    r.depth = c.stats.depth;
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<BenchRecord> bench_run(const std::vector<BenchCell>& cells, std::ostream& csv) {
  for (const auto& c : cells) {
    if (c.family != "cycle" && c.family != "gnm" && c.family != "cycle_chords" && c.family != "two_clique" &&
        c.family != "grid" && c.family != "multigraph") {
      throw ParameterError("unknown graph family '" + c.family + "'");
    }
  }
  const std::int64_t nc = static_cast<std::int64_t>(cells.size());
  std::vector<BenchRecord> rows(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < nc; ++i) rows[i] = run_cell(cells[i]);
  csv << kBenchHeader << '\n';
  for (const auto& r : rows) csv << to_csv_row(r) << '\n';
  return rows;
}

}  // namespace parcut
