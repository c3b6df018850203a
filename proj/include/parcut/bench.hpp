#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "parcut/driver.hpp"
#include "parcut/graph.hpp"

namespace parcut {

struct BenchRecord {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string mode;
  Weight value = 0;
  double ms = 0.0;
  std::uint64_t cut_queries = 0;
  std::uint64_t forests = 0;
  std::uint64_t depth = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr const char* kBenchHeader = "family,n,m,seed,mode,value,ms,cut_queries,forests,depth";

std::string to_csv_row(const BenchRecord& r);
BenchRecord parse_csv_row(const std::string& line);

struct BenchCell {
  std::string family;  // cycle, gnm, cycle_chords, two_clique, grid, multigraph
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Mode mode = Mode::exact;
  double scale = 1.0;
};

WeightedGraph bench_graph(const std::string& family, std::size_t n, std::uint64_t seed);

BenchRecord run_cell(const BenchCell& cell);

// Runs every cell and writes the header plus one row per cell, in order.
std::vector<BenchRecord> bench_run(const std::vector<BenchCell>& cells, std::ostream& csv);

}  // namespace parcut
