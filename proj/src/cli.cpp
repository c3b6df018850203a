#include "parcut/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <vector>

#include "parcut/errors.hpp"
#include "parcut/graph.hpp"

namespace parcut {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json stats_json(const CutStats& s) {
  ordered_json j;
  j["cut_queries"] = s.cut_queries;
  j["forests"] = s.forests;
  j["depth"] = s.depth;
  j["trees"] = s.trees;
  j["groups"] = s.groups;
  j["tuples"] = s.tuples;
  j["lambda_est"] = s.lambda_est;
  j["lambda_source"] = s.lambda_source;
  j["sample_p"] = s.sample_p;
  j["sparsifier_fallback"] = s.sparsifier_fallback;
  return j;
}

}  // namespace

std::string result_json(const CutResult& r, Mode mode, bool with_stats) {
  ordered_json j;
  j["schema"] = 1;
  j["mode"] = mode_name(mode);
  j["value"] = r.value;
  j["partition"] = r.partition;
  if (r.tree) {
    j["tree"] = *r.tree;
  } else {
    j["tree"] = nullptr;
  }
  ordered_json edges = ordered_json::array();
  for (auto [c, p] : r.tree_edges) edges.push_back({c, p});
  j["edges"] = edges;
  j["seed"] = r.seed;
  if (with_stats) j["stats"] = stats_json(r.stats);
  return j.dump();
}

std::string approx_json(const ApproxResult& r, std::uint64_t seed, bool with_stats) {
  ordered_json j;
  j["schema"] = 1;
  j["mode"] = "approx";
  j["value"] = r.estimate;
  j["layer"] = r.layer;
  j["seed"] = seed;
  if (with_stats) {
    ordered_json s;
    s["layer_cuts"] = r.layer_cuts;
    s["forests"] = r.forests;
    j["stats"] = s;
  }
  return j.dump();
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"parallel minimum cut"};
  app.name("parcut");
  RunConfig cfg;
  std::string mode = "exact";
  std::string file;
  Weight hint = 0;
  std::size_t trees = 0;
  bool stats = false;
  app.add_option("--mode", mode, "approx, exact or oracle")
      ->check(CLI::IsMember({"approx", "exact", "oracle"}));
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--threads", cfg.threads, "worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  app.add_option("--eps-pack", cfg.epsilon_pack, "sparsifier error parameter in (0,1]");
  app.add_option("--eps-rq", cfg.epsilon_rq, "range-tree degree exponent in (0,1]");
  app.add_option("--scale", cfg.scale, "multiplier on the hierarchy constants");
  app.add_option("--lambda-hint", hint, "known underestimate of the minimum cut");
  app.add_option("--trees", trees, "packing rounds (default ceil(3 ln n))");
  app.add_option("--repeats", cfg.repeats, "independent packings");
  app.add_flag("--stats", stats, "include counters in the output");
  app.add_option("file", file, "graph file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "parcut: " << e.what() << "\n" << app.help();
    return 2;
  }
  if (hint > 0) cfg.lambda_hint = hint;
  if (trees > 0) cfg.trees = trees;
  cfg.mode = mode == "approx" ? Mode::approx : mode == "oracle" ? Mode::oracle : Mode::exact;

  try {
    cfg.validate();
  } catch (const ParameterError& e) {
    err << "parcut: " << e.what() << "\n" << app.help();
    return 2;
  }
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    const WeightedGraph g = read_graph_file(file);
    switch (cfg.mode) {
      case Mode::approx: {
        const auto c = HierarchyConstants::for_graph(g.num_vertices(), cfg.scale);
        const ApproxResult r = approximate_mincut(g, c, SeededRng(cfg.seed));
        out << approx_json(r, cfg.seed, stats) << "\n";
        break;
      }
      case Mode::oracle: {
        CutResult r = oracle_mincut(g);
        r.seed = cfg.seed;
        out << result_json(r, cfg.mode, stats) << "\n";
        break;
      }
      case Mode::exact: {
        const CutResult r = exact_mincut(g, cfg);
        out << result_json(r, cfg.mode, stats) << "\n";
        break;
      }
    }
  } catch (const Error& e) {
    err << "parcut: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace parcut
