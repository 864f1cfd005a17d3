// Command-line front end: graph generation and IO, simulation runs with
// seeded RNG, trace/metrics emission, and replication recipes.

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "dgc/analysis.hpp"
#include "dgc/blll.hpp"
#include "dgc/cfcm.hpp"
#include "dgc/recipes.hpp"

namespace {

struct GenGraphOptions {
  std::string type = "rgg";
  int n = 50;
  double radius = 0.16;
  std::uint64_t seed = 0;
  int delta = 1;
  std::string out;
};

struct RunOptions {
  std::string algorithm = "cfcm";
  std::string graph_path;
  std::string gen_type;
  int gen_n = 50;
  double gen_radius = 0.16;
  int agents = 1;
  std::string initial = "all-at:0";
  int delta = 1;
  double epsilon = 0.015;
  double r = 1.5;
  std::int64_t steps = 1000;
  std::uint64_t seed = 0;
  std::string trace_path;
  std::string window;
  std::optional<int> optimum;
};

struct ReplicateOptions {
  std::string which;
  std::uint64_t seed = 0;
  std::string trace_path;
};

struct AnalyzeOptions {
  std::string graph_path;
  int agents = 1;
  int delta = 1;
  std::int64_t budget = 10'000'000;
};

dgc::Graph resolve_graph(const RunOptions& opt) {
  if (!opt.graph_path.empty()) return dgc::load_graph(opt.graph_path);
  if (opt.gen_type == "path") return dgc::make_path(opt.gen_n);
  if (opt.gen_type == "star") return dgc::make_star(opt.gen_n);
  if (opt.gen_type == "cycle") return dgc::make_cycle(opt.gen_n);
  if (opt.gen_type == "rgg") {
    return dgc::generate_random_geometric(
        opt.gen_n, opt.gen_radius, dgc::derive_seed(opt.seed, "graph"));
  }
  throw std::invalid_argument("no graph source: pass --graph or --gen-type");
}

dgc::ActionProfile resolve_initial(const RunOptions& opt,
                                   const dgc::Graph& g) {
  dgc::ActionProfile profile;
  if (opt.initial.rfind("all-at:", 0) == 0) {
    int node = std::stoi(opt.initial.substr(7));
    profile.positions.assign(opt.agents, node);
    profile.delta = opt.delta;
  } else {
    profile = dgc::parse_profile(opt.initial, opt.delta);
  }
  dgc::validate_profile(g, profile);
  return profile;
}

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text,
                                                   std::int64_t steps) {
  if (text.empty()) return {steps - steps / 4, steps};  // last quarter
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("window must look like LO:HI");
  }
  return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
}

int cmd_gen_graph(const GenGraphOptions& opt) {
  dgc::Graph g;
  if (opt.type == "path") {
    g = dgc::make_path(opt.n);
  } else if (opt.type == "star") {
    g = dgc::make_star(opt.n);
  } else if (opt.type == "cycle") {
    g = dgc::make_cycle(opt.n);
  } else {
    g = dgc::generate_random_geometric(opt.n, opt.radius, opt.seed);
  }
  dgc::save_graph(g, opt.out);
  std::cout << "nodes=" << g.node_count() << "\n"
            << "edges=" << g.edge_count() << "\n"
            << "nu=" << (g.edge_count() ? g.nu(opt.delta) : 0) << "\n";
  return 0;
}

int cmd_run(const RunOptions& opt) {
  dgc::Graph g = resolve_graph(opt);
  if (!g.is_connected()) {
    throw std::runtime_error("graph is not connected");
  }
  dgc::ActionProfile initial = resolve_initial(opt, g);
  dgc::NoiseParams params{opt.epsilon, opt.r};

  std::vector<dgc::TraceRecord> trace;
  if (opt.algorithm == "cfcm") {
    trace = dgc::run_cfcm(g, initial, params, opt.steps, opt.seed);
  } else if (opt.algorithm == "blll") {
    trace = dgc::run_blll(g, initial, params, opt.steps, opt.seed);
  } else {
    throw std::invalid_argument("algorithm must be cfcm or blll");
  }
  if (!opt.trace_path.empty()) dgc::save_trace_csv(trace, opt.trace_path);

  auto [lo, hi] = parse_window(opt.window, opt.steps);
  std::optional<int> target = opt.optimum;
  if (!target) {
    try {
      target = dgc::brute_force_max_coverage(g, initial.agent_count(),
                                             initial.delta)
                   .max_covered;
    } catch (const std::runtime_error&) {
      // instance too large to enumerate; report the mean only
    }
  }
  std::cout << "nodes=" << g.node_count() << "\n"
            << "edges=" << g.edge_count() << "\n";
  if (target) {
    auto summary = dgc::occupancy_statistics(trace, lo, hi, *target);
    std::cout << "optimum=" << *target << "\n"
              << "mean_covered=" << summary.mean_covered << "\n"
              << "fraction_at_optimum=" << summary.fraction_at_target << "\n";
  } else {
    auto summary = dgc::occupancy_statistics(trace, lo, hi, -1);
    std::cout << "mean_covered=" << summary.mean_covered << "\n";
  }
  return 0;
}

int cmd_replicate(const ReplicateOptions& opt) {
  dgc::ReplicationResult result;
  if (opt.which == "cfcm-fig5") {
    result = dgc::replicate_cfcm(opt.seed);
  } else if (opt.which == "blll-fig7") {
    result = dgc::replicate_blll(opt.seed);
  } else {
    throw std::invalid_argument("recipe must be cfcm-fig5 or blll-fig7");
  }
  if (!opt.trace_path.empty()) dgc::save_trace_csv(result.trace, opt.trace_path);
  std::cout << "nodes=" << result.graph.node_count() << "\n"
            << "edges=" << result.graph.edge_count() << "\n"
            << "nu=" << result.nu << "\n"
            << "window=" << result.window_lo << ":" << result.window_hi << "\n"
            << "mean_covered=" << result.summary.mean_covered << "\n"
            << "fraction_at_optimum=" << result.summary.fraction_at_target
            << "\n";
  return 0;
}

int cmd_analyze(const AnalyzeOptions& opt) {
  dgc::Graph g = dgc::load_graph(opt.graph_path);
  auto optimum =
      dgc::brute_force_max_coverage(g, opt.agents, opt.delta, opt.budget);
  auto traps =
      dgc::local_maxima_below_optimum(g, opt.agents, opt.delta, opt.budget);
  std::cout << "nodes=" << g.node_count() << "\n"
            << "edges=" << g.edge_count() << "\n"
            << "nu=" << (g.edge_count() ? g.nu(opt.delta) : 0) << "\n"
            << "max_coverage=" << optimum.max_covered << "\n"
            << "maximizers=" << optimum.maximizers.size() << "\n"
            << "greedy_traps=" << traps.size() << "\n";
  std::size_t shown = 0;
  for (const auto& trap : traps) {
    if (shown++ == 5) break;
    std::cout << "trap="
              << dgc::format_profile({trap, opt.delta}) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed graph coverage simulator"};
  app.require_subcommand(1);

  GenGraphOptions gen;
  auto* gen_cmd = app.add_subcommand("gen-graph", "Generate a graph file");
  gen_cmd->add_option("--type", gen.type, "rgg|path|star|cycle");
  gen_cmd->add_option("--n", gen.n, "Node count");
  gen_cmd->add_option("--radius", gen.radius, "Connection radius (rgg)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--delta", gen.delta, "Sensing range for the nu stat");
  gen_cmd->add_option("--out", gen.out, "Output path")->required();

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run a simulation");
  run_cmd->add_option("--algo", run.algorithm, "cfcm|blll");
  run_cmd->add_option("--graph", run.graph_path, "Graph file");
  run_cmd->add_option("--gen-type", run.gen_type, "Generate instead: rgg|path|star|cycle");
  run_cmd->add_option("--gen-n", run.gen_n, "Node count when generating");
  run_cmd->add_option("--gen-radius", run.gen_radius, "Radius when generating");
  run_cmd->add_option("--agents", run.agents, "Agent count");
  run_cmd->add_option("--initial", run.initial,
                      "Profile literal like 1,3 or all-at:<node>");
  run_cmd->add_option("--delta", run.delta, "Sensing range");
  run_cmd->add_option("--epsilon", run.epsilon, "Noise parameter");
  run_cmd->add_option("--r", run.r, "Experiment-rate exponent (cfcm)");
  run_cmd->add_option("--steps", run.steps, "Tick count");
  run_cmd->add_option("--seed", run.seed, "Simulation seed");
  run_cmd->add_option("--out", run.trace_path, "Trace CSV path");
  run_cmd->add_option("--window", run.window, "Summary window LO:HI");
  int optimum_arg = -1;
  auto* optimum_opt =
      run_cmd->add_option("--optimum", optimum_arg, "Known optimum coverage");

  ReplicateOptions rep;
  auto* rep_cmd = app.add_subcommand("replicate", "Run a replication recipe");
  rep_cmd->add_option("which", rep.which, "cfcm-fig5|blll-fig7")->required();
  rep_cmd->add_option("--seed", rep.seed, "Master seed");
  rep_cmd->add_option("--out", rep.trace_path, "Trace CSV path");

  AnalyzeOptions ana;
  auto* ana_cmd = app.add_subcommand("analyze", "Exhaustive instance analysis");
  ana_cmd->add_option("--graph", ana.graph_path, "Graph file")->required();
  ana_cmd->add_option("--agents", ana.agents, "Agent count");
  ana_cmd->add_option("--delta", ana.delta, "Sensing range");
  ana_cmd->add_option("--budget", ana.budget, "Enumeration budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return cmd_gen_graph(gen);
    if (*run_cmd) {
      if (!optimum_opt->empty()) run.optimum = optimum_arg;
      return cmd_run(run);
    }
    if (*rep_cmd) return cmd_replicate(rep);
    if (*ana_cmd) return cmd_analyze(ana);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
