#include "dgc/recipes.hpp"

#include <stdexcept>
#include <string>

#include "dgc/rng.hpp"

namespace dgc {

int greedy_cover_value(const Graph& g, int agent_count, int delta) {
  NeighborhoodTable table(g, delta);
  std::vector<char> covered(g.node_count(), 0);
  int total = 0;
  for (int pick = 0; pick < agent_count; ++pick) {
    int best_node = 0;
    int best_gain = -1;
    for (int v = 0; v < g.node_count(); ++v) {
      int gain = 0;
      for (int w : table.of(v)) {
        if (!covered[w]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_node = v;
      }
    }
    for (int w : table.of(best_node)) {
      if (!covered[w]) {
        covered[w] = 1;
        ++total;
      }
    }
  }
  return total;
}

Graph find_replication_graph(std::uint64_t seed) {
  constexpr int kNodes = 50;
  constexpr std::size_t kTargetEdgesLo = 68;
  constexpr std::size_t kTargetEdgesHi = 88;
  constexpr int kAgents = 13;
  constexpr double kRadius = 0.17;
  constexpr int kMaxAttempts = 200000;

  // Connected geometric graphs this sparse are rare (the target density sits
  // below the connectivity threshold), so sample raw geometries in bulk and
  // keep the first connected draw in the edge band where complete coverage
  // by 13 agents is attainable. Roughly one draw in a few thousand
  // qualifies; the loop typically finishes well under a second.
  Rng rng(derive_seed(seed, "replication"));
  const double r2 = kRadius * kRadius;
  std::vector<double> xs(kNodes), ys(kNodes);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (int i = 0; i < kNodes; ++i) {
      xs[i] = rng.uniform_double();
      ys[i] = rng.uniform_double();
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < kNodes; ++i) {
      for (int j = i + 1; j < kNodes; ++j) {
        double dx = xs[i] - xs[j];
        double dy = ys[i] - ys[j];
        if (dx * dx + dy * dy <= r2) edges.emplace_back(i, j);
      }
    }
    if (edges.size() < kTargetEdgesLo || edges.size() > kTargetEdgesHi) {
      continue;
    }
    Graph g(kNodes, edges);
    if (!g.is_connected()) continue;
    // one agent of slack: if a greedy placement of 12 already covers all 50
    // nodes, near-complete configurations are plentiful for 13 agents and
    // the long-run mean settles close to full coverage
    if (greedy_cover_value(g, kAgents - 1, 1) == kNodes) return g;
  }
  throw std::runtime_error("no suitable replication graph found");
}

namespace {

ReplicationResult replicate(std::uint64_t seed, bool use_cfcm) {
  ReplicationResult result;
  result.graph = find_replication_graph(derive_seed(seed, "graph"));
  result.nu = result.graph.nu(1);

  // agents start on the first 13 nodes; stacking everyone on a single node
  // can stall the early diffusion phase on unlucky geometries
  ActionProfile initial;
  initial.delta = 1;
  for (int i = 0; i < 13; ++i) initial.positions.push_back(i);

  NoiseParams params{0.015, 1.5};
  if (use_cfcm) {
    result.window_lo = 150000;
    result.window_hi = 200000;
    result.trace = run_cfcm(result.graph, initial, params, 200000,
                            derive_seed(seed, "run"));
  } else {
    result.window_lo = 7500;
    result.window_hi = 10000;
    result.trace = run_blll(result.graph, initial, params, 10000,
                            derive_seed(seed, "run"));
  }
  result.summary = occupancy_statistics(result.trace, result.window_lo,
                                        result.window_hi,
                                        result.graph.node_count());
  return result;
}

}  // namespace

ReplicationResult replicate_cfcm(std::uint64_t seed) {
  return replicate(seed, true);
}

ReplicationResult replicate_blll(std::uint64_t seed) {
  return replicate(seed, false);
}

}  // namespace dgc
