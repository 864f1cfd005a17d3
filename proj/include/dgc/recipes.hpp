#pragma once

#include <cstdint>

#include "dgc/analysis.hpp"

namespace dgc {

// Connected 50-node random geometric graph with 78 +/- 10 edges whose nodes
// a greedy 13-agent placement can fully cover (so complete coverage is
// attainable). Deterministic for a fixed seed.
Graph find_replication_graph(std::uint64_t seed);

// Greedy max-coverage placement of m agents; lower-bounds the optimum.
int greedy_cover_value(const Graph& g, int agent_count, int delta);

struct ReplicationResult {
  Graph graph;
  int nu = 0;
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  std::vector<TraceRecord> trace;
  OccupancySummary summary;
};

// 13 agents start on the first 13 nodes of a fresh replication graph, delta=1,
// eps=0.015. CFCM runs 200000 ticks with r=1.5 and summarizes
// [150000, 200000]; BLLL runs 10000 steps and summarizes [7500, 10000].
ReplicationResult replicate_cfcm(std::uint64_t seed);
ReplicationResult replicate_blll(std::uint64_t seed);

}  // namespace dgc
