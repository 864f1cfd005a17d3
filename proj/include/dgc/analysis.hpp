#pragma once

#include <cstdint>

#include "dgc/cfcm.hpp"

namespace dgc {

// Disjoint agent-index sets describing one transition of the induced chain:
// stationary->stationary, stationary->experimenting, walk-in-progress, and
// finishers split by which candidate they chose.
struct TransitionPartition {
  std::vector<int> ss;
  std::vector<int> se;
  std::vector<int> ee;
  std::vector<int> es_first;
  std::vector<int> es_second;
};

// Validates feasibility of x -> x_next under the CFCM dynamics and groups
// the agents. Throws std::invalid_argument naming the violating agent.
TransitionPartition classify_agents(const Graph& g, const GlobalState& x,
                                    const GlobalState& x_next);

// Estimated utility given up by a finishing agent: max(est1, est2) minus the
// estimate of the chosen candidate; 0 for non-finishers.
int denied_utility(const AgentState& xi, const AgentState& xi_next);

// r per experiment start plus the total denied utility.
double transition_resistance(const Graph& g, const GlobalState& x,
                             const GlobalState& x_next, double r);

// Exact probability of the transition under the CFCM chain: finisher choice
// odds, (1 - eps^r) per agent staying stationary, eps^r / |A^c| per start.
// A start whose recorded walk does not match the deterministic experiment
// path gets probability 0; other infeasible pairs throw.
double transition_probability(const Graph& g, const GlobalState& x,
                              const GlobalState& x_next,
                              const NoiseParams& params);

// All-stationary states are the recurrent states of the unperturbed chain.
bool is_recurrent(const GlobalState& x);

// Sum of per-transition resistances along a path where exactly one agent
// runs one complete experiment while all others stay put. Validates the
// path's shape and throws on violations.
double unilateral_path_resistance(const Graph& g,
                                  const std::vector<GlobalState>& states,
                                  double r);

// Constructs the full state sequence of one unilateral experiment: agent
// `agent` walks experiment_path(a1, second_candidate) while everyone else is
// frozen, ending on the first or second candidate as requested.
std::vector<GlobalState> unilateral_experiment_states(
    const Graph& g, const ActionProfile& initial, int agent,
    int second_candidate, bool choose_second);

struct CoverageOptimum {
  int max_covered = 0;
  // Maximizing profiles as nondecreasing position tuples (agent order is
  // interchangeable).
  std::vector<std::vector<int>> maximizers;
};

// Exact optimum by enumerating all position multisets. Refuses (throws
// std::runtime_error) when the multiset count exceeds the budget.
CoverageOptimum brute_force_max_coverage(const Graph& g, int agent_count,
                                         int delta,
                                         std::int64_t budget = 10'000'000);

struct OccupancySummary {
  double mean_covered = 0.0;
  double fraction_at_target = 0.0;
  std::int64_t ticks = 0;
};

// Mean covered count and fraction of ticks exactly at `target` over the
// inclusive tick window [lo, hi].
OccupancySummary occupancy_statistics(const std::vector<TraceRecord>& trace,
                                      std::int64_t lo, std::int64_t hi,
                                      int target);

// Profiles that no single-agent constrained move improves but that sit
// strictly below the global optimum, as nondecreasing position tuples.
std::vector<std::vector<int>> local_maxima_below_optimum(
    const Graph& g, int agent_count, int delta,
    std::int64_t budget = 10'000'000);

}  // namespace dgc
