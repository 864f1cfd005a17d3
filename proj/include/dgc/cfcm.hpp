#pragma once

#include <cstdint>

#include "dgc/blll.hpp"
#include "dgc/game.hpp"
#include "dgc/rng.hpp"
#include "dgc/trace.hpp"

namespace dgc {

// Per-agent record of the communication-free dynamics: a singleton sequence
// means stationary, a longer one is the experiment walk currently being
// traversed. est_first / est_second accumulate the partial utilities sampled
// for the walk's two endpoints.
struct AgentState {
  std::vector<int> sequence;
  int cursor = 0;  // index into sequence of the current position
  int est_first = 0;
  int est_second = 0;

  bool stationary() const { return sequence.size() == 1; }
  int current() const { return sequence[cursor]; }
  int first_candidate() const { return sequence.front(); }
  int second_candidate() const { return sequence.back(); }
  bool at_walk_end() const {
    return cursor == static_cast<int>(sequence.size()) - 1;
  }

  static AgentState stationary_at(int node) { return AgentState{{node}}; }

  bool operator==(const AgentState&) const = default;
};

// Concatenated agent states; one state of the induced Markov chain.
struct GlobalState {
  std::vector<AgentState> agents;
  int delta = 1;
  std::int64_t step = 0;

  int agent_count() const { return static_cast<int>(agents.size()); }
  std::vector<int> positions() const;
  ActionProfile profile() const;
};

GlobalState initial_state(const ActionProfile& profile);

// Everything an agent can sense: the subgraph induced on the
// delta-neighborhood of its position, and whether any other agent is within
// delta of it. The decision step never sees more than this.
class LocalView {
 public:
  LocalView(const Graph& g, int center, int delta, bool occupied)
      : g_(&g), center_(center), delta_(delta), occupied_(occupied) {}

  int center() const { return center_; }
  int delta() const { return delta_; }
  bool occupied_within_delta() const { return occupied_; }
  InducedSubgraph visible_subgraph() const;

 private:
  const Graph* g_;
  int center_;
  int delta_;
  bool occupied_;
};

LocalView local_view(const Graph& g, const ActionProfile& profile, int agent);

// Walk that starts at a1, ends at a2 (a2 in the closed neighborhood of a1),
// and traverses every node of the union of the two delta-neighborhoods.
// Deterministic; length at most 2*(|union| - 1) + 1 nodes.
std::vector<int> experiment_path(const Graph& g, int a1, int a2, int delta);

// True when the current position does not reappear later in the walk; the
// partial utility of a node is sampled only then.
bool is_last_visit(const AgentState& agent);

// Deterministic part of a walking agent's tick: sample at the current node
// if this is its last visit, then advance the cursor. Requires a walking
// agent that is not at the walk's end.
AgentState advance_agent(const Graph& g, const AgentState& agent, int delta,
                         bool occupied);

// Estimates after the sampling that happens on the walk's final tick,
// immediately before the agent chooses between its candidates.
std::pair<int, int> final_estimates(const Graph& g, const AgentState& agent,
                                    int delta, bool occupied);

// One tick of a single agent: a stationary agent starts an experiment with
// probability eps^r; a walking agent samples and advances; an agent at the
// walk's end samples, then collapses to one candidate with odds
// eps^{-est1} : eps^{-est2} and resets its estimates.
AgentState cfcm_agent_step(const AgentState& agent, const LocalView& view,
                           const NoiseParams& params, const Graph& g,
                           Rng& rng);

// Applies cfcm_agent_step to every agent in index order, all against
// sensing snapshots taken at the start of the tick.
GlobalState cfcm_step(const GlobalState& state, const Graph& g,
                      const NoiseParams& params, Rng& rng);

// Stepping harness that owns the rng stream and memoizes neighborhoods.
class CfcmSim {
 public:
  CfcmSim(const Graph& g, const ActionProfile& initial,
          const NoiseParams& params, std::uint64_t seed);

  const GlobalState& state() const { return state_; }
  void step();
  int covered_count() const;
  TraceRecord record() const;

 private:
  const Graph* g_;
  NoiseParams params_;
  NeighborhoodTable table_;
  GlobalState state_;
  Rng rng_;
};

// Runs `steps` ticks; the trace records the instantaneous walking positions
// S_i(k_i) and their coverage, one record per tick plus the initial one.
std::vector<TraceRecord> run_cfcm(const Graph& g, const ActionProfile& initial,
                                  const NoiseParams& params,
                                  std::int64_t steps, std::uint64_t seed);

}  // namespace dgc
