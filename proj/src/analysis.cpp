#include "dgc/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dgc {

namespace {

enum class Kind { StayStationary, StartExperiment, ContinueWalk, Finish };

[[noreturn]] void infeasible(int agent, const std::string& why) {
  throw std::invalid_argument("infeasible transition for agent " +
                              std::to_string(agent) + ": " + why);
}

bool occupied_in(const Graph& g, const GlobalState& x, int agent) {
  auto positions = x.positions();
  auto dist = g.bfs_distances(positions[agent]);
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (static_cast<int>(j) != agent && dist[positions[j]] <= x.delta) {
      return true;
    }
  }
  return false;
}

// Feasibility check for one agent's transition; reconstructive, comparing
// x_next against the successors the dynamics actually allow.
Kind check_agent(const Graph& g, const GlobalState& x,
                 const GlobalState& x_next, int agent) {
  const AgentState& xi = x.agents[agent];
  const AgentState& yi = x_next.agents[agent];
  if (xi.stationary()) {
    if (yi.stationary()) {
      if (yi.current() != xi.current()) {
        infeasible(agent, "stationary agent changed node");
      }
      if (yi.est_first != 0 || yi.est_second != 0) {
        infeasible(agent, "stationary agent carries estimates");
      }
      return Kind::StayStationary;
    }
    if (yi.cursor != 0 || yi.est_first != 0 || yi.est_second != 0) {
      infeasible(agent, "fresh experiment must start at the walk's head");
    }
    if (yi.first_candidate() != xi.current()) {
      infeasible(agent, "experiment does not start at the current node");
    }
    NodeSet actions = g.closed_neighborhood(xi.current());
    if (!std::binary_search(actions.begin(), actions.end(),
                            yi.second_candidate())) {
      infeasible(agent, "second candidate outside the constrained action set");
    }
    for (std::size_t k = 0; k + 1 < yi.sequence.size(); ++k) {
      if (!g.has_edge(yi.sequence[k], yi.sequence[k + 1])) {
        infeasible(agent, "walk hops between non-adjacent nodes");
      }
    }
    return Kind::StartExperiment;
  }
  if (!xi.at_walk_end()) {
    AgentState expected =
        advance_agent(g, xi, x.delta, occupied_in(g, x, agent));
    if (yi != expected) infeasible(agent, "mid-walk step does not match");
    return Kind::ContinueWalk;
  }
  if (!yi.stationary() || yi.cursor != 0 || yi.est_first != 0 ||
      yi.est_second != 0) {
    infeasible(agent, "finisher must collapse to a stationary state");
  }
  if (yi.current() != xi.first_candidate() &&
      yi.current() != xi.second_candidate()) {
    infeasible(agent, "finisher chose a non-candidate node");
  }
  return Kind::Finish;
}

void check_states(const GlobalState& x, const GlobalState& x_next) {
  if (x.agent_count() != x_next.agent_count()) {
    throw std::invalid_argument("agent counts differ");
  }
  if (x.delta != x_next.delta) {
    throw std::invalid_argument("sensing ranges differ");
  }
}

}  // namespace

TransitionPartition classify_agents(const Graph& g, const GlobalState& x,
                                    const GlobalState& x_next) {
  check_states(x, x_next);
  TransitionPartition partition;
  for (int i = 0; i < x.agent_count(); ++i) {
    switch (check_agent(g, x, x_next, i)) {
      case Kind::StayStationary:
        partition.ss.push_back(i);
        break;
      case Kind::StartExperiment:
        partition.se.push_back(i);
        break;
      case Kind::ContinueWalk:
        partition.ee.push_back(i);
        break;
      case Kind::Finish:
        if (x_next.agents[i].current() == x.agents[i].first_candidate()) {
          partition.es_first.push_back(i);
        } else {
          partition.es_second.push_back(i);
        }
        break;
    }
  }
  return partition;
}

int denied_utility(const AgentState& xi, const AgentState& xi_next) {
  if (xi.stationary() || !xi.at_walk_end()) return 0;
  if (!xi_next.stationary()) {
    throw std::invalid_argument("finisher must become stationary");
  }
  int best = std::max(xi.est_first, xi.est_second);
  if (xi_next.current() == xi.first_candidate()) {
    return best - xi.est_first;
  }
  if (xi_next.current() == xi.second_candidate()) {
    return best - xi.est_second;
  }
  throw std::invalid_argument("finisher chose a non-candidate node");
}

double transition_resistance(const Graph& g, const GlobalState& x,
                             const GlobalState& x_next, double r) {
  TransitionPartition partition = classify_agents(g, x, x_next);
  double resistance = r * static_cast<double>(partition.se.size());
  for (int i : partition.es_first) {
    resistance += denied_utility(x.agents[i], x_next.agents[i]);
  }
  for (int i : partition.es_second) {
    resistance += denied_utility(x.agents[i], x_next.agents[i]);
  }
  return resistance;
}

double transition_probability(const Graph& g, const GlobalState& x,
                              const GlobalState& x_next,
                              const NoiseParams& params) {
  validate_noise(params);
  check_states(x, x_next);
  const double eps_r = epsilon_pow_r(params);
  double probability = 1.0;
  for (int i = 0; i < x.agent_count(); ++i) {
    const AgentState& xi = x.agents[i];
    const AgentState& yi = x_next.agents[i];
    switch (check_agent(g, x, x_next, i)) {
      case Kind::StayStationary: {
        double p = 1.0 - eps_r;
        // a degenerate single-node experiment also leaves the agent in
        // place (possible only at delta = 0)
        NodeSet actions = g.closed_neighborhood(xi.current());
        for (int w : actions) {
          if (experiment_path(g, xi.current(), w, x.delta).size() == 1) {
            p += eps_r / static_cast<double>(actions.size());
          }
        }
        probability *= p;
        break;
      }
      case Kind::StartExperiment: {
        NodeSet actions = g.closed_neighborhood(xi.current());
        if (yi.sequence != experiment_path(g, xi.current(),
                                           yi.second_candidate(), x.delta)) {
          return 0.0;  // recorded walk cannot come from the path builder
        }
        probability *= eps_r / static_cast<double>(actions.size());
        break;
      }
      case Kind::ContinueWalk:
        break;  // deterministic
      case Kind::Finish: {
        if (xi.first_candidate() == xi.second_candidate()) break;
        auto [e1, e2] =
            final_estimates(g, xi, x.delta, occupied_in(g, x, i));
        if (yi.current() == xi.first_candidate()) {
          probability *= binary_choice_probability(e1, e2, params.epsilon);
        } else {
          probability *= binary_choice_probability(e2, e1, params.epsilon);
        }
        break;
      }
    }
  }
  return probability;
}

bool is_recurrent(const GlobalState& x) {
  return std::all_of(x.agents.begin(), x.agents.end(),
                     [](const AgentState& a) { return a.stationary(); });
}

double unilateral_path_resistance(const Graph& g,
                                  const std::vector<GlobalState>& states,
                                  double r) {
  if (states.size() < 2) {
    throw std::invalid_argument("path needs at least two states");
  }
  if (!is_recurrent(states.front()) || !is_recurrent(states.back())) {
    throw std::invalid_argument(
        "path must start and end in all-stationary states");
  }
  for (std::size_t p = 1; p + 1 < states.size(); ++p) {
    int experimenting = 0;
    for (const auto& agent : states[p].agents) {
      if (!agent.stationary()) ++experimenting;
    }
    if (experimenting != 1) {
      throw std::invalid_argument(
          "interior states must have exactly one experimenting agent");
    }
  }
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < states.size(); ++p) {
    TransitionPartition partition =
        classify_agents(g, states[p], states[p + 1]);
    std::size_t expected_starts = p == 0 ? 1 : 0;
    if (partition.se.size() != expected_starts) {
      throw std::invalid_argument("not a unilateral experimentation path");
    }
    total += transition_resistance(g, states[p], states[p + 1], r);
  }
  return total;
}

std::vector<GlobalState> unilateral_experiment_states(
    const Graph& g, const ActionProfile& initial, int agent,
    int second_candidate, bool choose_second) {
  validate_profile(g, initial);
  if (agent < 0 || agent >= initial.agent_count()) {
    throw std::invalid_argument("bad agent index");
  }
  int a1 = initial.positions[agent];
  std::vector<int> walk =
      experiment_path(g, a1, second_candidate, initial.delta);
  if (walk.size() < 2) {
    throw std::invalid_argument("experiment walk is degenerate");
  }

  std::vector<GlobalState> states;
  states.push_back(initial_state(initial));
  GlobalState current = states.back();
  current.agents[agent] = AgentState{walk};
  current.step += 1;
  states.push_back(current);
  while (!current.agents[agent].at_walk_end()) {
    current.agents[agent] = advance_agent(
        g, current.agents[agent], current.delta, occupied_in(g, current, agent));
    current.step += 1;
    states.push_back(current);
  }
  current.agents[agent] = AgentState::stationary_at(
      choose_second ? walk.back() : walk.front());
  current.step += 1;
  states.push_back(current);
  return states;
}

namespace {

int coverage_of(const NeighborhoodTable& table,
                const std::vector<int>& positions) {
  std::vector<char> covered(table.graph().node_count(), 0);
  int count = 0;
  for (int p : positions) {
    for (int v : table.of(p)) {
      if (!covered[v]) {
        covered[v] = 1;
        ++count;
      }
    }
  }
  return count;
}

template <typename Fn>
void for_each_multiset(int n, int m, Fn&& fn) {
  std::vector<int> positions(m, 0);
  while (true) {
    fn(positions);
    int i = m - 1;
    while (i >= 0 && positions[i] == n - 1) --i;
    if (i < 0) break;
    int next = positions[i] + 1;
    for (int j = i; j < m; ++j) positions[j] = next;
  }
}

void check_budget(int n, int m, std::int64_t budget) {
  // C(n + m - 1, m) position multisets
  double count = 1.0;
  for (int k = 1; k <= m; ++k) {
    count *= static_cast<double>(n - 1 + k) / k;
  }
  if (count > static_cast<double>(budget)) {
    throw std::runtime_error(
        "enumeration would visit about " + std::to_string(count) +
        " profiles, over the budget of " + std::to_string(budget));
  }
}

}  // namespace

CoverageOptimum brute_force_max_coverage(const Graph& g, int agent_count,
                                         int delta, std::int64_t budget) {
  if (agent_count < 1) throw std::invalid_argument("need at least one agent");
  check_budget(g.node_count(), agent_count, budget);
  NeighborhoodTable table(g, delta);
  CoverageOptimum result;
  for_each_multiset(g.node_count(), agent_count,
                    [&](const std::vector<int>& positions) {
                      int value = coverage_of(table, positions);
                      if (value > result.max_covered) {
                        result.max_covered = value;
                        result.maximizers.clear();
                      }
                      if (value == result.max_covered) {
                        result.maximizers.push_back(positions);
                      }
                    });
  return result;
}

std::vector<std::vector<int>> local_maxima_below_optimum(const Graph& g,
                                                         int agent_count,
                                                         int delta,
                                                         std::int64_t budget) {
  int optimum = brute_force_max_coverage(g, agent_count, delta, budget)
                    .max_covered;
  NeighborhoodTable table(g, delta);
  std::vector<std::vector<int>> traps;
  for_each_multiset(
      g.node_count(), agent_count, [&](const std::vector<int>& positions) {
        int value = coverage_of(table, positions);
        if (value >= optimum) return;
        for (std::size_t i = 0; i < positions.size(); ++i) {
          for (int cand : g.closed_neighborhood(positions[i])) {
            std::vector<int> moved = positions;
            moved[i] = cand;
            if (coverage_of(table, moved) > value) return;
          }
        }
        traps.push_back(positions);
      });
  return traps;
}

OccupancySummary occupancy_statistics(const std::vector<TraceRecord>& trace,
                                      std::int64_t lo, std::int64_t hi,
                                      int target) {
  if (lo > hi) throw std::invalid_argument("empty window");
  OccupancySummary summary;
  double total = 0.0;
  std::int64_t at_target = 0;
  for (const auto& rec : trace) {
    if (rec.tick < lo || rec.tick > hi) continue;
    total += rec.covered;
    if (rec.covered == target) ++at_target;
    ++summary.ticks;
  }
  if (summary.ticks == 0) {
    throw std::invalid_argument("window contains no trace records");
  }
  summary.mean_covered = total / static_cast<double>(summary.ticks);
  summary.fraction_at_target =
      static_cast<double>(at_target) / static_cast<double>(summary.ticks);
  return summary;
}

}  // namespace dgc
