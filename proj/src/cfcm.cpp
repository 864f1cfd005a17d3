#include "dgc/cfcm.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgc {

std::vector<int> GlobalState::positions() const {
  std::vector<int> out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back(a.current());
  return out;
}

ActionProfile GlobalState::profile() const {
  return ActionProfile{positions(), delta};
}

GlobalState initial_state(const ActionProfile& profile) {
  GlobalState state;
  state.delta = profile.delta;
  state.agents.reserve(profile.positions.size());
  for (int p : profile.positions) {
    state.agents.push_back(AgentState::stationary_at(p));
  }
  return state;
}

InducedSubgraph LocalView::visible_subgraph() const {
  return g_->induced_subgraph(g_->delta_neighborhood(center_, delta_));
}

LocalView local_view(const Graph& g, const ActionProfile& profile, int agent) {
  validate_profile(g, profile);
  if (agent < 0 || agent >= profile.agent_count()) {
    throw std::invalid_argument("bad agent index");
  }
  int center = profile.positions[agent];
  auto dist = g.bfs_distances(center);
  bool occupied = false;
  for (int j = 0; j < profile.agent_count(); ++j) {
    if (j != agent && dist[profile.positions[j]] <= profile.delta) {
      occupied = true;
      break;
    }
  }
  return LocalView(g, center, profile.delta, occupied);
}

std::vector<int> experiment_path(const Graph& g, int a1, int a2, int delta) {
  NodeSet actions = g.closed_neighborhood(a1);
  if (!std::binary_search(actions.begin(), actions.end(), a2)) {
    throw std::invalid_argument(
        "second candidate must lie in the closed neighborhood of the first");
  }

  NodeSet first = g.delta_neighborhood(a1, delta);
  NodeSet second = g.delta_neighborhood(a2, delta);
  NodeSet to_visit;
  std::set_union(first.begin(), first.end(), second.begin(), second.end(),
                 std::back_inserter(to_visit));

  // Breadth-first spanning tree of the union, rooted at a1. The union is
  // connected since shortest paths to either center stay inside it.
  const int n = g.node_count();
  std::vector<int> parent(n, -1);
  std::vector<char> in_union(n, 0), seen(n, 0);
  for (int v : to_visit) in_union[v] = 1;
  std::vector<std::vector<int>> children(n);
  std::vector<int> queue{a1};
  seen[a1] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int cur = queue[head];
    for (int nbr : g.neighbors(cur)) {
      if (in_union[nbr] && !seen[nbr]) {
        seen[nbr] = 1;
        parent[nbr] = cur;
        children[cur].push_back(nbr);  // sorted, adjacency is sorted
        queue.push_back(nbr);
      }
    }
  }

  // Order the child leading toward a2 last at every node on the root-a2
  // path, so the tour's final descent ends at a2 and the climb back can be
  // dropped without uncovering any node.
  std::vector<char> on_a2_path(n, 0);
  for (int v = a2; v != -1; v = parent[v]) on_a2_path[v] = 1;
  for (int v : to_visit) {
    auto& kids = children[v];
    auto it = std::find_if(kids.begin(), kids.end(),
                           [&](int c) { return on_a2_path[c]; });
    if (it != kids.end()) std::rotate(it, it + 1, kids.end());
  }

  std::vector<int> walk;
  walk.reserve(2 * to_visit.size());
  // iterative Euler tour, each tree edge walked down and back
  std::vector<std::pair<int, std::size_t>> stack{{a1, 0}};
  walk.push_back(a1);
  while (!stack.empty()) {
    auto& [node, next_child] = stack.back();
    if (next_child < children[node].size()) {
      int child = children[node][next_child++];
      walk.push_back(child);
      stack.emplace_back(child, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) walk.push_back(stack.back().first);
    }
  }
  // drop the climb back from a2's last visit to the root
  auto last = std::find(walk.rbegin(), walk.rend(), a2);
  walk.erase(last.base(), walk.end());
  return walk;
}

bool is_last_visit(const AgentState& agent) {
  int node = agent.current();
  for (std::size_t k = agent.cursor + 1; k < agent.sequence.size(); ++k) {
    if (agent.sequence[k] == node) return false;
  }
  return true;
}

namespace {

// Branch shared by mid-walk ticks and the final tick: sample the partial
// utility of the current node on its last visit, crediting whichever
// candidate's neighborhood contains it.
void apply_sampling(const NeighborhoodTable& table, AgentState& agent,
                    bool occupied) {
  if (occupied || !is_last_visit(agent)) return;
  int node = agent.current();
  if (table.within(agent.first_candidate(), node)) agent.est_first += 1;
  if (table.within(agent.second_candidate(), node)) agent.est_second += 1;
}

AgentState agent_step_impl(const AgentState& agent, const LocalView& view,
                           const NoiseParams& params,
                           const NeighborhoodTable& table, const Graph& g,
                           Rng& rng) {
  if (agent.current() != view.center()) {
    throw std::invalid_argument("view does not match the agent's position");
  }
  if (agent.stationary()) {
    if (rng.uniform_double() <= epsilon_pow_r(params)) {
      int a1 = agent.first_candidate();
      NodeSet actions = g.closed_neighborhood(a1);
      int a2 = actions[rng.uniform_int(static_cast<int>(actions.size()))];
      std::vector<int> walk = experiment_path(g, a1, a2, view.delta());
      if (walk.size() > 1) return AgentState{std::move(walk)};
      // a degenerate single-node experiment is indistinguishable from
      // staying stationary (only possible at delta = 0)
    }
    return agent;
  }
  AgentState next = agent;
  apply_sampling(table, next, view.occupied_within_delta());
  if (!agent.at_walk_end()) {
    next.cursor += 1;
    return next;
  }
  double keep_first = binary_choice_probability(next.est_first,
                                                next.est_second,
                                                params.epsilon);
  int chosen = rng.uniform_double() < keep_first ? next.first_candidate()
                                                 : next.second_candidate();
  return AgentState::stationary_at(chosen);
}

bool occupied_flag(const NeighborhoodTable& table,
                   const std::vector<int>& positions, int agent) {
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (static_cast<int>(j) != agent &&
        table.within(positions[agent], positions[j])) {
      return true;
    }
  }
  return false;
}

GlobalState step_impl(const GlobalState& state, const Graph& g,
                      const NeighborhoodTable& table,
                      const NoiseParams& params, Rng& rng) {
  std::vector<int> positions = state.positions();
  GlobalState next = state;
  next.step = state.step + 1;
  for (int i = 0; i < state.agent_count(); ++i) {
    LocalView view(g, positions[i], state.delta,
                   occupied_flag(table, positions, i));
    next.agents[i] =
        agent_step_impl(state.agents[i], view, params, table, g, rng);
  }
  return next;
}

}  // namespace

AgentState cfcm_agent_step(const AgentState& agent, const LocalView& view,
                           const NoiseParams& params, const Graph& g,
                           Rng& rng) {
  validate_noise(params);
  NeighborhoodTable table(g, view.delta());
  return agent_step_impl(agent, view, params, table, g, rng);
}

AgentState advance_agent(const Graph& g, const AgentState& agent, int delta,
                         bool occupied) {
  if (agent.stationary() || agent.at_walk_end()) {
    throw std::invalid_argument("agent is not mid-walk");
  }
  NeighborhoodTable table(g, delta);
  AgentState next = agent;
  apply_sampling(table, next, occupied);
  next.cursor += 1;
  return next;
}

std::pair<int, int> final_estimates(const Graph& g, const AgentState& agent,
                                    int delta, bool occupied) {
  if (agent.stationary() || !agent.at_walk_end()) {
    throw std::invalid_argument("agent is not at the end of a walk");
  }
  NeighborhoodTable table(g, delta);
  AgentState sampled = agent;
  apply_sampling(table, sampled, occupied);
  return {sampled.est_first, sampled.est_second};
}

GlobalState cfcm_step(const GlobalState& state, const Graph& g,
                      const NoiseParams& params, Rng& rng) {
  validate_noise(params);
  if (!g.is_connected()) {
    throw std::invalid_argument("CFCM requires a connected graph");
  }
  NeighborhoodTable table(g, state.delta);
  return step_impl(state, g, table, params, rng);
}

CfcmSim::CfcmSim(const Graph& g, const ActionProfile& initial,
                 const NoiseParams& params, std::uint64_t seed)
    : g_(&g),
      params_(params),
      table_(g, initial.delta),
      state_(initial_state(initial)),
      rng_(derive_seed(seed, "cfcm")) {
  validate_noise(params);
  validate_profile(g, initial);
  if (!g.is_connected()) {
    throw std::invalid_argument("CFCM requires a connected graph");
  }
}

void CfcmSim::step() {
  state_ = step_impl(state_, *g_, table_, params_, rng_);
}

int CfcmSim::covered_count() const {
  std::vector<char> covered(g_->node_count(), 0);
  int count = 0;
  for (const auto& agent : state_.agents) {
    for (int v : table_.of(agent.current())) {
      if (!covered[v]) {
        covered[v] = 1;
        ++count;
      }
    }
  }
  return count;
}

TraceRecord CfcmSim::record() const {
  return TraceRecord{state_.step, covered_count(), state_.positions()};
}

std::vector<TraceRecord> run_cfcm(const Graph& g, const ActionProfile& initial,
                                  const NoiseParams& params,
                                  std::int64_t steps, std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  CfcmSim sim(g, initial, params, seed);
  std::vector<TraceRecord> trace;
  trace.reserve(steps + 1);
  trace.push_back(sim.record());
  for (std::int64_t t = 0; t < steps; ++t) {
    sim.step();
    trace.push_back(sim.record());
  }
  return trace;
}

}  // namespace dgc
