#include "dgc/blll.hpp"

#include <cmath>
#include <stdexcept>

namespace dgc {

void validate_noise(const NoiseParams& params) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (!(params.r > 0.0)) {
    throw std::invalid_argument("r must be positive");
  }
}

double epsilon_pow_r(const NoiseParams& params) {
  return std::exp(params.r * std::log(params.epsilon));
}

double binary_choice_probability(int u_a, int u_b, double eps) {
  // eps^{-u_a} / (eps^{-u_a} + eps^{-u_b}) without materializing eps^{-u},
  // which overflows for modest utilities.
  int d = u_a - u_b;
  if (d >= 0) return 1.0 / (1.0 + std::pow(eps, d));
  double t = std::pow(eps, -d);
  return t / (1.0 + t);
}

BlllState blll_step(const BlllState& state, const Graph& g,
                    const NoiseParams& params, Rng& rng) {
  validate_noise(params);
  validate_profile(g, state.profile);
  if (!g.is_connected()) {
    throw std::invalid_argument("BLLL requires a connected graph");
  }

  BlllState next = state;
  next.step = state.step + 1;

  int agent = rng.uniform_int(state.profile.agent_count());
  NodeSet actions = constrained_actions(g, state.profile.positions[agent]);
  int candidate = actions[rng.uniform_int(static_cast<int>(actions.size()))];

  int current_utility = utility(g, agent, state.profile);
  ActionProfile trial = state.profile;
  trial.positions[agent] = candidate;
  int candidate_utility = utility(g, agent, trial);

  double p_switch = binary_choice_probability(candidate_utility,
                                              current_utility, params.epsilon);
  if (rng.bernoulli(p_switch)) {
    next.profile.positions[agent] = candidate;
  }
  return next;
}

std::vector<TraceRecord> run_blll(const Graph& g, const ActionProfile& initial,
                                  const NoiseParams& params,
                                  std::int64_t steps, std::uint64_t seed) {
  validate_noise(params);
  validate_profile(g, initial);
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  if (!g.is_connected()) {
    throw std::invalid_argument("BLLL requires a connected graph");
  }

  Rng rng(derive_seed(seed, "blll"));
  BlllState state{initial, 0};
  std::vector<TraceRecord> trace;
  trace.reserve(steps + 1);
  trace.push_back({0, potential(g, state.profile), state.profile.positions});
  for (std::int64_t t = 1; t <= steps; ++t) {
    state = blll_step(state, g, params, rng);
    trace.push_back({t, potential(g, state.profile), state.profile.positions});
  }
  return trace;
}

ActionProfile best_response_step(const Graph& g, const ActionProfile& profile,
                                 int agent) {
  validate_profile(g, profile);
  if (agent < 0 || agent >= profile.agent_count()) {
    throw std::invalid_argument("bad agent index");
  }
  int current = profile.positions[agent];
  int best_action = current;
  int best_value = potential(g, profile);
  for (int cand : constrained_actions(g, current)) {
    if (cand == current) continue;
    ActionProfile trial = profile;
    trial.positions[agent] = cand;
    int value = potential(g, trial);
    if (value > best_value) {  // ties keep the current node
      best_value = value;
      best_action = cand;
    }
  }
  ActionProfile next = profile;
  next.positions[agent] = best_action;
  return next;
}

}  // namespace dgc
