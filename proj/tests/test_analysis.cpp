#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "dgc/analysis.hpp"
#include "test_util.hpp"

using namespace dgc;

namespace {

GlobalState two_agents(int delta, AgentState a, AgentState b) {
  GlobalState state;
  state.delta = delta;
  state.agents = {std::move(a), std::move(b)};
  return state;
}

}  // namespace

TEST_CASE("classifying a unilateral experiment") {
  Graph p5 = make_path(5);
  ActionProfile initial{{2, 0}, 1};
  auto states = unilateral_experiment_states(p5, initial, 0, 3, true);
  REQUIRE(states.size() >= 3);

  auto start = classify_agents(p5, states[0], states[1]);
  CHECK(start.se == std::vector<int>{0});
  CHECK(start.ss == std::vector<int>{1});
  CHECK(start.ee.empty());

  for (std::size_t p = 1; p + 2 < states.size(); ++p) {
    auto mid = classify_agents(p5, states[p], states[p + 1]);
    CHECK(mid.ee == std::vector<int>{0});
    CHECK(mid.ss == std::vector<int>{1});
  }

  auto finish =
      classify_agents(p5, states[states.size() - 2], states.back());
  CHECK(finish.es_second == std::vector<int>{0});
  CHECK(finish.ss == std::vector<int>{1});
}

TEST_CASE("infeasible transitions are rejected by name") {
  Graph p5 = make_path(5);
  GlobalState x = two_agents(1, AgentState::stationary_at(2),
                             AgentState::stationary_at(0));
  GlobalState teleported = two_agents(1, AgentState::stationary_at(4),
                                      AgentState::stationary_at(0));
  CHECK_THROWS_WITH_AS(classify_agents(p5, x, teleported),
                       doctest::Contains("agent 0"), std::invalid_argument);

  GlobalState wrong_delta = x;
  wrong_delta.delta = 2;
  CHECK_THROWS_AS(classify_agents(p5, x, wrong_delta), std::invalid_argument);
}

TEST_CASE("denied utility of a finisher") {
  std::vector<int> walk{2, 1, 2, 3};
  AgentState at_end{walk, 3, 1, 4};
  CHECK(denied_utility(at_end, AgentState::stationary_at(3)) == 0);
  CHECK(denied_utility(at_end, AgentState::stationary_at(2)) == 3);
  CHECK(denied_utility(AgentState::stationary_at(2),
                       AgentState::stationary_at(2)) == 0);
  CHECK_THROWS_AS(denied_utility(at_end, AgentState::stationary_at(0)),
                  std::invalid_argument);
}

TEST_CASE("transition resistance on constructed cases") {
  Graph p5 = make_path(5);
  GlobalState idle = two_agents(1, AgentState::stationary_at(2),
                                AgentState::stationary_at(0));
  CHECK(transition_resistance(p5, idle, idle, 1.5) == doctest::Approx(0.0));

  // one experiment start costs exactly r
  GlobalState one_start = idle;
  one_start.agents[0] = AgentState{experiment_path(p5, 2, 3, 1)};
  CHECK(transition_resistance(p5, idle, one_start, 1.5) ==
        doctest::Approx(1.5));

  // a finisher denying 2 while the other agent starts: 1.5 + 2
  std::vector<int> walk = experiment_path(p5, 2, 3, 1);
  GlobalState before = two_agents(
      1, AgentState{walk, static_cast<int>(walk.size()) - 1, 0, 2},
      AgentState::stationary_at(0));
  GlobalState after = two_agents(1, AgentState::stationary_at(2),
                                 AgentState{experiment_path(p5, 0, 1, 1)});
  CHECK(transition_resistance(p5, before, after, 1.5) ==
        doctest::Approx(3.5));
}

TEST_CASE("transition probabilities on constructed cases") {
  Graph s4 = make_star(5);
  NoiseParams params{0.1, 1.5};
  double eps_r = epsilon_pow_r(params);

  GlobalState idle = two_agents(1, AgentState::stationary_at(0),
                                AgentState::stationary_at(1));
  CHECK(transition_probability(s4, idle, idle, params) ==
        doctest::Approx((1 - eps_r) * (1 - eps_r)));

  // the hub has 5 constrained actions; starting one specific walk costs
  // eps^r / 5 while the other agent stays put
  GlobalState one_start = idle;
  one_start.agents[0] = AgentState{experiment_path(s4, 0, 2, 1)};
  CHECK(transition_probability(s4, idle, one_start, params) ==
        doctest::Approx(eps_r / 5.0 * (1 - eps_r)));

  // a hop-valid walk that the deterministic builder would never emit
  GlobalState rogue_start = idle;
  std::vector<int> rogue{0, 4, 0, 3, 0, 1, 0, 2};
  if (rogue == experiment_path(s4, 0, 2, 1)) rogue = {0, 3, 0, 4, 0, 1, 0, 2};
  rogue_start.agents[0] = AgentState{rogue};
  CHECK(transition_probability(s4, idle, rogue_start, params) == 0.0);

  // a stationary agent teleporting is infeasible outright
  GlobalState teleported = two_agents(1, AgentState::stationary_at(2),
                                      AgentState::stationary_at(1));
  CHECK_THROWS_AS(transition_probability(s4, idle, teleported, params),
                  std::invalid_argument);
}

TEST_CASE("finisher probability uses post-sample estimates") {
  Graph p5 = make_path(5);
  NoiseParams params{0.015, 1.5};
  std::vector<int> walk = experiment_path(p5, 2, 3, 1);
  // walk ends at node 3, far from the other agent at 0, so the final node
  // is sampled and credits both candidates
  GlobalState before = two_agents(
      1, AgentState{walk, static_cast<int>(walk.size()) - 1, 0, 2},
      AgentState::stationary_at(0));
  GlobalState keep_first = two_agents(1, AgentState::stationary_at(2),
                                      AgentState::stationary_at(0));
  GlobalState keep_second = two_agents(1, AgentState::stationary_at(3),
                                       AgentState::stationary_at(0));
  double p_first = transition_probability(p5, before, keep_first, params);
  double p_second = transition_probability(p5, before, keep_second, params);
  double stay = 1 - epsilon_pow_r(params);
  CHECK(p_first ==
        doctest::Approx(binary_choice_probability(1, 3, 0.015) * stay));
  CHECK(p_second ==
        doctest::Approx(binary_choice_probability(3, 1, 0.015) * stay));
  CHECK(p_first + p_second == doctest::Approx(stay));
}

TEST_CASE("low-noise probabilities scale like the resistance") {
  Graph s4 = make_star(5);
  GlobalState idle = two_agents(1, AgentState::stationary_at(0),
                                AgentState::stationary_at(1));
  GlobalState one_start = idle;
  one_start.agents[0] = AgentState{experiment_path(s4, 0, 2, 1)};
  double r = 1.5;
  double resistance = transition_resistance(s4, idle, one_start, r);
  CHECK(resistance == doctest::Approx(r));
  // P / eps^R approaches a finite nonzero limit (1/5 here) as eps shrinks
  double prev = 0.0;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    double ratio = transition_probability(s4, idle, one_start, {eps, r}) /
                   std::pow(eps, resistance);
    CHECK(ratio == doctest::Approx(0.2).epsilon(0.01));
    if (prev != 0.0) CHECK(ratio == doctest::Approx(prev).epsilon(0.01));
    prev = ratio;
  }
}

TEST_CASE("recurrence is all agents stationary") {
  Graph p5 = make_path(5);
  GlobalState idle = two_agents(1, AgentState::stationary_at(2),
                                AgentState::stationary_at(0));
  CHECK(is_recurrent(idle));
  GlobalState walking = idle;
  walking.agents[0] = AgentState{experiment_path(p5, 2, 3, 1)};
  CHECK_FALSE(is_recurrent(walking));
}

TEST_CASE("unilateral path resistance matches the potential gap") {
  Rng rng(301);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testutil::random_connected_graph(5 + rng.uniform_int(10), 0.4,
                                               rng);
    int delta = 1 + rng.uniform_int(2);
    int m = 2 + rng.uniform_int(2);
    ActionProfile profile = testutil::random_profile(g, m, delta, rng);
    int agent = rng.uniform_int(m);
    int a1 = profile.positions[agent];
    NodeSet actions = g.closed_neighborhood(a1);
    int a2 = actions[rng.uniform_int(static_cast<int>(actions.size()))];
    double r = 1.5;

    ActionProfile at_second = profile;
    at_second.positions[agent] = a2;
    int phi_first = potential(g, profile);
    int phi_second = potential(g, at_second);
    int best = std::max(phi_first, phi_second);

    for (bool choose_second : {false, true}) {
      auto states =
          unilateral_experiment_states(g, profile, agent, a2, choose_second);
      double resistance = unilateral_path_resistance(g, states, r);
      int phi_end = choose_second ? phi_second : phi_first;
      CHECK(resistance == doctest::Approx(r + best - phi_end));
    }
  }
}

TEST_CASE("unilateral path validation") {
  Graph p5 = make_path(5);
  ActionProfile initial{{2, 0}, 1};
  auto states = unilateral_experiment_states(p5, initial, 0, 3, true);
  CHECK_THROWS_AS(unilateral_path_resistance(p5, {states[0]}, 1.5),
                  std::invalid_argument);
  // dropping the final collapse leaves a non-recurrent endpoint
  auto truncated = states;
  truncated.pop_back();
  CHECK_THROWS_AS(unilateral_path_resistance(p5, truncated, 1.5),
                  std::invalid_argument);
  // a second walker in an interior state breaks the unilateral shape
  auto crowded = states;
  crowded[1].agents[1] = AgentState{experiment_path(p5, 0, 1, 1)};
  CHECK_THROWS_AS(unilateral_path_resistance(p5, crowded, 1.5),
                  std::invalid_argument);
}

TEST_CASE("exact coverage optima on fixtures") {
  Graph p5 = make_path(5);
  auto p5_opt = brute_force_max_coverage(p5, 2, 1);
  CHECK(p5_opt.max_covered == 5);
  std::vector<int> spread{1, 3};
  CHECK(std::find(p5_opt.maximizers.begin(), p5_opt.maximizers.end(),
                  spread) != p5_opt.maximizers.end());

  auto star_opt = brute_force_max_coverage(make_star(5), 1, 1);
  CHECK(star_opt.max_covered == 5);
  CHECK(star_opt.maximizers == std::vector<std::vector<int>>{{0}});

  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(brute_force_max_coverage(k3, 1, 1).max_covered == 3);
  CHECK(brute_force_max_coverage(k3, 1, 1).maximizers.size() == 3);

  CHECK_THROWS_AS(brute_force_max_coverage(p5, 6, 1, 100),
                  std::runtime_error);
}

TEST_CASE("inescapable local maxima") {
  CHECK(local_maxima_below_optimum(make_path(5), 2, 1).empty());

  auto trap = find_greedy_trap(10, 2, 1);
  REQUIRE(trap.has_value());
  auto traps = local_maxima_below_optimum(trap->graph, 2, 1);
  std::vector<int> sorted = trap->profile;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::find(traps.begin(), traps.end(), sorted) != traps.end());
}

TEST_CASE("occupancy statistics over an inclusive window") {
  std::vector<TraceRecord> trace;
  for (int t = 0; t <= 10; ++t) {
    trace.push_back({t, t < 5 ? 3 : 5, {0}});
  }
  auto summary = occupancy_statistics(trace, 5, 10, 5);
  CHECK(summary.ticks == 6);
  CHECK(summary.mean_covered == doctest::Approx(5.0));
  CHECK(summary.fraction_at_target == doctest::Approx(1.0));

  auto mixed = occupancy_statistics(trace, 4, 5, 5);
  CHECK(mixed.ticks == 2);
  CHECK(mixed.mean_covered == doctest::Approx(4.0));
  CHECK(mixed.fraction_at_target == doctest::Approx(0.5));

  CHECK_THROWS_AS(occupancy_statistics(trace, 8, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(occupancy_statistics(trace, 50, 60, 5),
                  std::invalid_argument);
}

TEST_CASE("simulated transitions are feasible with positive probability") {
  Rng graph_rng(311);
  Graph g = testutil::random_connected_graph(9, 0.5, graph_rng);
  NoiseParams params{0.3, 0.8};
  Rng rng(4);
  GlobalState state = initial_state(testutil::random_profile(g, 3, 1, graph_rng));
  for (int t = 0; t < 300; ++t) {
    GlobalState next = cfcm_step(state, g, params, rng);
    auto partition = classify_agents(g, state, next);
    CHECK(partition.ss.size() + partition.se.size() + partition.ee.size() +
              partition.es_first.size() + partition.es_second.size() ==
          3);
    double p = transition_probability(g, state, next, params);
    CHECK(p > 0.0);
    CHECK(p <= 1.0);
    CHECK(transition_resistance(g, state, next, 1.5) >= 0.0);
    state = next;
  }
}
