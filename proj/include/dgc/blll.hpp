#pragma once

#include <cstdint>

#include "dgc/game.hpp"
#include "dgc/rng.hpp"
#include "dgc/trace.hpp"

namespace dgc {

// epsilon is the decision noise; r sets how rarely a stationary agent starts
// an experiment (CFCM only, ignored by BLLL).
struct NoiseParams {
  double epsilon = 0.015;
  double r = 1.5;
};

void validate_noise(const NoiseParams& params);

// epsilon^r, computed in log space.
double epsilon_pow_r(const NoiseParams& params);

// Probability of picking the action with utility u_a out of {a, b}, with
// Boltzmann-style odds eps^{-u_a} : eps^{-u_b}. Overflow-safe for large
// utilities; exactly 1/2 at ties.
double binary_choice_probability(int u_a, int u_b, double eps);

struct BlllState {
  ActionProfile profile;
  std::int64_t step = 0;
};

// One round of binary log-linear learning: a uniformly chosen agent compares
// its current node against one uniform draw from its closed neighborhood and
// switches with probability eps^{-U'} / (eps^{-U} + eps^{-U'}).
BlllState blll_step(const BlllState& state, const Graph& g,
                    const NoiseParams& params, Rng& rng);

// Runs `steps` rounds from `initial`; the trace holds steps+1 records
// (tick 0 is the initial profile). Deterministic for a fixed seed.
std::vector<TraceRecord> run_blll(const Graph& g, const ActionProfile& initial,
                                  const NoiseParams& params,
                                  std::int64_t steps, std::uint64_t seed);

// Zero-noise baseline: the given agent moves to the constrained action with
// the best coverage, staying put on ties. Used to exhibit greedy traps.
ActionProfile best_response_step(const Graph& g, const ActionProfile& profile,
                                 int agent);

}  // namespace dgc
