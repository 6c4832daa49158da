#pragma once

#include <cstdint>

#include "sqzeno/dynamics.hpp"

namespace sqzeno {

// Repeated sigma_x measurement protocol: an initial measurement at t = 0
// followed by n_steps further measurements spaced dt apart.  n_traj and
// seed drive the stochastic sampler only.
struct McConfig {
    double dt = 0.0;
    int n_steps = 0;
    int n_traj = 1;
    std::uint64_t seed = 0;
};

// Throws std::invalid_argument unless dt > 0, n_steps >= 0, n_traj >= 1.
void validate_mc(const McConfig& cfg);

struct SurvivalEstimate {
    double p_hat;
    double std_err; // binomial, sqrt(p_hat (1 - p_hat) / n_traj)
    int n_traj;
};

// Survival factor of one measurement interval: the +1 probability of a
// sigma_x measurement after free evolution for dt from the +1 eigenstate.
// Computed via expm1 so the deviation from 1 stays accurate for small dt:
//   q = 1 + [s^2 expm1(-slow dt) + c^2 expm1(-fast dt)] / 2,
// with s = sin(phi/2), c = cos(phi/2); to first order in dt,
//   1 - q ~ monitored_rate / 2 * dt.
double survival_step_factor(const SqueezedBathParams& p, double dt);

// Probability that the initial measurement and all n_steps subsequent ones
// give +1: p1 q^n_steps with p1 = (1 + rho_x(0)) / 2, accumulated in log
// space.  n_steps = 0 yields p1.
double sequential_survival(const SqueezedBathParams& p, const BlochState& b0,
                           const McConfig& cfg);

// Monte Carlo estimate of sequential_survival.  Each trajectory draws one
// uniform per measurement and terminates on the first -1 outcome; after any
// +1 the state is exactly the +1 eigenstate, so every interval reuses
// survival_step_factor.
SurvivalEstimate stochastic_survival(const SqueezedBathParams& p, const BlochState& b0,
                                     const McConfig& cfg);

// Non-selective alternation of free evolution and sigma_x collapse.  Sample
// k holds the post-collapse state at t = k dt; sample 0 is the collapsed
// initial state (rho_x0, 0, 0).
Trajectory repeated_measurement_evolution(const SqueezedBathParams& p, const BlochState& b0,
                                          const McConfig& cfg);

// Deterministic seed -> stream mapping, stable across platforms: trajectory
// i uses a xoshiro256++ engine whose four state words come from the
// canonical splitmix64 chain started at trajectory_seed(seed, i) =
// splitmix64(splitmix64(seed) + i); uniforms in [0, 1) are
// (engine() >> 11) * 2^-53.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t trajectory_seed(std::uint64_t seed, std::uint64_t index);

} // namespace sqzeno
