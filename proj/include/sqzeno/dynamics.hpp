#pragma once

#include <functional>
#include <vector>

#include "sqzeno/errors.hpp"
#include "sqzeno/types.hpp"

namespace sqzeno {

enum class Component { x, y, z };

// Uniform sampling grid: n_steps intervals of width dt starting at t0,
// i.e. n_steps + 1 sample instants.
struct TimeGrid {
    double t0 = 0.0;
    double dt = 0.0;
    int n_steps = 0;

    double time_at(int k) const { return t0 + k * dt; }
    double t_end() const { return t0 + n_steps * dt; }
};

// Throws std::invalid_argument unless dt > 0 and n_steps >= 1.
void validate_grid(const TimeGrid& g);

// Bloch states sampled on a time grid; states.size() == n_steps + 1.
struct Trajectory {
    TimeGrid grid;
    std::vector<BlochState> states;

    std::vector<double> times() const;
    std::vector<double> component(Component c) const;
};

// Free-bath Bloch flow; Pauli components of lindblad_rhs applied to the
// matching density matrix:
//   dx/dt = -gamma (n + 1/2 + m cos phi) x + gamma m sin phi y
//   dy/dt = -gamma (n + 1/2 - m cos phi) y + gamma m sin phi x
//   dz/dt = -gamma (2 n + 1) z - gamma
BlochState bloch_rhs_free(const SqueezedBathParams& p, const BlochState& b);

// Flow under continuous sigma_x monitoring: rho_x evolves as in the free
// case while the monitoring pins rho_y = rho_z = 0.
BlochState bloch_rhs_projective(const SqueezedBathParams& p, const BlochState& b);

// Flow under indirect monitoring through an apparatus with coupling time
// t0_coupling > 0: the free flow plus damping -(4 / t0_coupling) on rho_y
// and rho_z.  t0_coupling -> infinity recovers the free flow; t0_coupling
// -> 0 recovers the projective one.
BlochState bloch_rhs_indirect(const SqueezedBathParams& p, double t0_coupling,
                              const BlochState& b);

// Squeezed-bath master equation generator in matrix form, evaluated by
// literal 2x2 matrix algebra:
//   L rho = gamma/2 (n+1) (2 s- rho s+ - s+ s- rho - rho s+ s-)
//         + gamma/2  n    (2 s+ rho s- - s- s+ rho - rho s- s+)
//         - gamma m e^{ i phi} s+ rho s+
//         - gamma m e^{-i phi} s- rho s-
// Its Pauli components reproduce bloch_rhs_free on the matching state.
DensityMatrix lindblad_rhs(const SqueezedBathParams& p, const DensityMatrix& rho);

// Non-selective sigma_x measurement, rho -> P rho P + (1 - P) rho (1 - P)
// with P = |+x><+x|; in Bloch form (x, y, z) -> (x, 0, 0).  Exactly
// idempotent.
DensityMatrix projective_collapse(const DensityMatrix& rho);
BlochState projective_collapse(const BlochState& b);

using BlochRhs = std::function<BlochState(const BlochState&)>;

// Classical fixed-step 4th order integration of db/dt = rhs(b), sampled on
// `grid`.  Each grid interval is subdivided into `substeps` internal steps
// (stiff flows such as bloch_rhs_indirect with small t0_coupling need
// substeps large enough that the internal step resolves the damping).  The
// Bloch-ball invariant is checked after every internal step; a violation
// aborts with InvariantViolation carrying the internal step index.
Trajectory integrate(const BlochRhs& rhs, const BlochState& b0, const TimeGrid& grid,
                     int substeps = 1);

// Least-squares decay rate of one component: minus the slope of log |v|
// against t over a fit window.  All samples in the window must be nonzero
// and of one sign (throws std::domain_error otherwise).  The windowless
// overload estimates a rate from the endpoints and fits over
// [0.1 / r_hat, 1.0 / r_hat] past grid.t0 to skip the initial transient,
// falling back to the whole grid when the estimate is unusable.
double fit_decay_rate(const Trajectory& traj, Component c);
double fit_decay_rate(const Trajectory& traj, Component c, double t_lo, double t_hi);

} // namespace sqzeno
