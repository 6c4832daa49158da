#pragma once

#include "sqzeno/types.hpp"

namespace sqzeno {

// Relaxation rates of the free (unmonitored) Bloch equations.  The two
// transverse normal modes decay with `fast` = gamma (n_bar + 1/2 + m) and
// `slow` = gamma (n_bar + 1/2 - m); rho_z relaxes with `longitudinal`
// = gamma (2 n_bar + 1).  fast + slow = longitudinal.
struct DecayRates {
    double fast;
    double slow;
    double longitudinal;
};

DecayRates decay_rates(const SqueezedBathParams& p);

// Exact solution of the free Bloch equations at time t >= 0.  With
// s = sin(phi/2), c = cos(phi/2) and the rates above:
//   rho_x(t) = (x0 s^2 + y0 s c) e^{-slow t} + (x0 c^2 - y0 s c) e^{-fast t}
//   rho_y(t) = (y0 c^2 + x0 s c) e^{-slow t} + (y0 s^2 - x0 s c) e^{-fast t}
//   rho_z(t) = z0 e^{-long t} - (1 - e^{-long t}) / (2 n_bar + 1)
// t = 0 returns b0 unchanged.
BlochState free_solution(const SqueezedBathParams& p, const BlochState& b0, double t);

// Decay rate of rho_x under continuous sigma_x monitoring,
// gamma (n_bar + 1/2 + m cos phi).  Ranges over [slow, fast] as phi varies.
double monitored_rate(const SqueezedBathParams& p);

// Squeezing phase at which the free transverse decay of b0 is a pure
// exponential at the fast rate; monitoring then slows the decay down to
// monitored_rate(phi) < fast (Zeno side).
double critical_phase_zeno(const BlochState& b0);

// Dual phase: pure slow decay when free, sped up by monitoring (anti-Zeno).
double critical_phase_antizeno(const BlochState& b0);

// Second moments of the equivalent fluctuating transverse field, scaled by
// coupling_scale > 0:
//   bx2 = coupling_scale (n_bar + 1/2 - m cos phi)
//   by2 = coupling_scale (n_bar + 1/2 + m cos phi)
FieldFluctuations field_fluctuations(const SqueezedBathParams& p, double coupling_scale);

// Probability that a single sigma_x measurement at time t (after free
// evolution from b0) gives +1: (1 + rho_x(t)) / 2.
double p_plus_single(const SqueezedBathParams& p, const BlochState& b0, double t);

// Probability that continuous sigma_x monitoring over [0, t] never leaves
// the +1 branch (dense-measurement limit):
//   (1 + rho_x(0)) / 2 * exp(-monitored_rate * t / 2).
double p_plus_continuous(const SqueezedBathParams& p, const BlochState& b0, double t);

// rho_x(t) under continuous sigma_x monitoring started from rho_x(0) =
// rho_x0; rho_y and rho_z are pinned to zero by the monitoring:
//   rho_x(t) = rho_x0 exp(-monitored_rate * t).
double measured_solution(const SqueezedBathParams& p, double rho_x0, double t);

} // namespace sqzeno
