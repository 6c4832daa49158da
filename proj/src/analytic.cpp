#include "sqzeno/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sqzeno {

namespace {

void require_nonnegative_time(double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
}

void require_transverse(const BlochState& b0) {
    if (b0.x == 0.0 && b0.y == 0.0) {
        throw std::invalid_argument(
            "critical phase undefined: initial state has no transverse component");
    }
}

} // namespace

DecayRates decay_rates(const SqueezedBathParams& p) {
    DecayRates r;
    r.fast = p.gamma * (p.n_bar + 0.5 + p.m);
    r.slow = p.gamma * (p.n_bar + 0.5 - p.m);
    r.longitudinal = p.gamma * (2.0 * p.n_bar + 1.0);
    return r;
}

BlochState free_solution(const SqueezedBathParams& p, const BlochState& b0, double t) {
    validate_bloch(b0);
    require_nonnegative_time(t);
    if (t == 0.0) return b0;

    const DecayRates r = decay_rates(p);
    const double s = std::sin(0.5 * p.phi);
    const double c = std::cos(0.5 * p.phi);
    const double es = std::exp(-r.slow * t);
    const double ef = std::exp(-r.fast * t);
    const double el = std::exp(-r.longitudinal * t);
    const double sc = s * c;

    BlochState b;
    b.x = (b0.x * s * s + b0.y * sc) * es + (b0.x * c * c - b0.y * sc) * ef;
    b.y = (b0.y * c * c + b0.x * sc) * es + (b0.y * s * s - b0.x * sc) * ef;
    // Fixed point of rho_z is -1 / (2 n_bar + 1); expm1 keeps small t exact.
    b.z = b0.z * el + std::expm1(-r.longitudinal * t) / (2.0 * p.n_bar + 1.0);
    return b;
}

double monitored_rate(const SqueezedBathParams& p) {
    return p.gamma * (p.n_bar + 0.5 + p.m * std::cos(p.phi));
}

double critical_phase_zeno(const BlochState& b0) {
    require_transverse(b0);
    return wrap_phase(2.0 * std::atan2(-b0.y, b0.x));
}

double critical_phase_antizeno(const BlochState& b0) {
    require_transverse(b0);
    return wrap_phase(2.0 * std::atan2(b0.x, b0.y));
}

FieldFluctuations field_fluctuations(const SqueezedBathParams& p, double coupling_scale) {
    if (!(coupling_scale > 0.0)) throw std::invalid_argument("coupling_scale must be > 0");
    FieldFluctuations f;
    f.bx2 = coupling_scale * (p.n_bar + 0.5 - p.m * std::cos(p.phi));
    f.by2 = coupling_scale * (p.n_bar + 0.5 + p.m * std::cos(p.phi));
    f.b_transverse2 = f.bx2 + f.by2;
    return f;
}

double p_plus_single(const SqueezedBathParams& p, const BlochState& b0, double t) {
    double v = 0.5 * (1.0 + free_solution(p, b0, t).x);
    return std::clamp(v, 0.0, 1.0);
}

double p_plus_continuous(const SqueezedBathParams& p, const BlochState& b0, double t) {
    validate_bloch(b0);
    require_nonnegative_time(t);
    return 0.5 * (1.0 + b0.x) * std::exp(-0.5 * monitored_rate(p) * t);
}

double measured_solution(const SqueezedBathParams& p, double rho_x0, double t) {
    if (!(std::abs(rho_x0) <= 1.0)) throw std::invalid_argument("|rho_x0| must be <= 1");
    require_nonnegative_time(t);
    return rho_x0 * std::exp(-monitored_rate(p) * t);
}

} // namespace sqzeno
