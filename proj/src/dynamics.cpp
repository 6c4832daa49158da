#include "sqzeno/dynamics.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace sqzeno {

namespace {

using cplx = std::complex<double>;

// Minimal 2x2 complex matrix algebra, enough to spell the master equation
// generator out literally.
struct Mat2 {
    cplx a, b, c, d; // rows: (a b; c d)
};

Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

Mat2 operator+(const Mat2& l, const Mat2& r) {
    return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
}

Mat2 operator-(const Mat2& l, const Mat2& r) {
    return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d};
}

Mat2 operator*(const cplx& s, const Mat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
}

Mat2 to_mat(const DensityMatrix& rho) { return {rho.ee, rho.eg, rho.ge, rho.gg}; }

DensityMatrix to_density(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }

constexpr Mat2 kSigmaMinus{{0, 0}, {0, 0}, {1, 0}, {0, 0}}; // |g><e|
constexpr Mat2 kSigmaPlus{{0, 0}, {1, 0}, {0, 0}, {0, 0}};  // |e><g|

} // namespace

void validate_grid(const TimeGrid& g) {
    if (!(g.dt > 0.0)) throw std::invalid_argument("grid dt must be > 0");
    if (g.n_steps < 1) throw std::invalid_argument("grid n_steps must be >= 1");
    if (!std::isfinite(g.t0)) throw std::invalid_argument("grid t0 must be finite");
}

std::vector<double> Trajectory::times() const {
    std::vector<double> t(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) t[k] = grid.time_at(static_cast<int>(k));
    return t;
}

std::vector<double> Trajectory::component(Component c) const {
    std::vector<double> v(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
        switch (c) {
        case Component::x: v[k] = states[k].x; break;
        case Component::y: v[k] = states[k].y; break;
        case Component::z: v[k] = states[k].z; break;
        }
    }
    return v;
}

BlochState bloch_rhs_free(const SqueezedBathParams& p, const BlochState& b) {
    const double cos_phi = std::cos(p.phi);
    const double sin_phi = std::sin(p.phi);
    BlochState d;
    d.x = -p.gamma * (p.n_bar + 0.5 + p.m * cos_phi) * b.x + p.gamma * p.m * sin_phi * b.y;
    d.y = -p.gamma * (p.n_bar + 0.5 - p.m * cos_phi) * b.y + p.gamma * p.m * sin_phi * b.x;
    d.z = -p.gamma * (2.0 * p.n_bar + 1.0) * b.z - p.gamma;
    return d;
}

BlochState bloch_rhs_projective(const SqueezedBathParams& p, const BlochState& b) {
    BlochState d = bloch_rhs_free(p, b);
    d.y = 0.0;
    d.z = 0.0;
    return d;
}

BlochState bloch_rhs_indirect(const SqueezedBathParams& p, double t0_coupling,
                              const BlochState& b) {
    if (!(t0_coupling > 0.0)) throw std::invalid_argument("t0_coupling must be > 0");
    BlochState d = bloch_rhs_free(p, b);
    d.y -= (4.0 / t0_coupling) * b.y;
    d.z -= (4.0 / t0_coupling) * b.z;
    return d;
}

DensityMatrix lindblad_rhs(const SqueezedBathParams& p, const DensityMatrix& rho) {
    validate_density(rho);
    const Mat2 r = to_mat(rho);
    const Mat2& sm = kSigmaMinus;
    const Mat2& sp = kSigmaPlus;
    const cplx half_down{0.5 * p.gamma * (p.n_bar + 1.0), 0.0};
    const cplx half_up{0.5 * p.gamma * p.n_bar, 0.0};
    const cplx two{2.0, 0.0};
    const cplx pump = p.gamma * p.m * std::exp(cplx{0.0, p.phi});

    Mat2 out = half_down * (two * (sm * r * sp) - sp * sm * r - r * (sp * sm));
    out = out + half_up * (two * (sp * r * sm) - sm * sp * r - r * (sm * sp));
    out = out - pump * (sp * r * sp);
    out = out - std::conj(pump) * (sm * r * sm);
    return to_density(out);
}

DensityMatrix projective_collapse(const DensityMatrix& rho) {
    validate_density(rho);
    // P rho P + (1-P) rho (1-P) with P = |+x><+x| simplifies to
    // (rho + sigma_x rho sigma_x) / 2; this form is exactly idempotent.
    DensityMatrix out;
    out.ee = 0.5 * (rho.ee + rho.gg);
    out.gg = 0.5 * (rho.ee + rho.gg);
    out.eg = 0.5 * (rho.eg + rho.ge);
    out.ge = 0.5 * (rho.eg + rho.ge);
    return out;
}

BlochState projective_collapse(const BlochState& b) {
    validate_bloch(b);
    return {b.x, 0.0, 0.0};
}

namespace {

BlochState rk4_step(const BlochRhs& rhs, const BlochState& b, double h) {
    const BlochState k1 = rhs(b);
    const BlochState k2 = rhs(b + (0.5 * h) * k1);
    const BlochState k3 = rhs(b + (0.5 * h) * k2);
    const BlochState k4 = rhs(b + h * k3);
    return b + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

} // namespace

Trajectory integrate(const BlochRhs& rhs, const BlochState& b0, const TimeGrid& grid,
                     int substeps) {
    validate_grid(grid);
    if (substeps < 1) throw std::invalid_argument("substeps must be >= 1");
    validate_bloch(b0);

    Trajectory traj;
    traj.grid = grid;
    traj.states.reserve(static_cast<std::size_t>(grid.n_steps) + 1);
    traj.states.push_back(b0);

    const double h = grid.dt / substeps;
    BlochState b = b0;
    long internal_step = 0;
    for (int k = 1; k <= grid.n_steps; ++k) {
        for (int j = 0; j < substeps; ++j) {
            b = rk4_step(rhs, b, h);
            ++internal_step;
            if (!in_bloch_ball(b)) {
                std::ostringstream os;
                os << "Bloch-ball invariant violated at step " << internal_step
                   << " (t ~ " << grid.t0 + internal_step * h << ", |b|^2 = " << norm2(b)
                   << ")";
                throw InvariantViolation(os.str(), internal_step);
            }
        }
        traj.states.push_back(b);
    }
    return traj;
}

namespace {

double fit_loglinear_rate(const std::vector<double>& t, const std::vector<double>& v,
                          std::size_t lo, std::size_t hi) {
    // Inclusive index window [lo, hi]; requires >= 2 samples, one sign.
    const std::size_t n = hi - lo + 1;
    if (n < 2) throw std::invalid_argument("fit window holds fewer than two samples");

    bool positive = v[lo] > 0.0;
    double t_mean = 0.0, l_mean = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) {
        if (v[k] == 0.0 || (v[k] > 0.0) != positive) {
            throw std::domain_error(
                "fit_decay_rate: component changes sign or vanishes in the fit window");
        }
        t_mean += t[k];
        l_mean += std::log(std::abs(v[k]));
    }
    t_mean /= static_cast<double>(n);
    l_mean /= static_cast<double>(n);

    double num = 0.0, den = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) {
        const double dt = t[k] - t_mean;
        num += dt * (std::log(std::abs(v[k])) - l_mean);
        den += dt * dt;
    }
    if (den == 0.0) throw std::invalid_argument("fit window has zero time extent");
    return -num / den;
}

} // namespace

double fit_decay_rate(const Trajectory& traj, Component c, double t_lo, double t_hi) {
    if (traj.states.size() < 2) throw std::invalid_argument("trajectory holds fewer than two samples");
    if (!(t_lo < t_hi)) throw std::invalid_argument("fit window must satisfy t_lo < t_hi");
    const std::vector<double> t = traj.times();
    const std::vector<double> v = traj.component(c);

    // Half-step tolerance so window edges that coincide with samples are kept.
    const double eps = 0.5 * traj.grid.dt;
    std::size_t lo = 0;
    while (lo < t.size() && t[lo] < t_lo - eps) ++lo;
    std::size_t hi = t.size();
    while (hi > 0 && t[hi - 1] > t_hi + eps) --hi;
    if (lo >= hi) throw std::invalid_argument("fit window contains no samples");
    return fit_loglinear_rate(t, v, lo, hi - 1);
}

double fit_decay_rate(const Trajectory& traj, Component c) {
    if (traj.states.size() < 2) throw std::invalid_argument("trajectory holds fewer than two samples");
    const std::vector<double> t = traj.times();
    const std::vector<double> v = traj.component(c);
    const std::size_t last = v.size() - 1;

    // Endpoint rate estimate picks a window clear of any fast transient.
    const double v0 = v.front(), v1 = v.back();
    double r_hat = 0.0;
    if (v0 != 0.0 && v1 != 0.0 && (v0 > 0.0) == (v1 > 0.0)) {
        r_hat = std::log(std::abs(v0 / v1)) / (t.back() - t.front());
    }
    if (r_hat > 0.0) {
        const double t_lo = traj.grid.t0 + 0.1 / r_hat;
        const double t_hi = traj.grid.t0 + 1.0 / r_hat;
        const double eps = 0.5 * traj.grid.dt;
        std::size_t lo = 0;
        while (lo < t.size() && t[lo] < t_lo - eps) ++lo;
        std::size_t hi = t.size();
        while (hi > 0 && t[hi - 1] > t_hi + eps) --hi;
        if (lo + 1 < hi) return fit_loglinear_rate(t, v, lo, hi - 1);
    }
    return fit_loglinear_rate(t, v, 0, last);
}

} // namespace sqzeno
