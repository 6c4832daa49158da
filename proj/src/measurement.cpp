#include "sqzeno/measurement.hpp"

#include "sqzeno/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace sqzeno {

void validate_mc(const McConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("measurement dt must be > 0");
    if (cfg.n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
    if (cfg.n_traj < 1) throw std::invalid_argument("n_traj must be >= 1");
}

namespace {

// rho_x(dt) - 1 after free evolution from the +1 eigenstate; expm1 keeps
// the deviation from 1 accurate for small dt.
double step_drop(const SqueezedBathParams& p, double dt) {
    const DecayRates r = decay_rates(p);
    const double s = std::sin(0.5 * p.phi);
    const double c = std::cos(0.5 * p.phi);
    return s * s * std::expm1(-r.slow * dt) + c * c * std::expm1(-r.fast * dt);
}

// xoshiro256++ with the reference constants.  Chosen over std::mt19937_64
// because one engine is constructed per trajectory and the 4-word state
// keeps that construction (and the draw itself) cheap; the state is filled
// from the canonical splitmix64 chain, so any 64-bit seed is valid.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        for (int i = 0; i < 4; ++i) {
            s_[i] = splitmix64(seed + static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ull);
        }
    }

    std::uint64_t operator()() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

} // namespace

double survival_step_factor(const SqueezedBathParams& p, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("measurement dt must be > 0");
    return 1.0 + 0.5 * step_drop(p, dt);
}

double sequential_survival(const SqueezedBathParams& p, const BlochState& b0,
                           const McConfig& cfg) {
    validate_mc(cfg);
    validate_bloch(b0);
    const double p1 = 0.5 * (1.0 + b0.x);
    if (cfg.n_steps == 0 || p1 == 0.0) return p1;
    return p1 * std::exp(cfg.n_steps * std::log1p(0.5 * step_drop(p, cfg.dt)));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t trajectory_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) + index);
}

SurvivalEstimate stochastic_survival(const SqueezedBathParams& p, const BlochState& b0,
                                     const McConfig& cfg) {
    validate_mc(cfg);
    validate_bloch(b0);
    const double p1 = 0.5 * (1.0 + b0.x);
    const double q = survival_step_factor(p, cfg.dt);

    long survivors = 0;
    for (int i = 0; i < cfg.n_traj; ++i) {
        Xoshiro256pp rng(trajectory_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        bool alive = uniform() < p1;
        for (int k = 0; alive && k < cfg.n_steps; ++k) alive = uniform() < q;
        if (alive) ++survivors;
    }

    SurvivalEstimate est;
    est.n_traj = cfg.n_traj;
    est.p_hat = static_cast<double>(survivors) / cfg.n_traj;
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / cfg.n_traj);
    return est;
}

Trajectory repeated_measurement_evolution(const SqueezedBathParams& p, const BlochState& b0,
                                          const McConfig& cfg) {
    validate_mc(cfg);
    if (cfg.n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");

    Trajectory traj;
    traj.grid = TimeGrid{0.0, cfg.dt, cfg.n_steps};
    traj.states.reserve(static_cast<std::size_t>(cfg.n_steps) + 1);

    BlochState b = projective_collapse(b0);
    traj.states.push_back(b);
    for (int k = 0; k < cfg.n_steps; ++k) {
        b = projective_collapse(free_solution(p, b, cfg.dt));
        traj.states.push_back(b);
    }
    return traj;
}

} // namespace sqzeno
