#include "sqzeno/types.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sqzeno {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

} // namespace

double wrap_phase(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::remainder(phi, two_pi);
    // remainder lands in [-pi, pi]; fold the lower endpoint onto +pi.
    if (w <= -std::numbers::pi) w += two_pi;
    return w;
}

SqueezedBathParams make_params(double n_bar, double phi, double gamma) {
    if (!(n_bar >= 0.0)) fail("n_bar must be >= 0");
    if (!(gamma > 0.0)) fail("gamma must be > 0");
    if (!std::isfinite(phi)) fail("phi must be finite");
    SqueezedBathParams p;
    p.n_bar = n_bar;
    p.phi = wrap_phase(phi);
    p.gamma = gamma;
    p.m = std::sqrt(n_bar * (n_bar + 1.0));
    return p;
}

double squeezing_r(const SqueezedBathParams& p) {
    return std::asinh(std::sqrt(p.n_bar));
}

double norm2(const BlochState& b) {
    return b.x * b.x + b.y * b.y + b.z * b.z;
}

bool in_bloch_ball(const BlochState& b, double slack) {
    return norm2(b) <= 1.0 + slack;
}

void validate_bloch(const BlochState& b, double slack) {
    if (!in_bloch_ball(b, slack)) {
        std::ostringstream os;
        os << "Bloch vector outside the unit ball: |b|^2 = " << norm2(b);
        fail(os.str());
    }
}

DensityMatrix bloch_to_density(const BlochState& b) {
    validate_bloch(b);
    DensityMatrix rho;
    rho.ee = {0.5 * (1.0 + b.z), 0.0};
    rho.gg = {0.5 * (1.0 - b.z), 0.0};
    rho.eg = {0.5 * b.x, -0.5 * b.y};
    rho.ge = {0.5 * b.x, 0.5 * b.y};
    return rho;
}

BlochState pauli_components(const DensityMatrix& m) {
    BlochState b;
    b.x = (m.ge + m.eg).real();
    b.y = (m.ge - m.eg).imag();
    b.z = (m.ee - m.gg).real();
    return b;
}

void validate_density(const DensityMatrix& rho, double tol) {
    if (std::abs(rho.eg - std::conj(rho.ge)) > tol ||
        std::abs(rho.ee.imag()) > tol || std::abs(rho.gg.imag()) > tol) {
        fail("density matrix is not Hermitian");
    }
    double tr = rho.ee.real() + rho.gg.real();
    if (std::abs(tr - 1.0) > tol) {
        std::ostringstream os;
        os << "density matrix trace is " << tr << ", expected 1";
        fail(os.str());
    }
    // Smaller eigenvalue of the Hermitian part must be >= -tol.
    double a = rho.ee.real();
    double d = rho.gg.real();
    double half_diff = 0.5 * (a - d);
    double lambda_min = 0.5 * (a + d) - std::sqrt(half_diff * half_diff + std::norm(rho.eg));
    if (lambda_min < -tol) {
        std::ostringstream os;
        os << "density matrix has negative eigenvalue " << lambda_min;
        fail(os.str());
    }
}

BlochState density_to_bloch(const DensityMatrix& rho) {
    validate_density(rho);
    return pauli_components(rho);
}

} // namespace sqzeno
