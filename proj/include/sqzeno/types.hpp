#pragma once

#include <complex>

namespace sqzeno {

// Slack allowed on the Bloch-ball constraint |b|^2 <= 1; absorbs integrator
// and collapse round-off without admitting unphysical states.
inline constexpr double kBlochBallSlack = 1e-12;

// Tolerance for hermiticity, unit trace and positivity of density matrices.
inline constexpr double kDensityTol = 1e-12;

// Broadband squeezed vacuum bath felt by a two-level atom: mean photon
// number n_bar, squeezing phase phi in (-pi, pi], vacuum decay rate gamma.
// The squeezing magnitude m = sqrt(n_bar (n_bar + 1)) of an ideal minimum
// uncertainty squeezed bath is always derived, never stored independently,
// so (n_bar, m) cannot drift out of sync.
struct SqueezedBathParams {
    double n_bar;
    double phi;
    double gamma;
    double m;
};

// Validates n_bar >= 0, gamma > 0, phi finite; wraps phi into (-pi, pi].
SqueezedBathParams make_params(double n_bar, double phi, double gamma);

// Reduce an angle to the principal branch (-pi, pi].
double wrap_phase(double phi);

// Squeezing parameter r with n_bar = sinh^2(r).
double squeezing_r(const SqueezedBathParams& p);

// Bloch vector (rho_x, rho_y, rho_z).  Physical states satisfy
// |b|^2 <= 1 + kBlochBallSlack.
struct BlochState {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline BlochState operator+(const BlochState& a, const BlochState& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline BlochState operator-(const BlochState& a, const BlochState& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline BlochState operator*(double s, const BlochState& b) {
    return {s * b.x, s * b.y, s * b.z};
}

double norm2(const BlochState& b);
bool in_bloch_ball(const BlochState& b, double slack = kBlochBallSlack);

// Throws std::invalid_argument when b lies outside the Bloch ball.
void validate_bloch(const BlochState& b, double slack = kBlochBallSlack);

// Two-level density matrix in the sigma_z eigenbasis, excited state first:
// rho = [[ee, eg], [ge, gg]].
struct DensityMatrix {
    std::complex<double> ee;
    std::complex<double> eg;
    std::complex<double> ge;
    std::complex<double> gg;
};

// rho = (1 + x sigma_x + y sigma_y + z sigma_z) / 2 and its inverse.
// Both validate their input (Bloch ball resp. hermiticity, unit trace,
// positivity up to kDensityTol).
DensityMatrix bloch_to_density(const BlochState& b);
BlochState density_to_bloch(const DensityMatrix& rho);

// Pauli components (x, y, z) of a Hermitian matrix, without any state
// validation; also meaningful for traceless derivative matrices.
BlochState pauli_components(const DensityMatrix& m);

// Throws std::invalid_argument when rho is not a density matrix within tol.
void validate_density(const DensityMatrix& rho, double tol = kDensityTol);

// Second moments of the fictitious fluctuating transverse field that
// represents the bath, in units of the caller-supplied coupling scale.
// b_transverse2 = bx2 + by2 holds exactly and is phase independent.
struct FieldFluctuations {
    double bx2;
    double by2;
    double b_transverse2;
};

} // namespace sqzeno
