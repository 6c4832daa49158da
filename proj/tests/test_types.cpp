#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqzeno/types.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace sqzeno;

namespace {

constexpr double kPi = std::numbers::pi;

std::mt19937_64 test_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

BlochState random_ball_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        BlochState b{u(rng), u(rng), u(rng)};
        if (norm2(b) <= 1.0) return b;
    }
}

} // namespace

TEST_CASE("make_params derives m and wraps phi") {
    const SqueezedBathParams vacuum = make_params(0.0, 0.0, 1.0);
    CHECK(vacuum.m == 0.0);
    CHECK(vacuum.phi == 0.0);

    const SqueezedBathParams p = make_params(1.0, 0.25, 2.0);
    CHECK(p.m == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(p.gamma == 2.0);

    // 3*pi is the canonical alias of pi and must land exactly on +pi.
    CHECK(make_params(1.0, 3.0 * kPi, 1.0).phi == kPi);
    CHECK(make_params(1.0, kPi, 1.0).phi == kPi);
    CHECK(make_params(1.0, -kPi, 1.0).phi == kPi);
    CHECK(make_params(1.0, 2.0 * kPi, 1.0).phi == 0.0);
}

TEST_CASE("make_params rejects unphysical input") {
    CHECK_THROWS_AS(make_params(-0.1, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_params(1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_params(1.0, 0.0, -2.0), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(make_params(nan, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_params(1.0, nan, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_params(1.0, std::numeric_limits<double>::infinity(), 1.0),
                    std::invalid_argument);
}

TEST_CASE("m^2 = n_bar (n_bar + 1) to machine precision") {
    auto rng = test_rng(11);
    std::uniform_real_distribution<double> n_dist(0.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double n = n_dist(rng);
        const SqueezedBathParams p = make_params(n, 0.0, 1.0);
        const double target = n * (n + 1.0);
        CHECK(std::abs(p.m * p.m - target) <=
              8.0 * std::numeric_limits<double>::epsilon() * target);
        CHECK(p.m >= n);        // sqrt(n^2 + n) >= n
        CHECK(p.m <= n + 0.5);  // and <= n + 1/2
    }
}

TEST_CASE("wrap_phase lands in (-pi, pi] and is idempotent") {
    auto rng = test_rng(12);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double w = wrap_phase(u(rng));
        CHECK(w > -kPi);
        CHECK(w <= kPi);
        CHECK(wrap_phase(w) == w);
    }
}

TEST_CASE("squeezing_r inverts n_bar = sinh^2 r") {
    auto rng = test_rng(13);
    std::uniform_real_distribution<double> n_dist(0.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const double n = n_dist(rng);
        const double r = squeezing_r(make_params(n, 0.0, 1.0));
        const double sh = std::sinh(r);
        CHECK(sh * sh == doctest::Approx(n).epsilon(1e-12));
    }
    CHECK(squeezing_r(make_params(0.0, 0.0, 1.0)) == 0.0);
}

TEST_CASE("bloch_to_density on the cardinal states") {
    const DensityMatrix up = bloch_to_density({0.0, 0.0, 1.0});
    CHECK(up.ee == std::complex<double>{1.0, 0.0});
    CHECK(up.gg == std::complex<double>{0.0, 0.0});
    CHECK(up.eg == std::complex<double>{0.0, 0.0});

    const DensityMatrix plus_x = bloch_to_density({1.0, 0.0, 0.0});
    CHECK(plus_x.ee.real() == 0.5);
    CHECK(plus_x.gg.real() == 0.5);
    CHECK(plus_x.eg == std::complex<double>{0.5, 0.0});
    CHECK(plus_x.ge == std::complex<double>{0.5, 0.0});

    const DensityMatrix plus_y = bloch_to_density({0.0, 1.0, 0.0});
    CHECK(plus_y.eg == std::complex<double>{0.0, -0.5});
    CHECK(plus_y.ge == std::complex<double>{0.0, 0.5});
}

TEST_CASE("bloch/density round trip within 1e-15 per component") {
    auto rng = test_rng(14);
    for (int i = 0; i < 1000; ++i) {
        const BlochState b = random_ball_state(rng);
        const DensityMatrix rho = bloch_to_density(b);
        CHECK(std::abs(rho.ee.real() + rho.gg.real() - 1.0) <= 1e-15);
        CHECK(rho.eg == std::conj(rho.ge));
        const BlochState back = density_to_bloch(rho);
        CHECK(std::abs(back.x - b.x) <= 1e-15);
        CHECK(std::abs(back.y - b.y) <= 1e-15);
        CHECK(std::abs(back.z - b.z) <= 1e-15);
    }
}

TEST_CASE("bloch ball validation") {
    CHECK(in_bloch_ball({1.0, 0.0, 0.0}));
    CHECK(in_bloch_ball({0.6, 0.0, 0.8}));
    CHECK_FALSE(in_bloch_ball({1.0, 0.0, 1e-5}));
    CHECK_NOTHROW(validate_bloch({0.0, -1.0, 0.0}));
    CHECK_THROWS_AS(validate_bloch({1.1, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(bloch_to_density({0.9, 0.9, 0.9}), std::invalid_argument);
}

TEST_CASE("density validation rejects non-states") {
    DensityMatrix rho = bloch_to_density({0.2, 0.3, -0.1});

    DensityMatrix non_hermitian = rho;
    non_hermitian.eg = {0.5, 0.0};
    non_hermitian.ge = {0.2, 0.0};
    CHECK_THROWS_AS(density_to_bloch(non_hermitian), std::invalid_argument);

    DensityMatrix bad_trace = rho;
    bad_trace.ee += 0.1;
    CHECK_THROWS_AS(density_to_bloch(bad_trace), std::invalid_argument);

    // Hermitian with unit trace but a negative eigenvalue (|b| > 1).
    DensityMatrix negative{{0.5, 0.0}, {0.6, 0.0}, {0.6, 0.0}, {0.5, 0.0}};
    CHECK_THROWS_AS(density_to_bloch(negative), std::invalid_argument);
}

TEST_CASE("pauli_components also serves traceless matrices") {
    // sigma_z itself: components (0, 0, 2).
    const DensityMatrix sz{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}};
    const BlochState c = pauli_components(sz);
    CHECK(c.x == 0.0);
    CHECK(c.y == 0.0);
    CHECK(c.z == 2.0);
}
