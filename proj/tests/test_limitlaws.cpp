#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frlp/limitlaws.hpp"
#include "frlp/rng.hpp"

using namespace frlp;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("regime classifier on the reference angles") {
    RegimeConfig cfg{0.1, 3.0, 0.05};
    CHECK(classify_regime(frac_param(kPi / 2.0), cfg) == Regime::classical);
    CHECK(classify_regime(frac_param(0.05), cfg) == Regime::warning);
    // D(pi/3) = |1 - sqrt(3)/2| + 1/sqrt(3) ~ 0.711
    FracParam third = frac_param(kPi / 3.0);
    CHECK(third.deviation == doctest::Approx(std::abs(1.0 - std::sqrt(3.0) / 2.0) +
                                             1.0 / std::sqrt(3.0)));
    CHECK(classify_regime(third, cfg) == Regime::effective_fractional);
    CHECK_THROWS_AS(classify_regime(third, RegimeConfig{3.0, 0.1, 0.05}), Error);
    CHECK_THROWS_AS(classify_regime(third, RegimeConfig{0.1, 3.0, 1.5}), Error);
}

TEST_CASE("warning regime also triggers on small s alone") {
    RegimeConfig cfg{0.5, 100.0, 0.5};
    // alpha with moderate deviation but s below the tolerance
    FracParam p = frac_param(0.4);  // s ~ 0.39, D ~ 2.9 < 100
    CHECK(classify_regime(p, cfg) == Regime::warning);
}

TEST_CASE("classical limit profile converges and records descriptors") {
    GridSpec g = make_grid(1, 16.0, 256);
    auto bank = build_bank(g, -2, 2);
    Signal f = gen_gaussian(g, 2.0, 0.0, 1.5);
    auto prof = classical_limit_profile(f, bank, sym_gauss(0.5), 1, 20);
    CHECK(prof.rows.size() == 20);
    CHECK(prof.rows.front().ell == 1);
    // errors decrease roughly linearly in |alpha - pi/2| = 2^-ell
    double e4 = prof.rows[3].block_err;
    double e8 = prof.rows[7].block_err;
    CHECK(e8 < e4 / 8.0);
    for (const auto& row : prof.rows) CHECK(row.sampling_ok);
    // square-function error is controlled by the per-block errors
    for (const auto& row : prof.rows)
        CHECK(row.square_err <= 3.0 * row.block_err + 1e-12);
    auto full = classical_limit_profile(f, bank, sym_gauss(0.5), 1, 28);
    CHECK(full.pass);
}

TEST_CASE("singular boundary profile: identity and collapse targets") {
    GridSpec g = make_grid(1, 16.0, 512);
    Signal f = gen_gaussian(g, 2.0);
    auto prof1 = singular_boundary_profile(f, sym_smoothstep(1.0, 2.0), 1.0, 22);
    CHECK(prof1.pass);  // Phi(0) = 1: selector -> identity
    auto prof2 = singular_boundary_profile(f, sym_smooth_annulus(0), 1.0, 22);
    CHECK(prof2.pass);  // Phi(0) = 0: selector collapses to zero
    // passband centers double while the band stays inside the grid
    for (std::size_t i = 1; i + 1 < prof2.rows.size(); ++i) {
        double prev = prof2.rows[i - 1].passband_center;
        double cur = prof2.rows[i].passband_center;
        if (prev > 0.0 && cur > 0.0 && 2.0 / prof2.rows[i].s <= g.nyquist())
            CHECK(cur / prev == doctest::Approx(2.0).epsilon(0.05));
    }
}

TEST_CASE("profiles are reproducible bit for bit") {
    GridSpec g = make_grid(1, 16.0, 256);
    auto bank = build_bank(g, -2, 2);
    Signal f = gen_gaussian(g, 2.0, 0.0, 1.5);
    auto a = classical_limit_profile(f, bank, sym_gauss(0.5), 1, 10);
    auto b = classical_limit_profile(f, bank, sym_gauss(0.5), 1, 10);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].block_err == b.rows[i].block_err);
        CHECK(a.rows[i].square_err == b.rows[i].square_err);
        CHECK(a.rows[i].multiplier_err == b.rows[i].multiplier_err);
    }
}
