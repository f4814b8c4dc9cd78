#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frlp/frft.hpp"
#include "frlp/rng.hpp"

using namespace frlp;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_l2(const Signal& a, const Signal& b) {
    Signal d(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) d.v[i] = a.v[i] - b.v[i];
    return lp_norm(d, 2.0) / lp_norm(b, 2.0);
}
} // namespace

TEST_CASE("chirp factor is unimodular and invertible") {
    GridSpec g = make_grid(1, 16.0, 128);
    FracParam p = frac_param(1.1);
    Rng rng(1);
    Signal f(g);
    for (auto& z : f.v) z = rng.cgauss();
    Signal h = chirp_mul(f, p, ChirpDirection::forward);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(std::abs(std::abs(h.v[i]) - std::abs(f.v[i])) < 1e-14 * std::abs(f.v[i]) + 1e-300);
    Signal back = chirp_mul(h, p, ChirpDirection::inverse);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(std::abs(back.v[i] - f.v[i]) < 1e-14);
}

TEST_CASE("chirp at the right angle is the identity; delta at zero is fixed") {
    GridSpec g = make_grid(1, 16.0, 128);
    Signal f(g);
    f.v[std::size_t(g.samples / 2)] = {1.0, 0.0};
    for (double alpha : {0.4, 1.1, 2.7}) {
        Signal h = chirp_mul(f, frac_param(alpha), ChirpDirection::forward);
        CHECK(std::abs(h.v[std::size_t(g.samples / 2)] - cplx{1.0, 0.0}) < 1e-15);
    }
    Rng rng(2);
    Signal r(g);
    for (auto& z : r.v) z = rng.cgauss();
    Signal h = chirp_mul(r, frac_param(kPi / 2.0), ChirpDirection::forward);
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(std::abs(h.v[i] - r.v[i]) < 5e-14);
}

TEST_CASE("frft at the right angle equals the grid Fourier transform") {
    GridSpec g = make_grid(1, 16.0, 256);
    Signal f = gen_gaussian(g, 1.0, 0.3, 0.7);
    Spectrum a = frft(f, frac_param(kPi / 2.0));
    Spectrum b = grid_fourier(f);
    double peak = 0.0;
    for (auto& z : b.v) peak = std::max(peak, std::abs(z));
    for (std::size_t i = 0; i < a.v.size(); ++i)
        CHECK(std::abs(a.v[i] - b.v[i]) < 1e-12 * peak);
}

TEST_CASE("frft round-trips on admissible signals across angles") {
    GridSpec g = make_grid(1, 8.0, 256);
    for (double alpha : {0.9, kPi / 4.0, 1.1, 2.0, -1.1}) {
        FracParam p = frac_param(alpha);
        Rng rng(17);
        Signal f = gen_random_bandlimited(g, 3.0, 1.0, rng);
        Signal back = ifrft(frft(f, p), p);
        CHECK(rel_l2(back, f) < 1e-10);
    }
}

TEST_CASE("frft plan matches the free functions and is reusable") {
    GridSpec g = make_grid(1, 8.0, 128);
    FracParam p = frac_param(1.3);
    FrftPlan plan(g, p);
    CHECK(std::abs(std::abs(plan.unit_constant()) - 1.0) < 1e-14);
    Rng rng(3);
    Signal f = gen_random_bandlimited(g, 2.0, 1.0, rng);
    Spectrum a = plan.forward(f);
    Spectrum b = frft(f, p);
    for (std::size_t i = 0; i < a.v.size(); ++i) CHECK(a.v[i] == b.v[i]);
}

TEST_CASE("2-d frft agrees with the direct kernel quadrature and round-trips") {
    GridSpec g = make_grid(2, 6.0, 16);
    Signal f(g);
    for (int a = 0; a < g.samples; ++a)
        for (int b = 0; b < g.samples; ++b) {
            double x = g.coord(a), y = g.coord(b);
            f.v[std::size_t(a) * g.samples + b] =
                cplx{1.0, 0.5} * std::exp(-kPi * (x * x + y * y) / 1.2);
        }
    double alpha = 1.1;
    FracParam p = frac_param(alpha);
    Spectrum got = frft(f, p);

    double sgn = p.sin_alpha > 0 ? 1.0 : -1.0;
    cplx cc = std::polar(1.0, sgn * kPi / 4.0 - alpha / 2.0);
    cc *= cc;  // two axes
    Spectrum direct(g);
    for (int ma = 0; ma < g.samples; ++ma)
        for (int mb = 0; mb < g.samples; ++mb) {
            double u1 = g.freq(ma), u2 = g.freq(mb);
            cplx acc{0.0, 0.0};
            for (int ka = 0; ka < g.samples; ++ka)
                for (int kb = 0; kb < g.samples; ++kb) {
                    double x = g.coord(ka), y = g.coord(kb);
                    double ph = -2.0 * kPi * (x * u1 + y * u2) / p.sin_alpha +
                                kPi * (x * x + y * y) * p.kappa;
                    acc += std::polar(1.0, ph) * f.v[std::size_t(ka) * g.samples + kb];
                }
            double ph2 = kPi * (u1 * u1 + u2 * u2) * p.kappa;
            direct.v[std::size_t(ma) * g.samples + mb] =
                cc / p.s * std::polar(1.0, ph2) * acc * g.dx() * g.dx();
        }
    double peak = 0.0;
    for (auto& z : direct.v) peak = std::max(peak, std::abs(z));
    for (std::size_t i = 0; i < got.v.size(); ++i)
        CHECK(std::abs(got.v[i] - direct.v[i]) < 1e-12 * peak);

    // round-trip on a well-resolved grid
    GridSpec g2 = make_grid(2, 8.0, 64);
    Signal f2(g2);
    for (int a = 0; a < g2.samples; ++a)
        for (int b = 0; b < g2.samples; ++b) {
            double x = g2.coord(a), y = g2.coord(b);
            f2.v[std::size_t(a) * g2.samples + b] =
                cplx{1.0, -0.3} * std::exp(-kPi * (x * x + y * y) / 1.2);
        }
    for (double al : {1.1, 2.0}) {
        FracParam p2 = frac_param(al);
        Signal back = ifrft(frft(f2, p2), p2);
        CHECK(rel_l2(back, f2) < 1e-10);
    }
}

TEST_CASE("validate_sampling thresholds") {
    GridSpec fine = make_grid(1, 16.0, 512);
    CHECK(validate_sampling(fine, frac_param(kPi / 2.0)).ok);

    GridSpec coarse = make_grid(1, 16.0, 64);
    auto rep = validate_sampling(coarse, frac_param(0.05));
    CHECK_FALSE(rep.ok);
    CHECK(rep.nyquist == doctest::Approx(2.0));
    CHECK(rep.chirp_freq == doctest::Approx(std::abs(1.0 / std::tan(0.05)) * 8.0));

    // boundary: kappa * L/2 exactly at margin * nyquist counts as ok
    double kappa_edge = 0.9 * coarse.nyquist() * 2.0 / coarse.extent;
    FracParam edge = frac_param(std::atan(1.0 / kappa_edge));
    auto rep2 = validate_sampling(coarse, edge);
    CHECK(rep2.chirp_freq <= rep2.margin * rep2.nyquist * (1 + 1e-12));
    CHECK(rep2.ok);
}

TEST_CASE("conjugate_operator wraps T between chirps") {
    GridSpec g = make_grid(1, 8.0, 128);
    FracParam p = frac_param(1.1);
    SignalOp identity = [](const Signal& f) { return f; };
    Rng rng(11);
    Signal f(g);
    for (auto& z : f.v) z = rng.cgauss();
    Signal out = conjugate_operator(identity, p)(f);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(out.v[i] - f.v[i]) < 1e-14);

    // pointwise |.|^2 nonlinearity: the chirps cancel in modulus
    SignalOp square = [](const Signal& h) {
        Signal o = h;
        for (auto& z : o.v) z = cplx{std::norm(z), 0.0};
        return o;
    };
    Signal a = conjugate_operator(square, p)(f);
    Signal b = square(f);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(std::abs(std::abs(a.v[i]) - std::abs(b.v[i])) < 1e-12);
}

TEST_CASE("unitarity of frft on tuned grids") {
    struct Cfg { double alpha, L, sigma; };
    for (const Cfg& c : {Cfg{0.7, 2.4, 0.4}, Cfg{kPi / 4.0, 3.9, 0.65}, Cfg{1.1, 8.0, 1.35},
                         Cfg{2.0, 8.0, 1.35}}) {
        GridSpec g = make_grid(1, c.L, 64);
        Signal f = gen_gaussian(g, c.sigma, 0.0, 0.3);
        FracParam p = frac_param(c.alpha);
        Spectrum F = frft(f, p);
        double ratio = lp_norm_values(F.v, g.dxi(), 2.0) / lp_norm(f, 2.0);
        CHECK(std::abs(ratio - 1.0) < 1e-9);
    }
}
