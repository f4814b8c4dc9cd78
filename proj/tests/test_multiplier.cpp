#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frlp/lp.hpp"
#include "frlp/multiplier.hpp"
#include "frlp/opnorm.hpp"
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

TEST_CASE("constant symbol acts as the identity") {
    GridSpec g = make_grid(1, 8.0, 128);
    Rng rng(1);
    Signal f = gen_random_bandlimited(g, 2.0, 1.0, rng);
    Signal out = apply_multiplier(sym_one(), f);
    CHECK(rel_l2(out, f) < 1e-12);
    FracParam p = frac_param(1.1);
    for (auto route : {MultiplierRoute::definition, MultiplierRoute::conjugation}) {
        Signal o2 = apply_frft_multiplier(sym_one(), f, p, route);
        CHECK(rel_l2(o2, f) < 1e-10);
    }
}

TEST_CASE("unbounded or non-finite symbols are rejected") {
    GridSpec g = make_grid(1, 8.0, 128);
    Signal f = gen_gaussian(g, 1.0);
    Symbol big{[](const FreqPoint&) { return cplx{1e13, 0.0}; }, "big"};
    CHECK_THROWS_AS(apply_multiplier(big, f), Error);
    Symbol nan_sym{[](const FreqPoint& q) {
                       return q.radius() == 0.0 ? cplx{std::nan(""), 0.0} : cplx{1.0, 0.0};
                   },
                   "nan"};
    CHECK_THROWS_AS(apply_multiplier(nan_sym, f), Error);
}

TEST_CASE("definition route enforces the sampling guard") {
    GridSpec g = make_grid(1, 16.0, 64);
    Signal f = gen_gaussian(g, 1.0);
    FracParam p = frac_param(0.05);  // kappa ~ 20, heavily aliased
    CHECK_THROWS_AS(apply_frft_multiplier(sym_one(), f, p, MultiplierRoute::definition), Error);
}

TEST_CASE("rescale_symbol composes with the signed dilation") {
    FracParam p = frac_param(kPi / 6.0);  // s = 1/2
    Symbol m = sym_annulus(0.5, 2.0);
    Symbol ms = rescale_symbol(m, p);
    // support of m(s xi) becomes {1 <= |xi| <= 4}
    CHECK(std::abs(ms.eval(FreqPoint{{0.9, 0.0}, 1})) == 0.0);
    CHECK(std::abs(ms.eval(FreqPoint{{1.1, 0.0}, 1})) == 1.0);
    CHECK(std::abs(ms.eval(FreqPoint{{3.9, 0.0}, 1})) == 1.0);
    CHECK(std::abs(ms.eval(FreqPoint{{4.1, 0.0}, 1})) == 0.0);

    // gaussian symbol composes exactly
    Symbol gsym = sym_gauss(1.0);
    Symbol gs = rescale_symbol(gsym, frac_param(1.0));
    double s = std::abs(std::sin(1.0));
    double xi = 1.7;
    CHECK(std::abs(gs.eval(FreqPoint{{xi, 0.0}, 1}) - std::exp(-kPi * s * s * xi * xi)) < 1e-15);

    // alpha = pi/2 leaves the symbol unchanged on the grid
    Symbol id = rescale_symbol(gsym, frac_param(kPi / 2.0));
    CHECK(std::abs(id.eval(FreqPoint{{1.3, 0.0}, 1}) - gsym.eval(FreqPoint{{1.3, 0.0}, 1})) <
          1e-12);
}

TEST_CASE("band selector: identity, classical block, passband edges") {
    GridSpec g = make_grid(1, 16.0, 256);
    Rng rng(3);
    Signal f = gen_random_bandlimited(g, 3.0, 2.0, rng);
    FracParam p = frac_param(1.1);
    Signal out = band_selector(sym_one(), 1.0, f, p);
    CHECK(rel_l2(out, f) < 1e-12);

    // alpha = pi/2, R = 1: classical block at unit scale
    FracParam pc = frac_param(kPi / 2.0);
    Signal a = band_selector(sym_smooth_annulus(0), 1.0, f, pc);
    Signal b = apply_multiplier(sym_smooth_annulus(0), f);
    CHECK(rel_l2(a, b) < 1e-12);
}

TEST_CASE("bochner-riesz: monotone in lambda, R to infinity limit") {
    GridSpec g = make_grid(1, 8.0, 128);
    Rng rng(9);
    Signal f = gen_random_bandlimited(g, 2.0, 1.0, rng);
    FracParam p = frac_param(1.1);
    double prev = std::numeric_limits<double>::infinity();
    for (double lam : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        double n = lp_norm(bochner_riesz(lam, 2.0, f, p), 2.0);
        CHECK(n <= prev * (1 + 1e-12));
        prev = n;
    }
    // growing R approaches the identity
    double e8 = rel_l2(bochner_riesz(1.0, 8.0, f, p), f);
    double e32 = rel_l2(bochner_riesz(1.0, 32.0, f, p), f);
    double e128 = rel_l2(bochner_riesz(1.0, 128.0, f, p), f);
    CHECK(e32 < e8);
    CHECK(e128 < e32);
    CHECK_THROWS_AS(bochner_riesz(-1.0, 1.0, f, p), Error);
}

TEST_CASE("marcinkiewicz: constants vanish, smoothed step carries its rise") {
    auto flat = marcinkiewicz_check(sym_one(), -3, 3, 128);
    CHECK(flat.bound == doctest::Approx(0.0).epsilon(1e-12));

    // smoothed step localized inside one dyadic interval [1, 2]
    Symbol step = sym_smoothstep(1.1, 1.9);
    auto rep = marcinkiewicz_check(step, -3, 3, 512);
    // both sign intervals contribute the unit rise of the radial step
    CHECK(std::abs(rep.bound - 2.0) < 1e-3);
    // concentrated in the j = 0 interval
    for (const auto& iv : rep.intervals)
        if (iv.level != 0) CHECK(iv.variation < 1e-6);
    auto gated = marcinkiewicz_check(step, -3, 3, 512, 2.5);
    CHECK(gated.pass.has_value());
    CHECK(*gated.pass);
}

TEST_CASE("covering count grows as s shrinks") {
    CHECK(dyadic_covering_count(frac_param(kPi / 2.0)) == 1);
    CHECK(dyadic_covering_count(frac_param(kPi / 6.0)) == 2);
    CHECK(dyadic_covering_count(frac_param(0.1)) >= 4);
}

TEST_CASE("mihlin: constants, oscillatory symbols, refinement agreement") {
    auto flat = mihlin_check(sym_one(), 1, 1, {0.5, 1.0, 2.0});
    for (const auto& a : flat.annuli) CHECK(a.ratio_by_order[1] < 1e-12);

    Symbol osc = sym_oscillatory(1.0);
    std::vector<double> annuli = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
    auto r1 = mihlin_check(osc, 1, 1, annuli, 1);
    auto r2 = mihlin_check(osc, 1, 1, annuli, 2);
    CHECK(std::isfinite(r1.bound));
    CHECK(r1.bound > 0.0);
    CHECK(std::abs(r1.bound / r2.bound - 1.0) < 0.01);
}

TEST_CASE("mihlin in two dimensions handles mixed partials") {
    Symbol osc = sym_oscillatory(0.7);
    auto rep = mihlin_check(osc, 2, 2, {0.5, 1.0, 2.0});
    CHECK(std::isfinite(rep.bound));
    CHECK(rep.annuli.front().ratio_by_order.size() == 3);
}

TEST_CASE("maximal family over a single element is the conjugated modulus") {
    GridSpec g = make_grid(1, 8.0, 128);
    FracParam p = frac_param(1.1);
    Rng rng(5);
    Signal f = gen_random_bandlimited(g, 2.0, 1.0, rng);
    Signal single = maximal_over_family({sym_gauss(0.5)}, f, p);
    Signal direct = conjugated_multiplier(sym_gauss(0.5), f, p);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(std::abs(single.v[i].real() - std::abs(direct.v[i])) < 1e-14);
}

TEST_CASE("rough square function over the LP family coincides with the bank version") {
    GridSpec g = make_grid(1, 16.0, 256);
    FracParam p = frac_param(0.9);
    Rng rng(6);
    Signal f = gen_random_bandlimited(g, 3.0, 2.0, rng);
    std::vector<Symbol> fam;
    for (int j = -2; j <= 2; ++j) fam.push_back(sym_smooth_annulus(j));
    Signal a = rough_square_function(fam, f, p);
    auto bank = build_bank(g, -2, 2);
    Signal b = square_function(f, bank, p);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(std::abs(a.v[i].real() - b.v[i].real()) < 1e-13);
}

TEST_CASE("almost orthogonal sum validates supports") {
    GridSpec g = make_grid(1, 8.0, 128);
    FracParam p = frac_param(1.1);
    Signal f = gen_gaussian(g, 1.0);
    std::vector<AnnulusSymbol> bad = {{2, sym_ball(1.0)}};  // leaks below 2^{1}
    CHECK_THROWS_AS(almost_orthogonal_sum(bad, f, p), Error);
}

TEST_CASE("partition-of-unity family reconstructs band-limited input") {
    GridSpec g = make_grid(1, 16.0, 256);
    FracParam p = frac_param(1.3);
    // band-limited in the chirped frame, inside the partition plateau
    Rng rng(8);
    Spectrum S(g);
    for (int i = 0; i < g.samples; ++i) {
        double r = std::abs(g.freq(i));
        if (r >= 0.5 && r <= 4.0) S.v[std::size_t(i)] = rng.cgauss();
    }
    Signal f = chirp_mul(grid_inverse_fourier(S), p, ChirpDirection::inverse);
    std::vector<AnnulusSymbol> fam;
    for (int j = -2; j <= 3; ++j) fam.push_back({j, sym_smooth_annulus(j)});
    auto rep = almost_orthogonal_sum(fam, f, p);
    CHECK(rel_l2(rep.total, f) < 1e-10);
    CHECK(rep.term_l2.size() == fam.size());
    CHECK(rep.cauchy_increment.size() == fam.size());
}

TEST_CASE("power iteration matches the known norm of a step multiplier") {
    GridSpec g = make_grid(1, 8.0, 128);
    Symbol m = sym_step_levels(1.0, 0.3, 1.0, 3.0);
    Symbol mc{[ev = m.eval](const FreqPoint& q) { return std::conj(ev(q)); }, "conj"};
    auto apply = [&](const Signal& v) { return apply_multiplier(m, v); };
    auto adj = [&](const Signal& v) { return apply_multiplier(mc, v); };
    auto est = operator_norm(apply, adj, g, 200);
    CHECK(std::abs(est.norm - 1.0) < 1e-10);  // sup |m| on the grid
    CHECK(est.iterations == 200);
}

TEST_CASE("symbol parser round-trips names and rejects junk") {
    CHECK(parse_symbol("ball(1.5)").name == "ball(1.5)");
    CHECK(parse_symbol("annulus(0.5,2)").name == "annulus(0.5,2)");
    CHECK(parse_symbol("smoothstep(1,2)").name == "smoothstep(1,2)");
    CHECK(parse_symbol("riesz(0.5)").name == "riesz(0.5)");
    CHECK(parse_symbol("bessel(1)").name == "bessel(1)");
    CHECK(parse_symbol("br(1,2)").name == "br(1,2)");
    CHECK(parse_symbol("gauss(1)").name == "gauss(1)");
    CHECK_THROWS_AS(parse_symbol("nope(1)"), Error);
    CHECK_THROWS_AS(parse_symbol("ball(1,2)"), Error);
}
