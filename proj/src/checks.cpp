#include "frlp/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <numbers>
#include <regex>
#include <sstream>

#include "frlp/dft.hpp"
#include "frlp/dyadic.hpp"
#include "frlp/frft.hpp"
#include "frlp/grid.hpp"
#include "frlp/limitlaws.hpp"
#include "frlp/lp.hpp"
#include "frlp/multiplier.hpp"
#include "frlp/opnorm.hpp"
#include "frlp/oscillation.hpp"
#include "frlp/potentials.hpp"
#include "frlp/rng.hpp"
#include "frlp/symbols.hpp"

namespace frlp::checks {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_l2(const Signal& a, const Signal& b) {
    Signal d(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) d.v[i] = a.v[i] - b.v[i];
    double ref = lp_norm(b, 2.0);
    return ref > 0.0 ? lp_norm(d, 2.0) / ref : lp_norm(d, 2.0);
}

double max_abs_diff(const Signal& a, const Signal& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

CheckResult bounded(double err, double tol, const std::string& detail = "") {
    return {err <= tol, err, tol, detail};
}

// random admissible signal for transform tests: band-limited modes under a
// gaussian envelope
Signal admissible(const GridSpec& g, double band, double sigma, std::uint64_t seed) {
    Rng rng(seed);
    return gen_random_bandlimited(g, band, sigma, rng);
}

// DC-free smooth-spectrum signal in the pullback frame of p
Signal pullback_dcfree(const GridSpec& g, const FracParam& p, std::uint64_t seed) {
    Rng rng(seed);
    Signal f(g);
    for (int t = 0; t < 5; ++t) {
        double nu = 2.5 + 0.5 * t;
        cplx c1 = rng.cgauss(), c2 = rng.cgauss();
        for (int i = 0; i < g.samples; ++i) {
            double x = g.coord(i);
            double ph = 2.0 * kPi * nu * x;
            f.v[std::size_t(i)] += c1 * cplx{std::cos(ph), std::sin(ph)} +
                                   c2 * cplx{std::cos(ph), -std::sin(ph)};
        }
    }
    for (int i = 0; i < g.samples; ++i) {
        double x = g.coord(i);
        f.v[std::size_t(i)] *= std::exp(-kPi * x * x);
    }
    // smooth low-kill and high-cut in the pullback frame
    Spectrum F = frft(f, p);
    auto lowkill = [](double r, double a, double b) {
        if (r <= a) return 0.0;
        if (r >= b) return 1.0;
        double t = (r - a) / (b - a);
        double ha = std::exp(-1.0 / t);
        double hb = std::exp(-1.0 / (1.0 - t));
        return ha / (ha + hb);
    };
    for (int i = 0; i < g.samples; ++i) {
        double r = std::abs(g.freq(i));
        F.v[std::size_t(i)] *= lowkill(r, 0.5, 2.5) * (1.0 - lowkill(r, 8.0, 14.0));
    }
    return ifrft(F, p);
}

const std::vector<double> kIsometryAngles = {0.3, kPi / 4.0, 1.1, kPi / 2.0, 2.0};

// ------------------------------------------------------------------
// entry builders
// ------------------------------------------------------------------

std::vector<Entry> build_registry() {
    std::vector<Entry> reg;
    auto add = [&](std::string id, std::string law, Severity sev,
                   std::function<CheckResult(std::uint64_t)> run) {
        reg.push_back({std::move(id), std::move(law), sev, std::move(run)});
    };

    // ---- grid ----
    add("grid.plancherel.fft", "||f||_2 == ||grid_fourier(f)||_2", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            double worst = 0.0;
            for (int t = 0; t < 10; ++t) {
                Signal f = admissible(g, 4.0, 2.0, mix_seed(seed, "plancherel" + std::to_string(t)));
                double a = lp_norm(f, 2.0);
                Spectrum F = grid_fourier(f);
                double b = lp_norm_values(F.v, g.dxi(), 2.0);
                worst = std::max(worst, std::abs(a - b) / a);
            }
            return bounded(worst, 1e-10);
        });

    add("grid.weak.le.strong", "weak-L^p functional <= L^p norm", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 128);
            double worst = 0.0;
            for (int t = 0; t < 20; ++t) {
                Rng rng(mix_seed(seed, "weak" + std::to_string(t)));
                Signal f(g);
                for (auto& z : f.v) z = rng.cgauss();
                for (double p : {1.0, 1.5, 2.0, 4.0}) {
                    double w = weak_norm_estimate(f, p);
                    double s = lp_norm(f, p);
                    worst = std::max(worst, (w - s) / s);
                }
            }
            return bounded(std::max(worst, 0.0), 1e-12);
        });

    add("grid.norm.gaussian", "quadrature of exp(-pi x^2) matches the closed form",
        Severity::exact, [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 512);
            Signal f = gen_gaussian(g, 1.0);
            double got = lp_norm(f, 2.0);
            double expect = std::pow(2.0, -0.25);
            return bounded(std::abs(got - expect), 1e-8);
        });

    // ---- frft engine ----
    add("frft.chirp.isometry", "||M_a f||_p == ||f||_p for all p", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            double worst = 0.0;
            const double inf = std::numeric_limits<double>::infinity();
            for (int t = 0; t < 100; ++t) {
                Rng rng(mix_seed(seed, "iso" + std::to_string(t)));
                Signal f(g);
                for (auto& z : f.v) z = rng.cgauss();
                for (double alpha : kIsometryAngles) {
                    FracParam p = frac_param(alpha);
                    Signal h = chirp_mul(f, p, ChirpDirection::forward);
                    for (double pe : {1.0, 1.5, 2.0, 4.0, inf}) {
                        double a = lp_norm(h, pe);
                        double b = lp_norm(f, pe);
                        worst = std::max(worst, std::abs(a - b) / b);
                    }
                }
            }
            return bounded(worst, 1e-14);
        });

    add("frft.chirp.levelsets", "chirp preserves every level set exactly", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 128);
            Rng rng(mix_seed(seed, "levels"));
            Signal f(g);
            for (auto& z : f.v) z = rng.cgauss();
            FracParam p = frac_param(1.3);
            Signal h = chirp_mul(f, p, ChirpDirection::forward);
            double worst = 0.0;
            for (double lam : {0.1, 0.5, 1.0, 2.0}) {
                int ca = 0, cb = 0;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    if (std::abs(f.v[i]) > lam) ++ca;
                    if (std::abs(h.v[i]) > lam) ++cb;
                }
                worst = std::max(worst, double(std::abs(ca - cb)));
            }
            return bounded(worst, 0.0, "level-set counts");
        });

    add("frft.kernel.oracle", "frft matches the direct O(N^2) kernel quadrature",
        Severity::exact, [](std::uint64_t) {
            struct Cfg { double alpha, L, sigma; };
            const Cfg cfgs[] = {{0.7, 2.4, 0.4},
                                {kPi / 4.0, 3.9, 0.65},
                                {1.1, 8.0, 1.35},
                                {kPi / 2.0, 8.0, 1.35},
                                {2.0, 8.0, 1.35}};
            double worst = 0.0;
            for (const Cfg& c : cfgs) {
                GridSpec g = make_grid(1, c.L, 64);
                Signal f = gen_gaussian(g, c.sigma, 0.0, 0.3);
                FracParam p = frac_param(c.alpha);
                Spectrum got = frft(f, p);
                // direct quadrature of the factorized kernel
                Spectrum direct(g);
                double sgn = p.sin_alpha > 0 ? 1.0 : -1.0;
                cplx cc{std::cos(sgn * kPi / 4 - c.alpha / 2), std::sin(sgn * kPi / 4 - c.alpha / 2)};
                for (int m = 0; m < g.samples; ++m) {
                    double xi = g.freq(m);
                    cplx acc{0.0, 0.0};
                    for (int k = 0; k < g.samples; ++k) {
                        double x = g.coord(k);
                        double ph = -2.0 * kPi * x * xi / p.sin_alpha + kPi * x * x * p.kappa;
                        acc += cplx{std::cos(ph), std::sin(ph)} * f.v[std::size_t(k)];
                    }
                    double ph2 = kPi * xi * xi * p.kappa;
                    direct.v[std::size_t(m)] = cc / std::sqrt(p.s) * cplx{std::cos(ph2), std::sin(ph2)} *
                                               acc * g.dx();
                }
                double peak = 0.0;
                for (auto& z : direct.v) peak = std::max(peak, std::abs(z));
                double err = 0.0;
                for (std::size_t i = 0; i < got.v.size(); ++i)
                    err = std::max(err, std::abs(got.v[i] - direct.v[i]));
                worst = std::max(worst, err / peak);
            }
            return bounded(worst, 1e-8);
        });

    add("frft.plancherel", "||F_a f||_2 / ||f||_2 == 1", Severity::exact, [](std::uint64_t) {
        struct Cfg { double alpha, L, sigma; };
        const Cfg cfgs[] = {{0.7, 2.4, 0.4},
                            {kPi / 4.0, 3.9, 0.65},
                            {1.1, 8.0, 1.35},
                            {kPi / 2.0, 8.0, 1.35},
                            {2.0, 8.0, 1.35}};
        double worst = 0.0;
        for (const Cfg& c : cfgs) {
            GridSpec g = make_grid(1, c.L, 64);
            Signal f = gen_gaussian(g, c.sigma, 0.0, 0.3);
            FracParam p = frac_param(c.alpha);
            Spectrum F = frft(f, p);
            double r = lp_norm_values(F.v, g.dxi(), 2.0) / lp_norm(f, 2.0);
            worst = std::max(worst, std::abs(r - 1.0));
        }
        return bounded(worst, 1e-9);
    });

    add("frft.roundtrip", "ifrft(frft(f)) == f on admissible signals", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            double worst = 0.0;
            for (double alpha : {0.9, kPi / 4.0, 1.1, 2.0, 2.35}) {
                FracParam p = frac_param(alpha);
                for (int t = 0; t < 4; ++t) {
                    Signal f = admissible(g, 3.0, 1.0, mix_seed(seed, "rt" + std::to_string(t)));
                    worst = std::max(worst, rel_l2(ifrft(frft(f, p), p), f));
                }
            }
            return bounded(worst, 1e-10);
        });

    add("frft.dft.at.right.angle", "frft at alpha = pi/2 is the grid Fourier transform",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            Signal f = admissible(g, 4.0, 2.0, mix_seed(seed, "dft"));
            FracParam p = frac_param(kPi / 2.0);
            Spectrum a = frft(f, p);
            Spectrum b = grid_fourier(f);
            double peak = 0.0;
            for (auto& z : b.v) peak = std::max(peak, std::abs(z));
            double err = 0.0;
            for (std::size_t i = 0; i < a.v.size(); ++i)
                err = std::max(err, std::abs(a.v[i] - b.v[i]));
            return bounded(err / peak, 1e-10);
        });

    add("frft.linearity", "ifrft is linear", Severity::exact, [](std::uint64_t seed) {
        GridSpec g = make_grid(1, 8.0, 128);
        FracParam p = frac_param(1.1);
        Signal f = admissible(g, 3.0, 1.0, mix_seed(seed, "linA"));
        Signal h = admissible(g, 3.0, 1.0, mix_seed(seed, "linB"));
        Spectrum F = frft(f, p), H = frft(h, p);
        Spectrum mix(g);
        cplx a{0.7, -0.2}, b{-0.3, 1.1};
        for (std::size_t i = 0; i < mix.v.size(); ++i) mix.v[i] = a * F.v[i] + b * H.v[i];
        Signal got = ifrft(mix, p);
        Signal fa = ifrft(F, p), fb = ifrft(H, p);
        Signal expect(g);
        for (std::size_t i = 0; i < expect.size(); ++i) expect.v[i] = a * fa.v[i] + b * fb.v[i];
        return bounded(max_abs_diff(got, expect), 1e-12);
        });

    add("frft.inverse.convention", "report || ifrft(F,a) - frft(F,-a) || (not asserted)",
        Severity::empirical, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            FracParam p = frac_param(1.1);
            FracParam pm = frac_param(-1.1);
            Signal f = admissible(g, 3.0, 1.0, mix_seed(seed, "conv"));
            Spectrum F = frft(f, p);
            Signal a = ifrft(F, p);
            Signal via_neg(g);
            {
                Signal Fs(g);
                Fs.v = F.v;
                Spectrum G = frft(Fs, pm);
                via_neg.v = G.v;
            }
            double d = rel_l2(via_neg, a);
            CheckResult r;
            r.pass = true;
            r.max_err = d;
            r.tolerance = std::numeric_limits<double>::infinity();
            r.detail = "discrepancy between the algebraic inverse and the negative-angle transform";
            return r;
        });

    add("frft.sampling.guard", "chirp aliasing guard fires exactly at the documented threshold",
        Severity::exact, [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 64);
            auto r1 = validate_sampling(g, frac_param(kPi / 2.0));
            auto r2 = validate_sampling(g, frac_param(0.05));
            bool ok = r1.ok && !r2.ok && std::abs(r2.chirp_freq - std::abs(frac_param(0.05).kappa) * 8.0) < 1e-9;
            return CheckResult{ok, 0.0, 0.0, "guard states"};
        });

    // ---- multiplier ops ----
    add("mult.two.route", "definition route == conjugation route", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 512);
            const double angles[] = {0.9, kPi / 4.0, 1.1, 2.0, 2.35};
            double worst = 0.0;
            int trial = 0;
            for (int t = 0; t < 50; ++t) {
                double alpha = angles[t % 5];
                FracParam p = frac_param(alpha);
                Rng rng(mix_seed(seed, "route" + std::to_string(t)));
                Signal f = gen_random_bandlimited(g, 3.0, 1.0, rng);
                // symbol width >= 2 keeps its spatial kernel inside the domain
                double width = 2.0 + rng.uniform01() * 2.0;
                Symbol m = sym_gauss(1.0 / width);
                Signal a = apply_frft_multiplier(m, f, p, MultiplierRoute::definition);
                Signal b = apply_frft_multiplier(m, f, p, MultiplierRoute::conjugation);
                worst = std::max(worst, rel_l2(a, b));
                ++trial;
            }
            return bounded(worst, 1e-9, std::to_string(trial) + " trials");
        });

    add("mult.norm.transfer", "power-iteration norms of T_m^a and T_{m_a} agree",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            double worst = 0.0;
            for (double alpha : {0.9, 1.1, 2.0}) {
                FracParam p = frac_param(alpha);
                Symbol m = sym_step_levels(1.0, 0.3, 1.0, 3.0);
                Symbol ms = rescale_symbol(m, p);
                auto frac_apply = [&](const Signal& v) {
                    return apply_frft_multiplier(m, v, p, MultiplierRoute::conjugation);
                };
                Symbol m_conj{[ev = m.eval](const FreqPoint& q) { return std::conj(ev(q)); }, "conj"};
                Symbol ms_conj{[ev = ms.eval](const FreqPoint& q) { return std::conj(ev(q)); }, "conj"};
                auto frac_adj = [&](const Signal& v) {
                    return apply_frft_multiplier(m_conj, v, p, MultiplierRoute::conjugation);
                };
                auto cls_apply = [&](const Signal& v) { return apply_multiplier(ms, v); };
                auto cls_adj = [&](const Signal& v) { return apply_multiplier(ms_conj, v); };
                std::uint64_t s = mix_seed(seed, "normtransfer");
                Signal probe = random_probe(g, s);
                Signal probe_tw = chirp_mul(probe, p, ChirpDirection::inverse);
                auto cls = operator_norm(cls_apply, cls_adj, g, 200, s, &probe);
                auto frc = operator_norm(frac_apply, frac_adj, g, 200, s, &probe_tw);
                worst = std::max(worst, std::abs(cls.norm - frc.norm) / cls.norm);
            }
            return bounded(worst, 1e-8);
        });

    add("mult.shift.symbol", "modulation symbol translates a delta", Severity::exact,
        [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 256);
            Signal f(g);
            f.v[std::size_t(g.samples / 2)] = {1.0, 0.0};  // delta at x = 0
            double a = 16.0 * 10.0 / 256.0;                // shift by 10 samples
            Signal got = apply_multiplier(sym_translation(a), f);
            Signal expect(g);
            expect.v[std::size_t(g.samples / 2 + 10)] = {1.0, 0.0};
            return bounded(max_abs_diff(got, expect), 1e-12);
        });

    add("mult.indicator.convolution", "band indicator equals closed-form kernel convolution",
        Severity::exact, [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 256);
            Signal f = gen_gaussian(g, 1.0);
            Signal got = apply_multiplier(sym_ball(1.0), f);
            // direct O(N^2) periodic convolution with the Dirichlet kernel of
            // the band: K(x) = dxi * sum_{|xi_m| <= 1} e^{2 pi i x xi_m}, via
            // the closed geometric-sum form
            int M = int(std::floor(1.0 / g.dxi()));
            Signal direct(g);
            for (int j = 0; j < g.samples; ++j) {
                cplx acc{0.0, 0.0};
                for (int k = 0; k < g.samples; ++k) {
                    double x = g.coord(j) - g.coord(k);
                    double u = kPi * x * g.dxi();
                    double kern;
                    if (std::abs(std::sin(u)) < 1e-14) {
                        kern = double(2 * M + 1);
                    } else {
                        kern = std::sin(double(2 * M + 1) * u) / std::sin(u);
                    }
                    acc += kern * g.dxi() * f.v[std::size_t(k)];
                }
                direct.v[std::size_t(j)] = acc * g.dx();
            }
            return bounded(rel_l2(got, direct), 1e-8);
        });

    add("mult.marcinkiewicz.invariance", "variation constant moves by at most the covering factor",
        Severity::exact, [](std::uint64_t) {
            Symbol m = sym_smoothstep(0.8, 1.6);
            double worst = 0.0;
            for (double alpha : {1.0, 1.2, 2.0}) {
                FracParam p = frac_param(alpha);  // s in [1/2, 1]
                auto base = marcinkiewicz_check(m, -4, 4, 256);
                auto resc = marcinkiewicz_check(rescale_symbol(m, p), -4, 4, 256);
                double up = resc.bound / std::max(base.bound, 1e-300);
                double dn = base.bound / std::max(resc.bound, 1e-300);
                worst = std::max({worst, up / 2.0, dn / 2.0});
            }
            return bounded(worst, 1.0, "max ratio over 2 (covering factor)");
        });

    add("mult.mihlin.rescale", "annulus derivative ratios transport under the dilation",
        Severity::exact, [](std::uint64_t) {
            Symbol m = sym_oscillatory(1.0);
            double worst = 0.0;
            for (double alpha : {1.0, 2.0}) {
                FracParam p = frac_param(alpha);
                for (int refine : {1, 2}) {
                    std::vector<double> annuli = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
                    std::vector<double> scaled;
                    for (double R : annuli) scaled.push_back(p.s * R);
                    auto a = mihlin_check(rescale_symbol(m, p), 1, 1, annuli, refine);
                    auto b = mihlin_check(m, 1, 1, scaled, refine);
                    for (std::size_t i = 0; i < annuli.size(); ++i) {
                        for (std::size_t o = 0; o < a.annuli[i].ratio_by_order.size(); ++o) {
                            double x = a.annuli[i].ratio_by_order[o];
                            double y = b.annuli[i].ratio_by_order[o];
                            if (y > 1e-12)
                                worst = std::max(worst, std::abs(x / y - 1.0));
                        }
                    }
                }
            }
            return bounded(worst, 5e-3);
        });

    add("mult.maximal.transfer", "sup_k |T_k^a f| equals the classical sup applied to M_a f",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 128);
            FracParam p = frac_param(1.1);
            Signal f = admissible(g, 3.0, 1.0, mix_seed(seed, "maximal"));
            std::vector<Symbol> fam = {sym_ball(1.0), sym_ball(2.0), sym_ball(4.0)};
            Signal a = maximal_over_family(fam, f, p);
            Signal gsig = chirp_mul(f, p, ChirpDirection::forward);
            Signal b(g);
            for (const Symbol& m : fam) {
                Signal t = apply_multiplier(m, gsig);
                for (std::size_t i = 0; i < b.size(); ++i)
                    b.v[i] = cplx{std::max(b.v[i].real(), std::abs(t.v[i])), 0.0};
            }
            return bounded(max_abs_diff(a, b), 1e-14);
        });

    add("mult.rough.square.transfer", "dilated-family square function transports pointwise",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 128);
            FracParam p = frac_param(2.0);
            Signal f = admissible(g, 3.0, 1.0, mix_seed(seed, "rough"));
            std::vector<Symbol> fam;
            for (int j = -1; j <= 2; ++j) fam.push_back(sym_smooth_annulus(j));
            Signal a = rough_square_function(fam, f, p);
            Signal gsig = chirp_mul(f, p, ChirpDirection::forward);
            Signal b(g);
            for (const Symbol& m : fam) {
                Signal t = apply_multiplier(m, gsig);
                for (std::size_t i = 0; i < b.size(); ++i)
                    b.v[i] += cplx{std::norm(t.v[i]), 0.0};
            }
            for (auto& z : b.v) z = cplx{std::sqrt(z.real()), 0.0};
            return bounded(max_abs_diff(a, b), 1e-14);
        });

    add("mult.vector.valued.transfer", "finite vector-valued aggregate transports exactly",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 128);
            FracParam p = frac_param(1.3);
            std::vector<Symbol> syms;
            std::vector<Signal> fs;
            for (int j = 0; j <= 2; ++j) {
                syms.push_back(sym_smooth_annulus(j));
                fs.push_back(admissible(g, 3.0, 1.0, mix_seed(seed, "vv" + std::to_string(j))));
            }
            Signal a = vector_valued_aggregate(syms, fs, p);
            Signal b(g);
            for (std::size_t k = 0; k < fs.size(); ++k) {
                Signal t = apply_multiplier(syms[k], chirp_mul(fs[k], p, ChirpDirection::forward));
                for (std::size_t i = 0; i < b.size(); ++i) b.v[i] += cplx{std::norm(t.v[i]), 0.0};
            }
            for (auto& z : b.v) z = cplx{std::sqrt(z.real()), 0.0};
            return bounded(max_abs_diff(a, b), 1e-14);
        });

    add("mult.almost.orthogonal", "disjoint annuli sum with exact Parseval additivity",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 512);
            FracParam p = frac_param(1.1);
            Signal f = admissible(g, 6.0, 2.0, mix_seed(seed, "orth"));
            // 1-separated sharp annuli: [2^{j-1}, 2^j] at j = -1, 1, 3
            std::vector<AnnulusSymbol> fam;
            for (int j : {-1, 1, 3})
                fam.push_back({j, sym_annulus(std::ldexp(1.0, j - 1), std::ldexp(1.0, j))});
            auto rep = almost_orthogonal_sum(fam, f, p);
            double sum_sq = 0.0;
            for (double t : rep.term_l2) sum_sq += t * t;
            double total = lp_norm(rep.total, 2.0);
            return bounded(std::abs(total * total - sum_sq) / sum_sq, 1e-12);
        });

    add("mult.selector.bandwidth", "annulus selector passband sits at [R/(2s), 2R/s]",
        Severity::exact, [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 1024);
            FracParam p = frac_param(kPi / 6.0);  // s = 1/2
            Symbol phi = sym_annulus(0.5, 2.0);
            double R = 1.0;
            // measure on the classical-side rescaled symbol
            double lo = 0.0, hi = 0.0;
            bool found = false;
            for (int i = g.samples / 2; i < g.samples; ++i) {
                double xi = g.freq(i);
                FreqPoint q{{p.sin_alpha * xi / R, 0.0}, 1};
                if (std::abs(phi.eval(q)) > 0.5) {
                    if (!found) lo = xi;
                    hi = xi;
                    found = true;
                }
            }
            double err = std::max(std::abs(lo - R / (2.0 * p.s)), std::abs(hi - 2.0 * R / p.s));
            return bounded(err, 2.5 * g.dxi(), "edges vs bandwidth law");
        });

    add("mult.bochner.riesz.identity", "full-band zero-order mean is the identity",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 128);
            FracParam p = frac_param(1.2);
            Signal f = admissible(g, 2.0, 1.0, mix_seed(seed, "br"));
            Signal got = bochner_riesz(0.0, 64.0, f, p);
            return bounded(rel_l2(got, f), 1e-10);
        });

    // ---- littlewood-paley ----
    add("lp.partition.telescoping", "chi + sum phi_j telescopes to the top profile",
        Severity::exact, [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 512);
            auto bank = build_bank(g, -3, 3);
            double worst = 0.0;
            for (int i = 0; i < g.samples; ++i) {
                double r = std::abs(g.freq(i));
                double acc = bank.chi[std::size_t(i)];
                for (int j = 1; j <= bank.jmax; ++j) acc += bank.level(j)[std::size_t(i)];
                double expect = theta_profile(r / std::ldexp(1.0, bank.jmax));
                worst = std::max(worst, std::abs(acc - expect));
            }
            return bounded(worst, 1e-14);
        });

    add("lp.support", "phi_j vanishes outside its dyadic annulus", Severity::exact,
        [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 512);
            auto bank = build_bank(g, -2, 3);
            double worst = 0.0;
            for (int j = bank.jmin; j <= bank.jmax; ++j) {
                for (int i = 0; i < g.samples; ++i) {
                    double r = std::abs(g.freq(i));
                    if (r >= std::ldexp(1.0, j - 1) && r <= std::ldexp(1.0, j + 1)) continue;
                    worst = std::max(worst, std::abs(bank.level(j)[std::size_t(i)]));
                }
            }
            return bounded(worst, 1e-14);
        });

    add("lp.block.modulus", "|Delta_{j,a} f| == |Delta_j (M_a f)| pointwise", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto bank = build_bank(g, -2, 2);
            double worst = 0.0;
            for (double alpha : kIsometryAngles) {
                FracParam p = frac_param(alpha);
                Signal f = admissible(g, 3.0, 2.0, mix_seed(seed, "modulus"));
                Signal gsig = chirp_mul(f, p, ChirpDirection::forward);
                for (int j = bank.jmin; j <= bank.jmax; ++j) {
                    Signal a = lp_block(f, bank, j, p);
                    Signal b = lp_block(gsig, bank, j);
                    for (std::size_t i = 0; i < a.size(); ++i)
                        worst = std::max(worst, std::abs(std::abs(a.v[i]) - std::abs(b.v[i])));
                }
            }
            return bounded(worst, 1e-14);
        });

    add("lp.square.pointwise", "S_a(f) == S(M_a f) pointwise", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto bank = build_bank(g, -2, 2);
            double worst = 0.0;
            for (double alpha : kIsometryAngles) {
                FracParam p = frac_param(alpha);
                Signal f = admissible(g, 3.0, 2.0, mix_seed(seed, "sq"));
                Signal a = square_function(f, bank, p);
                Signal b = square_function(chirp_mul(f, p, ChirpDirection::forward), bank);
                worst = std::max(worst, max_abs_diff(a, b));
            }
            return bounded(worst, 1e-14);
        });

    add("lp.frame.sandwich", "frame bounds sandwich ||S(f)||_2 / ||f||_2", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto bank = build_bank(g, -2, 2);
            auto fb = bank.frame_bounds();
            double worst = 0.0;
            for (int t = 0; t < 20; ++t) {
                Rng rng(mix_seed(seed, "frame" + std::to_string(t)));
                // random signal band-limited inside the covered annulus
                Spectrum S(g);
                for (int i = 0; i < g.samples; ++i) {
                    double r = std::abs(g.freq(i));
                    if (r >= std::ldexp(1.0, bank.jmin) && r <= std::ldexp(1.0, bank.jmax))
                        S.v[std::size_t(i)] = rng.cgauss();
                }
                Signal f = grid_inverse_fourier(S);
                double ratio = lp_norm(square_function(f, bank), 2.0) / lp_norm(f, 2.0);
                worst = std::max({worst, fb.lower - ratio, ratio - fb.upper});
            }
            return bounded(std::max(worst, 0.0), 1e-10, "sandwich slack");
        });

    add("lp.sharp.parseval", "sharp blocks give exact Parseval on DC-free signals",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            Rng rng(mix_seed(seed, "sharp"));
            Spectrum S(g);
            for (int i = 0; i < g.samples; ++i)
                if (g.freq(i) != 0.0) S.v[std::size_t(i)] = rng.cgauss();
            FracParam p = frac_param(1.1);
            // DC-free in the chirped frame: the twisted blocks partition M_a f
            Signal f = chirp_mul(grid_inverse_fourier(S), p, ChirpDirection::inverse);
            int jlo = int(std::floor(std::log2(g.dxi()))) - 1;
            int jhi = int(std::ceil(std::log2(g.nyquist())));
            Signal acc(g);
            Signal sum(g);
            for (int j = jlo; j <= jhi; ++j) {
                Signal blk = sharp_block(f, j, p);
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    acc.v[i] += cplx{std::norm(blk.v[i]), 0.0};
                    sum.v[i] += blk.v[i];
                }
            }
            for (auto& z : acc.v) z = cplx{std::sqrt(z.real()), 0.0};
            double parseval = std::abs(lp_norm(acc, 2.0) - lp_norm(f, 2.0)) / lp_norm(f, 2.0);
            double recon = rel_l2(sum, f);
            return bounded(std::max(parseval, recon), 1e-10);
        });

    add("lp.reconstruction", "lowpass + blocks reconstruct covered signals", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto bank = build_bank(g, 1, 2);
            double worst = 0.0;
            int t = 0;
            for (double alpha : kIsometryAngles) {
                FracParam p = frac_param(alpha);
                for (int rep = 0; rep < 4; ++rep) {
                    Rng rng(mix_seed(seed, "recon" + std::to_string(t++)));
                    Spectrum S(g);
                    for (int i = 0; i < g.samples; ++i) {
                        double r = std::abs(g.freq(i));
                        if (r <= std::ldexp(1.0, bank.jmax)) S.v[std::size_t(i)] = rng.cgauss();
                    }
                    // coverage constrains the spectrum of M_a f
                    Signal f = chirp_mul(grid_inverse_fourier(S), p, ChirpDirection::inverse);
                    auto rec = reconstruct(decompose(f, bank, p));
                    worst = std::max(worst, rec.residual_rel);
                }
            }
            return bounded(worst, 1e-10, "20 signals x 5 angles");
        });

    add("lp.besov.equality", "||u||_{B^s_{p,q,a}} == ||M_a u||_{B^s_{p,q}}", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto bank = build_bank(g, 1, 2);
            double worst = 0.0;
            for (double alpha : {0.9, 1.1, 2.0}) {
                FracParam p = frac_param(alpha);
                for (int t = 0; t < 5; ++t) {
                    Signal f = admissible(g, 3.0, 2.0, mix_seed(seed, "besov" + std::to_string(t)));
                    Signal gsig = chirp_mul(f, p, ChirpDirection::forward);
                    for (double s : {0.5, 1.0}) {
                        double a = besov_norm(f, bank, s, 2.0, 1.5, p).value;
                        double b = besov_norm(gsig, bank, s, 2.0, 1.5).value;
                        worst = std::max(worst, std::abs(a - b) / b);
                    }
                }
            }
            return bounded(worst, 1e-14);
        });

    add("lp.triebel.equality", "||u||_{F^s_{p,q,a}} == ||M_a u||_{F^s_{p,q}}", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto bank = build_bank(g, 1, 2);
            double worst = 0.0;
            for (double alpha : {0.9, 1.1, 2.0}) {
                FracParam p = frac_param(alpha);
                for (int t = 0; t < 5; ++t) {
                    Signal f = admissible(g, 3.0, 2.0, mix_seed(seed, "triebel" + std::to_string(t)));
                    Signal gsig = chirp_mul(f, p, ChirpDirection::forward);
                    double a = triebel_norm(f, bank, 0.7, 2.0, 3.0, p).value;
                    double b = triebel_norm(gsig, bank, 0.7, 2.0, 3.0).value;
                    worst = std::max(worst, std::abs(a - b) / b);
                }
            }
            return bounded(worst, 1e-14);
        });

    add("lp.sobolev.spectral", "H^{s,2} stays inside the direct spectral-norm band",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto bank = build_bank(g, 1, 2);
            const double s = 1.0;
            // rigorous band from the masks: r(xi) = chi^2 + sum (2^{js} phi_j)^2
            // relative to (1+|xi|^2)^s, on the covered bins
            double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
            for (int i = 0; i < g.samples; ++i) {
                double r = std::abs(g.freq(i));
                if (r > std::ldexp(1.0, bank.jmax)) continue;
                double acc = bank.chi[std::size_t(i)] * bank.chi[std::size_t(i)];
                for (int j = 1; j <= bank.jmax; ++j) {
                    double w = std::pow(2.0, double(j) * s);
                    double v = w * bank.level(j)[std::size_t(i)];
                    acc += v * v;
                }
                double ref = std::pow(1.0 + r * r, s);
                double ratio = acc / ref;
                rmin = std::min(rmin, ratio);
                rmax = std::max(rmax, ratio);
            }
            double worst = 0.0;
            for (int t = 0; t < 10; ++t) {
                Rng rng(mix_seed(seed, "sob" + std::to_string(t)));
                Spectrum S(g);
                for (int i = 0; i < g.samples; ++i) {
                    double r = std::abs(g.freq(i));
                    if (r <= std::ldexp(1.0, bank.jmax)) S.v[std::size_t(i)] = rng.cgauss();
                }
                Signal f = grid_inverse_fourier(S);
                double hs = sobolev_norm(f, bank, s, 2.0).value;
                // direct spectral norm
                double acc = 0.0;
                for (int i = 0; i < g.samples; ++i) {
                    double r = std::abs(g.freq(i));
                    acc += std::pow(1.0 + r * r, s) * std::norm(S.v[std::size_t(i)]) * g.dxi();
                }
                double spectral = std::sqrt(acc);
                double lo = spectral * std::sqrt(rmin);
                double hi = std::numbers::sqrt2 * spectral * std::sqrt(rmax);
                if (hs < lo) worst = std::max(worst, (lo - hs) / spectral);
                if (hs > hi) worst = std::max(worst, (hs - hi) / spectral);
            }
            return bounded(worst, 1e-12, "band membership");
        });

    add("lp.lipschitz.ordershift", "||f||_{Lip g} vs |||D|^s f||_{Lip g-s} stays in the band",
        Severity::empirical, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 512);
            auto bank = build_bank(g, -2, 3);
            double gamma = 1.2, sigma = 0.5;
            double worst = 0.0;
            for (int t = 0; t < 20; ++t) {
                Rng rng(mix_seed(seed, "shift" + std::to_string(t)));
                Spectrum S(g);
                for (int i = 0; i < g.samples; ++i) {
                    double r = std::abs(g.freq(i));
                    if (r >= std::ldexp(1.0, bank.jmin) && r <= std::ldexp(1.0, bank.jmax))
                        S.v[std::size_t(i)] = rng.cgauss();
                }
                Signal f = grid_inverse_fourier(S);
                double ratio = order_shift_ratio(f, bank, gamma, sigma, LipschitzVariant::homogeneous);
                double lo = std::pow(2.0, -sigma - 1.0), hi = std::pow(2.0, sigma + 1.0);
                if (ratio < lo) worst = std::max(worst, lo / ratio - 1.0);
                if (ratio > hi) worst = std::max(worst, ratio / hi - 1.0);
            }
            return bounded(worst, 0.0, "envelope 2^{+-(sigma+1)}");
        });

    // ---- twisted dyadic ----
    add("dyadic.telescoping", "E_k - E_{k-1} == D_k on random signals", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            auto tree = make_tree(g, 0, 8);
            FracParam p = frac_param(1.1);
            double worst = 0.0;
            for (int t = 0; t < 10; ++t) {
                Rng rng(mix_seed(seed, "tel" + std::to_string(t)));
                Signal f(g);
                for (auto& z : f.v) z = rng.cgauss();
                for (int k = 1; k <= 8; ++k) {
                    Signal a = difference(f, tree, k, p);
                    Signal b = expectation(f, tree, k, p);
                    Signal c = expectation(f, tree, k - 1, p);
                    for (std::size_t i = 0; i < b.size(); ++i) b.v[i] -= c.v[i];
                    worst = std::max(worst, max_abs_diff(a, b));
                }
            }
            return bounded(worst, 1e-14);
        });

    add("dyadic.idempotent", "E_k E_k == E_k", Severity::exact, [](std::uint64_t seed) {
        GridSpec g = make_grid(1, 8.0, 256);
        auto tree = make_tree(g, 0, 8);
        FracParam p = frac_param(0.9);
        Rng rng(mix_seed(seed, "idem"));
        Signal f(g);
        for (auto& z : f.v) z = rng.cgauss();
        double worst = 0.0;
        for (int k = 0; k <= 8; ++k) {
            Signal a = expectation(f, tree, k, p);
            Signal b = expectation(a, tree, k, p);
            worst = std::max(worst, max_abs_diff(a, b));
        }
        return bounded(worst, 1e-14);
    });

    add("dyadic.selfadjoint", "<E_k^a f, g> == <f, E_k^a g>", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            auto tree = make_tree(g, 0, 8);
            FracParam p = frac_param(1.7);
            Rng rng(mix_seed(seed, "adj"));
            Signal f(g), h(g);
            for (auto& z : f.v) z = rng.cgauss();
            for (auto& z : h.v) z = rng.cgauss();
            auto inner = [&](const Signal& a, const Signal& b) {
                cplx acc{0.0, 0.0};
                for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(b.v[i]) * a.v[i];
                return acc * g.dx();
            };
            double worst = 0.0;
            for (int k : {2, 5, 8}) {
                cplx a = inner(expectation(f, tree, k, p), h);
                cplx b = inner(f, expectation(h, tree, k, p));
                worst = std::max(worst, std::abs(a - b) / std::abs(b));
            }
            return bounded(worst, 1e-12);
        });

    add("dyadic.haar.gram", "twisted Haar system is orthonormal", Severity::exact,
        [](std::uint64_t) {
            GridSpec g = make_grid(1, 4.0, 64);
            auto tree = make_tree(g, 0, 6);
            FracParam p = frac_param(1.1);
            // build all chirped Haar functions explicitly and take the Gram matrix
            std::vector<Signal> haars;
            for (int scale = 0; scale < 6; ++scale) {
                int w = tree.cell_samples(scale);
                int cells = tree.cells_per_axis(scale);
                for (int c = 0; c < cells; ++c) {
                    Signal h(g);
                    double norm = 1.0 / std::sqrt(w * g.dx());
                    for (int i = 0; i < w / 2; ++i) h.v[std::size_t(c * w + i)] = {norm, 0.0};
                    for (int i = w / 2; i < w; ++i) h.v[std::size_t(c * w + i)] = {-norm, 0.0};
                    haars.push_back(chirp_mul(h, p, ChirpDirection::inverse));
                }
            }
            double worst = 0.0;
            for (std::size_t a = 0; a < haars.size(); ++a) {
                for (std::size_t b = a; b < haars.size(); ++b) {
                    cplx acc{0.0, 0.0};
                    for (std::size_t i = 0; i < haars[a].size(); ++i)
                        acc += haars[a].v[i] * std::conj(haars[b].v[i]);
                    acc *= g.dx();
                    double expect = a == b ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(acc - cplx{expect, 0.0}));
                }
            }
            return bounded(worst, 1e-12);
        });

    add("dyadic.haar.parseval", "||f||_2^2 == sum |<f, h_I^a>|^2 (with the coarse mean)",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            auto tree = make_tree(g, 0, 8);
            double worst = 0.0;
            for (double alpha : {0.9, 1.1, 2.0}) {
                FracParam p = frac_param(alpha);
                for (int t = 0; t < 5; ++t) {
                    Rng rng(mix_seed(seed, "pars" + std::to_string(t)));
                    Signal f(g);
                    for (auto& z : f.v) z = rng.cgauss();
                    auto hc = haar_transform(f, tree, p);
                    double sum = std::norm(hc.scaling);
                    for (const auto& e : hc.entries) sum += std::norm(e.coef);
                    double n2 = lp_norm(f, 2.0);
                    worst = std::max(worst, std::abs(sum - n2 * n2) / (n2 * n2));
                }
            }
            return bounded(worst, 1e-10);
        });

    add("dyadic.haar.coefficient", "<f, h_I^a> == <M_a f, h_I>", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            auto tree = make_tree(g, 0, 8);
            FracParam p = frac_param(1.3);
            Rng rng(mix_seed(seed, "coef"));
            Signal f(g);
            for (auto& z : f.v) z = rng.cgauss();
            auto twisted = haar_transform(f, tree, p);
            auto classical = haar_transform(chirp_mul(f, p, ChirpDirection::forward), tree);
            double worst = std::abs(twisted.scaling - classical.scaling);
            for (std::size_t i = 0; i < twisted.entries.size(); ++i)
                worst = std::max(worst, std::abs(twisted.entries[i].coef - classical.entries[i].coef));
            return bounded(worst, 1e-14);
        });

    add("dyadic.haar.roundtrip", "inverse_haar(haar_transform(f)) == f", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            auto tree = make_tree(g, 0, 8);
            FracParam p = frac_param(2.0);
            Rng rng(mix_seed(seed, "hrt"));
            Signal f(g);
            for (auto& z : f.v) z = rng.cgauss();
            Signal back = inverse_haar(haar_transform(f, tree, p), tree);
            return bounded(rel_l2(back, f), 1e-10);
        });

    add("dyadic.square.transfer", "S_dy^a(f) == S_dy(M_a f) pointwise", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            auto tree = make_tree(g, 0, 8);
            FracParam p = frac_param(0.9);
            Rng rng(mix_seed(seed, "dsq"));
            Signal f(g);
            for (auto& z : f.v) z = rng.cgauss();
            Signal a = dyadic_square_function(f, tree, p);
            Signal b = dyadic_square_function(chirp_mul(f, p, ChirpDirection::forward), tree);
            return bounded(max_abs_diff(a, b), 1e-14);
        });

    add("dyadic.square.pythagoras", "||S_dy^a f||_2^2 == ||f - coarse mean||_2^2",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            auto tree = make_tree(g, 0, 8);
            FracParam p = frac_param(1.1);
            Rng rng(mix_seed(seed, "pyth"));
            Signal f(g);
            for (auto& z : f.v) z = rng.cgauss();
            Signal s = dyadic_square_function(f, tree, p);
            Signal m = expectation(f, tree, 0, p);
            Signal d(g);
            for (std::size_t i = 0; i < d.size(); ++i) d.v[i] = f.v[i] - m.v[i];
            double a = lp_norm(s, 2.0), b = lp_norm(d, 2.0);
            return bounded(std::abs(a - b) / b, 1e-12);
        });

    add("dyadic.decomposition", "coarse mean + sum D_k^a == f, pointwise", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 256);
            auto tree = make_tree(g, 0, 8);
            FracParam p = frac_param(1.9);
            Rng rng(mix_seed(seed, "dec"));
            Signal f(g);
            for (auto& z : f.v) z = rng.cgauss();
            Signal acc = expectation(f, tree, 0, p);
            for (int k = 1; k <= 8; ++k) {
                Signal d = difference(f, tree, k, p);
                for (std::size_t i = 0; i < acc.size(); ++i) acc.v[i] += d.v[i];
            }
            return bounded(max_abs_diff(acc, f), 1e-10);
        });

    add("dyadic.mixed.norm.equality", "||D_k^a Delta_j^a|| == ||D_k Delta_j||", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 1.0, 1024);
            auto tree = make_tree(g, 0, 10);
            auto bank = build_bank(g, 3, 8);
            FracParam p = frac_param(1.1);
            std::vector<std::pair<int, int>> pairs;
            for (int j = 3; j <= 8; ++j)
                for (int k = std::max(1, j - 3); k <= std::min(10, j + 3); ++k)
                    pairs.emplace_back(j, k);
            auto rep = mixed_orthogonality_probe(tree, bank, pairs, p, 120, mix_seed(seed, "mixed"));
            double worst = 0.0;
            for (const auto& row : rep.rows) worst = std::max(worst, row.equality_err);
            return bounded(worst, 1e-8);
        });

    add("dyadic.mixed.slope", "log2 envelope of ||D_k Delta_j|| decays with |j-k|",
        Severity::empirical, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 1.0, 1024);
            auto tree = make_tree(g, 0, 10);
            auto bank = build_bank(g, 3, 8);
            FracParam p = frac_param(1.1);
            std::vector<std::pair<int, int>> pairs;
            for (int j = 3; j <= 8; ++j)
                for (int k = 1; k <= 10; ++k)
                    if (std::abs(j - k) <= 6) pairs.emplace_back(j, k);
            auto rep = mixed_orthogonality_probe(tree, bank, pairs, p, 250, mix_seed(seed, "slope"));
            CheckResult r;
            r.max_err = rep.fitted_slope;
            r.tolerance = -0.4;
            r.pass = rep.fitted_slope <= -0.4;
            r.detail = "baseline=" + std::to_string(rep.baseline);
            return r;
        });

    // ---- potentials ----
    {
        auto pullback_signals = [](const FracParam& p, std::uint64_t seed) {
            GridSpec g = make_grid(1, 48.0, 4096);
            std::vector<Signal> out;
            for (int t = 0; t < 3; ++t)
                out.push_back(pullback_dcfree(g, p, mix_seed(seed, "pb" + std::to_string(t))));
            return out;
        };
        auto classical_signals = [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 512);
            std::vector<Signal> out;
            for (int t = 0; t < 3; ++t) {
                Signal f = admissible(g, 4.0, 2.0, mix_seed(seed, "cl" + std::to_string(t)));
                Spectrum S = grid_fourier(f);
                S.v[std::size_t(g.samples / 2)] = 0.0;  // DC-free
                out.push_back(grid_inverse_fourier(S));
            }
            return out;
        };

        add("pot.semigroup.riesz", "I_s I_t == I_{s+t} in all frames", Severity::exact,
            [=](std::uint64_t seed) {
                double worst = 0.0;
                std::vector<PotentialSpec> lhs = {riesz_potential(0.3), riesz_potential(0.4)};
                std::vector<PotentialSpec> rhs = {riesz_potential(0.7)};
                auto cls = classical_signals(seed);
                worst = std::max(worst, semigroup_check(lhs, rhs, cls, Frame::classical()).max_rel_err);
                for (double alpha : {0.9, 1.1, 2.0}) {
                    FracParam p = frac_param(alpha);
                    worst = std::max(worst,
                                     semigroup_check(lhs, rhs, cls, Frame::conjugated(p)).max_rel_err);
                    worst = std::max(worst, semigroup_check(lhs, rhs, pullback_signals(p, seed),
                                                            Frame::pullback(p))
                                                .max_rel_err);
                }
                return bounded(worst, 1e-9);
            });

        add("pot.semigroup.bessel", "J_s J_t == J_{s+t} in all frames", Severity::exact,
            [=](std::uint64_t seed) {
                double worst = 0.0;
                std::vector<PotentialSpec> lhs = {bessel_potential(0.6), bessel_potential(0.9)};
                std::vector<PotentialSpec> rhs = {bessel_potential(1.5)};
                auto cls = classical_signals(seed);
                worst = std::max(worst, semigroup_check(lhs, rhs, cls, Frame::classical()).max_rel_err);
                for (double alpha : {0.9, 1.1, 2.0}) {
                    FracParam p = frac_param(alpha);
                    worst = std::max(worst,
                                     semigroup_check(lhs, rhs, cls, Frame::conjugated(p)).max_rel_err);
                    worst = std::max(worst, semigroup_check(lhs, rhs, pullback_signals(p, seed),
                                                            Frame::pullback(p))
                                                .max_rel_err);
                }
                return bounded(worst, 1e-9);
            });

        add("pot.semigroup.laplacian", "(-D)^{z/2} (-D)^{w/2} == (-D)^{(z+w)/2}",
            Severity::exact, [=](std::uint64_t seed) {
                double worst = 0.0;
                std::vector<PotentialSpec> lhs = {frac_laplacian(0.5), frac_laplacian(0.7)};
                std::vector<PotentialSpec> rhs = {frac_laplacian(1.2)};
                auto cls = classical_signals(seed);
                worst = std::max(worst, semigroup_check(lhs, rhs, cls, Frame::classical()).max_rel_err);
                for (double alpha : {1.1, 2.0}) {
                    FracParam p = frac_param(alpha);
                    worst = std::max(worst,
                                     semigroup_check(lhs, rhs, cls, Frame::conjugated(p)).max_rel_err);
                    worst = std::max(worst, semigroup_check(lhs, rhs, pullback_signals(p, seed),
                                                            Frame::pullback(p))
                                                .max_rel_err);
                }
                return bounded(worst, 1e-9);
            });

        add("pot.commutation.mixed", "I_s (-D)^z == (-D)^z I_s == I_{s-2z}", Severity::exact,
            [=](std::uint64_t seed) {
                double worst = 0.0;
                // z = 0.2: (-Delta)^z has symbol exponent 2z = 0.4
                std::vector<PotentialSpec> ab = {riesz_potential(0.9), frac_laplacian(0.4)};
                std::vector<PotentialSpec> ba = {frac_laplacian(0.4), riesz_potential(0.9)};
                std::vector<PotentialSpec> direct = {riesz_potential(0.5)};
                auto cls = classical_signals(seed);
                worst = std::max(worst, semigroup_check(ab, direct, cls, Frame::classical()).max_rel_err);
                worst = std::max(worst, semigroup_check(ba, direct, cls, Frame::classical()).max_rel_err);
                for (double alpha : {1.1, 2.0}) {
                    FracParam p = frac_param(alpha);
                    auto pb = pullback_signals(p, seed);
                    worst = std::max(worst, semigroup_check(ab, direct, pb, Frame::pullback(p)).max_rel_err);
                    worst = std::max(worst, semigroup_check(ba, direct, pb, Frame::pullback(p)).max_rel_err);
                }
                return bounded(worst, 1e-9);
            });

        add("pot.frame.coherence", "conjugated-frame D^s via two independent code paths",
            Severity::exact, [=](std::uint64_t seed) {
                auto cls = classical_signals(seed);
                FracParam p = frac_param(1.3);
                double worst = 0.0;
                for (const Signal& f : cls) {
                    Signal a = apply_potential(homog_derivative(0.8), f, Frame::conjugated(p));
                    Signal g1 = chirp_mul(f, p, ChirpDirection::forward);
                    Signal g2 = apply_potential(homog_derivative(0.8), g1, Frame::classical());
                    Signal b = chirp_mul(g2, p, ChirpDirection::inverse);
                    worst = std::max(worst, max_abs_diff(a, b));
                }
                return bounded(worst, 1e-12);
            });

        add("pot.bessel.contraction", "||J_s f||_{L^r_a} <= ||f||_{L^r_a}", Severity::exact,
            [=](std::uint64_t seed) {
                double worst = 0.0;
                for (double alpha : {0.9, 1.1, 2.0}) {
                    FracParam p = frac_param(alpha);
                    for (const Signal& f : pullback_signals(p, seed)) {
                        Signal h = apply_potential(bessel_potential(0.8), f, Frame::pullback(p));
                        for (double r : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
                            double a = pullback_norm(h, r, p).value;
                            double b = pullback_norm(f, r, p).value;
                            worst = std::max(worst, a / b - 1.0);
                        }
                    }
                }
                return bounded(std::max(worst, 0.0), 1e-10);
            });

        add("pot.pullback.isometry", "||f||_{L^2_a} == ||f||_2 (unitarity of the frame map)",
            Severity::exact, [=](std::uint64_t seed) {
                double worst = 0.0;
                for (double alpha : {0.9, 1.1, 2.0}) {
                    FracParam p = frac_param(alpha);
                    for (const Signal& f : pullback_signals(p, seed)) {
                        double a = pullback_norm(f, 2.0, p).value;
                        double b = lp_norm(f, 2.0);
                        worst = std::max(worst, std::abs(a - b) / b);
                    }
                }
                return bounded(worst, 1e-9);
            });

        add("pot.hls.stability", "HLS ratio is finite and refinement-stable", Severity::empirical,
            [](std::uint64_t) {
                GridSpec g = make_grid(1, 16.0, 256);
                std::vector<Signal> fam;
                for (double wdt : {0.5, 1.0, 2.0}) fam.push_back(gen_gaussian(g, wdt));
                FracParam p = frac_param(1.1);
                auto cert = hls_desk_check(0.5, 4.0 / 3.0, 4.0, fam, p);
                return CheckResult{cert.pass, cert.max_rel_err, cert.tolerance, "drift factor"};
            });

        add("pot.chain.ledger", "operator chain obeys the stagewise bound", Severity::exact,
            [=](std::uint64_t seed) {
                FracParam p = frac_param(1.1);
                Signal f = pullback_signals(p, seed).front();
                BoundedOp T{[](const Signal& v) { return v; }, 1.0, "identity"};
                BoundedOp A{[&p](const Signal& v) {
                                return band_selector(sym_smoothstep(4.0, 8.0), 1.0, v, p);
                            },
                            1.0, "smooth lowband"};
                auto rep = operator_chain(T, A, 0.5, 0.7, 4.0 / 3.0, 4.0, f, p);
                return CheckResult{rep.certificate.pass, rep.certificate.max_rel_err,
                                   rep.certificate.tolerance, "stages=" + std::to_string(rep.stages.size())};
            });
    }

    add("pot.twisted.product", "|Pi_a(f,g)| == |f||g| pointwise and Hoelder holds",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            FracParam p = frac_param(1.1);
            Rng rng(mix_seed(seed, "prod"));
            Signal f(g), h(g);
            for (auto& z : f.v) z = rng.cgauss();
            for (auto& z : h.v) z = rng.cgauss();
            Signal prod = twisted_product({f, h}, p);
            double worst = 0.0;
            for (std::size_t i = 0; i < prod.size(); ++i)
                worst = std::max(worst,
                                 std::abs(std::abs(prod.v[i]) - std::abs(f.v[i]) * std::abs(h.v[i])));
            double hoelder = lp_norm(prod, 1.0) / (lp_norm(f, 2.0) * lp_norm(h, 2.0));
            bool ok = worst <= 1e-13 && hoelder <= 1.0 + 1e-12;
            return CheckResult{ok, worst, 1e-13, "hoelder=" + std::to_string(hoelder)};
        });

    add("pot.twisted.convolution", "derivative transfer through the twisted convolution",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            FracParam p = frac_param(1.1);
            Rng rng(mix_seed(seed, "conv"));
            Signal w = gen_random_bandlimited(g, 2.0, 2.0, rng);
            Signal u = gen_random_bandlimited(g, 2.0, 2.0, rng);
            Signal tw = twisted_convolution(w, u, p);
            Signal lhs = apply_potential(homog_derivative(1.0), tw, Frame::conjugated(p));
            // right side: M^{-1} D^s ((M w) * (M u))
            Signal mw = chirp_mul(w, p, ChirpDirection::forward);
            Signal mu = chirp_mul(u, p, ChirpDirection::forward);
            Spectrum A = grid_fourier(mw), B = grid_fourier(mu);
            for (std::size_t i = 0; i < A.v.size(); ++i) A.v[i] *= B.v[i];
            Signal conv = grid_inverse_fourier(A);
            Signal rhs = chirp_mul(apply_potential(homog_derivative(1.0), conv, Frame::classical()),
                                   p, ChirpDirection::inverse);
            double comm = rel_l2(twisted_convolution(u, w, p), tw);
            return bounded(std::max(rel_l2(lhs, rhs), comm), 1e-10);
        });

    add("pot.kp.region", "structural-condition classifier matches the direct formula",
        Severity::exact, [](std::uint64_t) {
            int mismatches = 0;
            int total = 0;
            for (int n : {1, 2, 3}) {
                for (int i = 0; i < 20; ++i) {
                    double s = -1.0 + 4.0 * i / 19.0;
                    for (int jr = 0; jr < 10; ++jr) {
                        double r = 0.55 + jr * 0.3;
                        ++total;
                        auto got = kato_ponce_region(s, r, n);
                        // independent re-derivation: allowed iff
                        // s > max(0, n/r - n), or s is a positive even integer,
                        // or s == 0
                        bool even_pos = false;
                        for (int e = 2; e <= 8; e += 2)
                            if (std::abs(s - e) < 1e-12) even_pos = true;
                        bool allowed = s > std::max(0.0, double(n) / r - double(n)) || even_pos ||
                                       std::abs(s) < 1e-300;
                        if (s < 0.0) allowed = false;
                        if ((got == KatoPonceRegion::allowed) != allowed) ++mismatches;
                    }
                }
            }
            return CheckResult{mismatches == 0, double(mismatches), 0.0,
                               std::to_string(total) + " lattice points"};
        });

    // ---- oscillation package ----
    add("osc.bmo.twopath", "Omega_{a,r}(b) equals the classical oscillation of M_a b",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto cubes = all_dyadic_cubes(g);
            FracParam p = frac_param(1.1);
            Rng rng(mix_seed(seed, "bmo"));
            Signal b = gen_log_bmo(g, rng.uniform(-2.0, 2.0), 1e-3);
            double worst = 0.0;
            for (double r : {1.0, 2.0}) {
                double x = bmo_alpha_norm(b, cubes, p, r);
                double y = mean_oscillation_norm(chirp_mul(b, p, ChirpDirection::forward), cubes, r);
                worst = std::max(worst, std::abs(x - y));
            }
            return bounded(worst, 1e-14);
        });

    add("osc.bmo.chirped.constant", "chirped constants have zero oscillation scores",
        Severity::exact, [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto cubes = all_dyadic_cubes(g);
            FracParam p = frac_param(1.3);
            Signal b(g);
            for (int i = 0; i < g.samples; ++i) {
                double x = g.coord(i);
                double ph = -kPi * x * x * p.kappa;
                b.v[std::size_t(i)] = cplx{2.0 * std::cos(ph), 2.0 * std::sin(ph)};
            }
            double w1 = bmo_alpha_norm(b, cubes, p, 1.0);
            Signal sm = sharp_maximal(b, cubes, p);
            double w2 = lp_norm(sm, std::numeric_limits<double>::infinity());
            auto scales = dyadic_scales(g);
            double w3 = carleson_score(b, p, default_psi(), scales, cubes);
            return bounded(std::max({w1, w2, w3}), 1e-12);
        });

    add("osc.bmo.monotone.r", "the r-oscillation is nondecreasing in r", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto cubes = all_dyadic_cubes(g);
            FracParam p = frac_param(0.9);
            Rng rng(mix_seed(seed, "mono"));
            Signal b = gen_log_bmo(g, rng.uniform(-2.0, 2.0), 1e-3);
            double r1 = bmo_alpha_norm(b, cubes, p, 1.0);
            double r2 = bmo_alpha_norm(b, cubes, p, 2.0);
            double r4 = bmo_alpha_norm(b, cubes, p, 4.0);
            double worst = std::max(r1 - r2, r2 - r4);
            return bounded(std::max(worst, 0.0), 1e-12);
        });

    add("osc.sharp.twopath", "M^#_a b == M^#(M_a b) pointwise", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto cubes = all_dyadic_cubes(g);
            FracParam p = frac_param(2.0);
            Rng rng(mix_seed(seed, "sharp2"));
            Signal b = gen_log_bmo(g, rng.uniform(-3.0, 3.0), 1e-3);
            Signal a = sharp_maximal(b, cubes, p);
            Signal c = sharp_maximal_classical(chirp_mul(b, p, ChirpDirection::forward), cubes);
            return bounded(max_abs_diff(a, c), 1e-14);
        });

    add("osc.sharp.bruteforce", "scatter-max equals the direct per-point cube scan",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 8.0, 64);
            auto cubes = all_dyadic_cubes(g);
            Rng rng(mix_seed(seed, "sbrute"));
            Signal b(g);
            for (int i = 0; i < g.samples; ++i)
                b.v[std::size_t(i)] = cplx{g.coord(i) > 0 ? 1.0 : -1.0, 0.0};
            Signal fast = sharp_maximal_classical(b, cubes);
            Signal slow(g);
            for (int x = 0; x < g.samples; ++x) {
                double best = 0.0;
                for (const Cube& q : cubes.cubes) {
                    if (!q.contains(x, 0, 1)) continue;
                    cplx avg{0.0, 0.0};
                    for (int i = q.offset0; i < q.offset0 + q.side; ++i) avg += b.v[std::size_t(i)];
                    avg /= double(q.side);
                    double osc = 0.0;
                    for (int i = q.offset0; i < q.offset0 + q.side; ++i)
                        osc += std::abs(b.v[std::size_t(i)] - avg);
                    best = std::max(best, osc / q.side);
                }
                slow.v[std::size_t(x)] = cplx{best, 0.0};
            }
            return bounded(max_abs_diff(fast, slow), 1e-13);
        });

    add("osc.carleson.twopath", "|Psi_t^a b| == |Psi_t * M_a b| via the score equality",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto cubes = all_dyadic_cubes(g);
            auto scales = dyadic_scales(g);
            FracParam p = frac_param(1.1);
            Rng rng(mix_seed(seed, "carl"));
            Signal b = gen_log_bmo(g, rng.uniform(-2.0, 2.0), 1e-3);
            double a = carleson_score(b, p, default_psi(), scales, cubes);
            double c = carleson_score_classical(chirp_mul(b, p, ChirpDirection::forward),
                                                default_psi(), scales, cubes);
            return bounded(std::abs(a - c), 1e-13);
        });

    add("osc.carleson.homogeneity", "the Carleson score is homogeneous of degree 1",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto cubes = all_dyadic_cubes(g);
            auto scales = dyadic_scales(g);
            FracParam p = frac_param(1.1);
            Rng rng(mix_seed(seed, "chom"));
            Signal b = gen_log_bmo(g, rng.uniform(-2.0, 2.0), 1e-3);
            double s1 = carleson_score(b, p, default_psi(), scales, cubes);
            Signal b2 = b;
            for (auto& z : b2.v) z *= 2.0;
            double s2 = carleson_score(b2, p, default_psi(), scales, cubes);
            return bounded(std::abs(s2 - 2.0 * s1) / (2.0 * s1), 1e-12);
        });

    add("osc.jn.decay", "level-set fractions decay log-linearly on the BMO corpus",
        Severity::empirical, [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 512);
            FracParam p = frac_param(1.1);
            Cube full{0, 0, g.samples};
            struct Cfg { double c, eps; };
            const Cfg cfgs[] = {{0.0, 1e-3}, {2.0, 1e-3}, {-3.0, 1e-4}, {1.0, 1e-2}, {5.0, 1e-3}};
            double worst_r2 = 1.0, worst_slope = -1e9;
            for (const Cfg& c : cfgs) {
                Signal w = gen_log_bmo(g, c.c, c.eps);
                Signal b = chirp_mul(w, p, ChirpDirection::inverse);
                // lambda grid proportional to the deviation scale
                Signal gs = chirp_mul(b, p, ChirpDirection::forward);
                cplx mean{0.0, 0.0};
                for (auto& z : gs.v) mean += z;
                mean /= double(gs.size());
                double var = 0.0;
                for (auto& z : gs.v) var += std::norm(z - mean);
                double sd = std::sqrt(var / double(gs.size()));
                std::vector<double> lam;
                for (int i = 0; i < 12; ++i) lam.push_back((0.5 + 3.5 * i / 11.0) * sd);
                auto prof = john_nirenberg_profile(b, p, full, lam);
                worst_r2 = std::min(worst_r2, prof.r_squared);
                worst_slope = std::max(worst_slope, prof.slope);
            }
            bool ok = worst_slope < 0.0 && worst_r2 > 0.9;
            return CheckResult{ok, 1.0 - worst_r2, 0.1,
                               "worst slope=" + std::to_string(worst_slope)};
        });

    add("osc.hardy.twopath", "Hardy quasi-norm equals the classical one of M_a f",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto bank = build_bank(g, -2, 2);
            FracParam p = frac_param(1.1);
            double worst = 0.0;
            for (double hp : {0.5, 1.0}) {
                Signal f = admissible(g, 3.0, 2.0, mix_seed(seed, "hardy"));
                double a = hardy_square_quasinorm(f, bank, p, hp);
                double b = lp_norm(square_function(chirp_mul(f, p, ChirpDirection::forward), bank), hp);
                worst = std::max(worst, std::abs(a - b) / b);
            }
            return bounded(worst, 1e-14);
        });

    add("osc.hardy.ptriangle", "p-th power subadditivity of the quasi-norm", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto bank = build_bank(g, -2, 2);
            FracParam p = frac_param(1.1);
            double hp = 0.7;
            double worst = 0.0;
            for (int t = 0; t < 10; ++t) {
                Signal f = admissible(g, 3.0, 2.0, mix_seed(seed, "tri" + std::to_string(t)));
                Signal h = admissible(g, 3.0, 2.0, mix_seed(seed, "tri2" + std::to_string(t)));
                Signal sum(g);
                for (std::size_t i = 0; i < sum.size(); ++i) sum.v[i] = f.v[i] + h.v[i];
                double qs = std::pow(hardy_square_quasinorm(sum, bank, p, hp), hp);
                double qa = std::pow(hardy_square_quasinorm(f, bank, p, hp), hp);
                double qb = std::pow(hardy_square_quasinorm(h, bank, p, hp), hp);
                worst = std::max(worst, qs - (qa + qb));
            }
            return bounded(std::max(worst, 0.0), 1e-10);
        });

    add("osc.atom.roundtrip", "synthesized atoms validate at random cubes and angles",
        Severity::exact, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            int failures = 0;
            for (int t = 0; t < 50; ++t) {
                Rng rng(mix_seed(seed, "atom" + std::to_string(t)));
                int side = 8 << rng.index(3);
                int off = rng.index(g.samples / side) * side;
                Cube Q{off, 0, side};
                double pp = 0.5 + 0.5 * rng.uniform01();
                double qq = 2.0 + 2.0 * rng.uniform01();
                FracParam pr = frac_param(0.6 + 1.8 * rng.uniform01());
                Signal A = synthesize_atom(g, Q, pp, qq, pr, rng.raw());
                if (!validate_atom(A, Q, pp, qq, pr).pass) ++failures;
            }
            return CheckResult{failures == 0, double(failures), 0.0, "50 random atoms"};
        });

    add("osc.atom.wrong.angle", "moment check rejects a mismatched chirp", Severity::exact,
        [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 256);
            Cube Q{96, 0, 32};
            FracParam pr = frac_param(1.1);
            Signal A = synthesize_atom(g, Q, 0.5, 2.0, pr, mix_seed(seed, "wrong"));
            auto good = validate_atom(A, Q, 0.5, 2.0, pr);
            auto bad = validate_atom(A, Q, 0.5, 2.0, frac_param(2.0));
            return CheckResult{good.pass && !bad.pass, 0.0, 0.0, "pass/fail pair"};
        });

    add("osc.scores.spearman", "three stability scores rank a corpus consistently",
        Severity::empirical, [](std::uint64_t seed) {
            GridSpec g = make_grid(1, 16.0, 128);
            auto cubes = all_dyadic_cubes(g);
            auto scales = dyadic_scales(g);
            FracParam p = frac_param(1.1);
            auto psi = default_psi();
            std::vector<double> va, vb, vc;
            for (int t = 0; t < 20; ++t) {
                Rng rng(mix_seed(seed, "corpus" + std::to_string(t)));
                double amp = 0.25 * (1 + t % 5);
                Signal w = gen_log_bmo(g, rng.uniform(-4.0, 4.0), 1e-3 * (1 + rng.index(9)), amp);
                Signal b = chirp_mul(w, p, ChirpDirection::inverse);
                auto s = stability_scores(b, p, 2.0, psi, cubes);
                va.push_back(s.omega_r);
                vb.push_back(s.carleson);
                vc.push_back(s.sharpmax);
            }
            double r1 = spearman_rank_correlation(va, vb);
            double r2 = spearman_rank_correlation(va, vc);
            double r3 = spearman_rank_correlation(vb, vc);
            double worst = std::min({r1, r2, r3});
            return CheckResult{worst >= 0.8, worst, 0.8, "min pairwise Spearman"};
        });

    // ---- limit laws ----
    add("limit.regime.classify", "classifier matches hand-computed descriptors",
        Severity::exact, [](std::uint64_t) {
            RegimeConfig cfg{0.1, 3.0, 0.05};
            bool ok = classify_regime(frac_param(kPi / 2.0), cfg) == Regime::classical &&
                      classify_regime(frac_param(0.05), cfg) == Regime::warning &&
                      classify_regime(frac_param(kPi / 3.0), cfg) == Regime::effective_fractional;
            // boundary tie-break: D == delta1 classifies as classical
            FracParam edge = frac_param(kPi / 2.0);
            edge.deviation = cfg.delta1;
            ok = ok && classify_regime(edge, cfg) == Regime::classical;
            return CheckResult{ok, 0.0, 0.0, "three example angles + boundary"};
        });

    add("limit.classical.profile", "block/square/multiplier errors vanish as alpha -> pi/2",
        Severity::exact, [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 256);
            auto bank = build_bank(g, -2, 2);
            Signal f = gen_gaussian(g, 2.0, 0.0, 1.5);
            auto prof = classical_limit_profile(f, bank, sym_gauss(0.5), 1, 28);
            double fin = prof.rows.empty() ? 1.0
                                           : std::max({prof.rows.back().block_err,
                                                       prof.rows.back().square_err,
                                                       prof.rows.back().multiplier_err});
            return CheckResult{prof.pass, fin, 1e-6, prof.detail};
        });

    add("limit.singular.profile", "selector collapses to Phi(0) f with passband doubling",
        Severity::exact, [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 1024);
            Signal f = gen_gaussian(g, 2.0);
            // Phi(0) = 1 bump: selector converges to the identity
            auto prof1 = singular_boundary_profile(f, sym_smoothstep(1.0, 2.0), 1.0, 24);
            // annulus Phi (Phi(0) = 0): selector collapses to zero
            auto prof2 = singular_boundary_profile(f, sym_smooth_annulus(0), 1.0, 24);
            // passband doubling while in-grid
            double worst_ratio = 0.0;
            for (std::size_t i = 1; i < prof2.rows.size(); ++i) {
                double prev = prof2.rows[i - 1].passband_center;
                double cur = prof2.rows[i].passband_center;
                double hi_edge = 2.0 / prof2.rows[i].s;  // annulus top at level 0
                if (prev > 0.0 && cur > 0.0 && hi_edge <= g.nyquist()) {
                    double ratio = cur / prev;
                    worst_ratio = std::max(worst_ratio, std::abs(ratio - 2.0) / 2.0);
                }
            }
            bool ok = prof1.pass && prof2.pass && worst_ratio <= 0.05;
            return CheckResult{ok, worst_ratio, 0.05,
                               prof1.detail + " / " + prof2.detail};
        });

    add("limit.symbol.convergence", "rescaled symbols converge uniformly on the grid",
        Severity::exact, [](std::uint64_t) {
            GridSpec g = make_grid(1, 16.0, 256);
            Symbol m = sym_gauss(0.5);
            double prev = 1e300;
            bool mono = true;
            double last = 0.0;
            for (int ell = 1; ell <= 20; ++ell) {
                FracParam p = frac_param(kPi / 2.0 + std::ldexp(1.0, -ell));
                double dev = 0.0;
                for (int i = 0; i < g.samples; ++i) {
                    FreqPoint q{{g.freq(i), 0.0}, 1};
                    FreqPoint qs{{p.sin_alpha * g.freq(i), 0.0}, 1};
                    dev = std::max(dev, std::abs(m.eval(qs) - m.eval(q)));
                }
                if (ell > 2 && dev > prev * 1.05 + 1e-15) mono = false;
                prev = dev;
                last = dev;
            }
            return CheckResult{mono && last < 1e-5, last, 1e-5, "uniform deviation"};
        });

    return reg;
}

} // namespace

const std::vector<Entry>& registry() {
    static const std::vector<Entry> reg = build_registry();
    return reg;
}

RunReport run_checks(const RunOptions& opt) {
    RunReport report;
    report.seed = opt.seed;
    report.strict = opt.strict;

    std::vector<const Entry*> selected;
    std::regex re;
    bool use_filter = !opt.filter.empty();
    if (use_filter) re = std::regex(opt.filter);
    for (const Entry& e : registry())
        if (!use_filter || std::regex_search(e.id, re)) selected.push_back(&e);

    std::vector<RunReport::Row> rows(selected.size());
    auto run_one = [&](std::size_t i) {
        const Entry& e = *selected[i];
        RunReport::Row row;
        row.id = e.id;
        row.law = e.law;
        row.severity = e.severity;
        auto t0 = std::chrono::steady_clock::now();
        try {
            row.result = e.run(opt.seed);
        } catch (const std::exception& ex) {
            row.result = {false, std::numeric_limits<double>::infinity(), 0.0,
                          std::string("exception: ") + ex.what()};
        }
        auto t1 = std::chrono::steady_clock::now();
        row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rows[i] = std::move(row);
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> workers;
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= selected.size()) return;
                    run_one(i);
                }
            }));
        for (auto& f : workers) f.get();
    }

    for (auto& row : rows) {
        if (!row.result.pass) {
            if (row.severity == Severity::exact || opt.strict)
                ++report.gated_failures;
            else
                ++report.warnings;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string report_to_json(const RunReport& report, const RunOptions& opt) {
    std::ostringstream out;
    auto num = [](double v) {
        std::ostringstream s;
        if (std::isinf(v)) {
            s << (v > 0 ? "\"inf\"" : "\"-inf\"");
        } else if (std::isnan(v)) {
            s << "\"nan\"";
        } else {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            s << buf;
        }
        return s.str();
    };
    auto quote = [](const std::string& s) {
        std::string o = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') o += '\\';
            if (c == '\n') { o += "\\n"; continue; }
            o += c;
        }
        o += '"';
        return o;
    };
    out << "{\n";
    out << "  \"schema\": \"frlp-run-report v1\",\n";
    out << "  \"config\": {\"seed\": " << report.seed << ", \"strict\": "
        << (report.strict ? "true" : "false") << ", \"filter\": " << quote(opt.filter)
        << ", \"jobs\": " << opt.jobs << "},\n";
    out << "  \"environment\": {\"precision\": \"f64\", \"samples_layout\": \"row-major\"},\n";
    out << "  \"entries\": [\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        out << "    {\"id\": " << quote(r.id) << ", \"severity\": "
            << quote(r.severity == Severity::exact ? "exact" : "empirical")
            << ", \"pass\": " << (r.result.pass ? "true" : "false")
            << ", \"max_err\": " << num(r.result.max_err)
            << ", \"tolerance\": " << num(r.result.tolerance)
            << ", \"detail\": " << quote(r.result.detail);
        if (opt.timings) out << ", \"runtime_ms\": " << num(r.runtime_ms);
        out << "}" << (i + 1 < report.rows.size() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"gated_failures\": " << report.gated_failures << ",\n";
    out << "  \"warnings\": " << report.warnings << "\n";
    out << "}\n";
    return out.str();
}

std::string report_summary(const RunReport& report) {
    std::ostringstream out;
    for (const auto& r : report.rows) {
        out << (r.result.pass ? "[PASS] " : (r.severity == Severity::exact || report.strict
                                                 ? "[FAIL] "
                                                 : "[WARN] "))
            << r.id << "  max_err=" << r.result.max_err << "  tol=" << r.result.tolerance;
        if (!r.result.detail.empty()) out << "  (" << r.result.detail << ")";
        out << "\n";
    }
    out << report.rows.size() << " entries, " << report.gated_failures << " gated failures, "
        << report.warnings << " warnings\n";
    return out.str();
}

} // namespace frlp::checks
