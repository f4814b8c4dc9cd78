#include "frlp/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "frlp/dft.hpp"
#include "frlp/rng.hpp"

namespace frlp {

namespace {
constexpr double kPi = std::numbers::pi;
}

CubeFamily all_dyadic_cubes(const GridSpec& grid, int min_side_samples) {
    CubeFamily fam;
    fam.grid = grid;
    int side = grid.samples;
    while (side >= min_side_samples) {
        for (int o0 = 0; o0 < grid.samples; o0 += side) {
            if (grid.dim == 1) {
                fam.cubes.push_back({o0, 0, side});
            } else {
                for (int o1 = 0; o1 < grid.samples; o1 += side)
                    fam.cubes.push_back({o0, o1, side});
            }
        }
        if (side % 2 != 0) break;
        side /= 2;
    }
    return fam;
}

namespace {

// iterate sample indices of a cube
template <typename Fn>
void for_cube(const GridSpec& g, const Cube& q, Fn&& fn) {
    if (g.dim == 1) {
        for (int a = q.offset0; a < q.offset0 + q.side; ++a) fn(std::size_t(a));
    } else {
        for (int a = q.offset0; a < q.offset0 + q.side; ++a)
            for (int b = q.offset1; b < q.offset1 + q.side; ++b)
                fn(std::size_t(a) * g.samples + b);
    }
}

std::size_t cube_count(const GridSpec& g, const Cube& q) {
    return g.dim == 1 ? std::size_t(q.side) : std::size_t(q.side) * std::size_t(q.side);
}

cplx cube_average(const Signal& g, const Cube& q) {
    std::vector<cplx> vals;
    vals.reserve(cube_count(g.grid, q));
    for_cube(g.grid, q, [&](std::size_t i) { vals.push_back(g.v[i]); });
    return dft::pairwise_sum(std::span<const cplx>(vals.data(), vals.size())) /
           double(vals.size());
}

double cube_oscillation(const Signal& g, const Cube& q, double r) {
    cplx avg = cube_average(g, q);
    std::vector<double> devs;
    devs.reserve(cube_count(g.grid, q));
    for_cube(g.grid, q, [&](std::size_t i) { devs.push_back(std::pow(std::abs(g.v[i] - avg), r)); });
    return std::pow(dft::pairwise_sum(devs) / double(devs.size()), 1.0 / r);
}

} // namespace

double mean_oscillation_norm(const Signal& g, const CubeFamily& cubes, double r) {
    if (cubes.cubes.empty()) fail(ErrorCode::EmptyCubeFamily, "no cubes");
    require_same_grid(g.grid, cubes.grid, "cube family grid mismatch");
    if (!(r >= 1.0)) fail(ErrorCode::UsageError, "r must be >= 1");
    double sup = 0.0;
    for (const Cube& q : cubes.cubes) sup = std::max(sup, cube_oscillation(g, q, r));
    return sup;
}

double bmo_alpha_norm(const Signal& b, const CubeFamily& cubes, const FracParam& p, double r) {
    return mean_oscillation_norm(chirp_mul(b, p, ChirpDirection::forward), cubes, r);
}

Signal sharp_maximal_classical(const Signal& g, const CubeFamily& cubes) {
    if (cubes.cubes.empty()) fail(ErrorCode::EmptyCubeFamily, "no cubes");
    require_same_grid(g.grid, cubes.grid, "cube family grid mismatch");
    Signal out(g.grid);
    for (const Cube& q : cubes.cubes) {
        double osc = cube_oscillation(g, q, 1.0);
        for_cube(g.grid, q, [&](std::size_t i) {
            out.v[i] = cplx{std::max(out.v[i].real(), osc), 0.0};
        });
    }
    return out;
}

Signal sharp_maximal(const Signal& b, const CubeFamily& cubes, const FracParam& p) {
    return sharp_maximal_classical(chirp_mul(b, p, ChirpDirection::forward), cubes);
}

PsiKernel default_psi() {
    PsiKernel k;
    k.name = "mexican_hat";
    k.shape = [](double r2, int dim) {
        // (1 - c r^2) exp(-pi r^2); c chosen so the continuous mean vanishes
        double c = dim == 1 ? 2.0 * kPi : kPi;
        return (1.0 - c * r2) * std::exp(-kPi * r2);
    };
    return k;
}

Signal sample_psi(const PsiKernel& psi, const GridSpec& grid, double t) {
    if (!(t > 0.0)) fail(ErrorCode::UsageError, "scale must be positive");
    Signal prof(grid);
    const int n = grid.samples;
    const double invn = std::pow(t, -grid.dim);
    double l1 = 0.0;
    if (grid.dim == 1) {
        for (int i = 0; i < n; ++i) {
            double u = grid.coord(i) / t;
            prof.v[std::size_t(i)] = cplx{invn * psi.shape(u * u, 1), 0.0};
            l1 += std::abs(prof.v[std::size_t(i)].real());
        }
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double ux = grid.coord(a) / t;
                double uy = grid.coord(b) / t;
                prof.v[std::size_t(a) * n + b] = cplx{invn * psi.shape(ux * ux + uy * uy, 2), 0.0};
                l1 += std::abs(prof.v[std::size_t(a) * n + b].real());
            }
    }
    const double w = std::pow(grid.dx(), grid.dim);
    cplx total = dft::pairwise_sum(std::span<const cplx>(prof.v.data(), prof.v.size())) * w;
    if (std::abs(total) > 1e-3 * l1 * w)
        fail(ErrorCode::PsiNotMeanZero,
             psi.name + " has grid mean " + std::to_string(std::abs(total)) + " at scale " +
                 std::to_string(t));
    // re-center to exact zero mean (twice, pushing the residual into rounding)
    for (int pass = 0; pass < 2; ++pass) {
        cplx mean = dft::pairwise_sum(std::span<const cplx>(prof.v.data(), prof.v.size())) /
                    double(prof.size());
        for (auto& z : prof.v) z -= mean;
    }
    return prof;
}

namespace {

Signal periodic_convolve(const Signal& a, const Signal& b) {
    Spectrum A = grid_fourier(a);
    Spectrum B = grid_fourier(b);
    for (std::size_t i = 0; i < A.v.size(); ++i) A.v[i] *= B.v[i];
    return grid_inverse_fourier(A);
}

} // namespace

std::vector<double> dyadic_scales(const GridSpec& grid) {
    std::vector<double> out;
    // kernels must both resolve (t >= 4 dx) and fit the domain (t <= L/8)
    for (double t = 4.0 * grid.dx(); t <= grid.extent / 8.0; t *= 2.0) out.push_back(t);
    return out;
}

double psi_nondegeneracy(const PsiKernel& psi, const GridSpec& g,
                         const std::vector<double>& scales) {
    double inf = std::numeric_limits<double>::infinity();
    std::vector<double> sup(g.size(), 0.0);
    for (double t : scales) {
        Spectrum St = grid_fourier(sample_psi(psi, g, t));
        for (std::size_t i = 0; i < St.v.size(); ++i)
            sup[i] = std::max(sup[i], std::abs(St.v[i]));
    }
    const int n = g.samples;
    for (int i = 0; i < n; ++i) {
        if (g.dim == 1) {
            if (g.freq(i) == 0.0) continue;
            inf = std::min(inf, sup[std::size_t(i)]);
        } else {
            for (int b = 0; b < n; ++b) {
                if (g.freq(i) == 0.0 && g.freq(b) == 0.0) continue;
                inf = std::min(inf, sup[std::size_t(i) * n + b]);
            }
        }
    }
    return std::isfinite(inf) ? inf : 0.0;
}

double carleson_score_classical(const Signal& g, const PsiKernel& psi,
                                const std::vector<double>& scales, const CubeFamily& cubes) {
    if (cubes.cubes.empty()) fail(ErrorCode::EmptyCubeFamily, "no cubes");
    const double w = std::pow(g.grid.dx(), g.grid.dim);
    const double logw = std::numbers::ln2;  // dt/t weight per dyadic scale
    // precompute |psi_t * g|^2 per scale
    std::vector<std::vector<double>> sq(scales.size());
    for (std::size_t k = 0; k < scales.size(); ++k) {
        Signal pt = sample_psi(psi, g.grid, scales[k]);
        Signal conv = periodic_convolve(pt, g);
        sq[k].resize(conv.size());
        for (std::size_t i = 0; i < conv.size(); ++i) sq[k][i] = std::norm(conv.v[i]);
    }
    double sup = 0.0;
    for (const Cube& q : cubes.cubes) {
        double len = q.length(g.grid);
        double acc = 0.0;
        for (std::size_t k = 0; k < scales.size(); ++k) {
            if (scales[k] > len) continue;
            double cell = 0.0;
            for_cube(g.grid, q, [&](std::size_t i) { cell += sq[k][i]; });
            acc += cell * w * logw;
        }
        double measure = std::pow(len, g.grid.dim);
        sup = std::max(sup, std::sqrt(acc / measure));
    }
    return sup;
}

double carleson_score(const Signal& b, const FracParam& p, const PsiKernel& psi,
                      const std::vector<double>& scales, const CubeFamily& cubes) {
    return carleson_score_classical(chirp_mul(b, p, ChirpDirection::forward), psi, scales, cubes);
}

JohnNirenbergProfile john_nirenberg_profile(const Signal& b, const FracParam& p,
                                            const Cube& Q,
                                            const std::vector<double>& lambda_grid) {
    for (std::size_t i = 1; i < lambda_grid.size(); ++i)
        if (!(lambda_grid[i] > lambda_grid[i - 1]) || !(lambda_grid[i - 1] > 0.0))
            fail(ErrorCode::UsageError, "lambda grid must be positive increasing");
    Signal g = chirp_mul(b, p, ChirpDirection::forward);
    cplx avg = cube_average(g, Q);
    std::vector<double> dev;
    for_cube(g.grid, Q, [&](std::size_t i) { dev.push_back(std::abs(g.v[i] - avg)); });

    JohnNirenbergProfile prof;
    const double count = double(dev.size());
    for (double lam : lambda_grid) {
        double over = 0.0;
        for (double d : dev)
            if (d > lam) over += 1.0;
        prof.lambdas.push_back(lam);
        prof.fractions.push_back(over / count);
    }
    // regression on points with enough mass to be off the quantization floor
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < prof.lambdas.size(); ++i) {
        if (prof.fractions[i] * count > 10.0) {
            xs.push_back(prof.lambdas[i]);
            ys.push_back(std::log(prof.fractions[i]));
        }
    }
    if (xs.size() >= 3) {
        double n = double(xs.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        double denom = n * sxx - sx * sx;
        prof.slope = (n * sxy - sx * sy) / denom;
        prof.intercept = (sy - prof.slope * sx) / n;
        double ss_res = 0.0, ss_tot = 0.0, ybar = sy / n;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double pred = prof.slope * xs[i] + prof.intercept;
            ss_res += (ys[i] - pred) * (ys[i] - pred);
            ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
        }
        prof.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
        prof.pass = prof.slope < 0.0 && prof.r_squared > 0.9;
    }
    return prof;
}

double hardy_square_quasinorm(const Signal& f, const DyadicBank& bank, const FracParam& p,
                              double hardy_p) {
    if (!(hardy_p > 0.0 && hardy_p <= 1.0)) fail(ErrorCode::UsageError, "p must be in (0,1]");
    return lp_norm(square_function(f, bank, p), hardy_p);
}

namespace {

double monomial(double x, double y, int o0, int o1, int dim) {
    double v = std::pow(x, o0);
    if (dim == 2) v *= std::pow(y, o1);
    return v;
}

} // namespace

AtomReport validate_atom(const Signal& A, const Cube& Q, double p, double q,
                         const FracParam& frac) {
    if (!(p > 0.0 && p <= 1.0)) fail(ErrorCode::UsageError, "p must be in (0,1]");
    if (!(q > 1.0)) fail(ErrorCode::UsageError, "q must be in (1,inf]");
    const GridSpec& g = A.grid;
    AtomReport rep;
    rep.cube = Q;
    rep.p = p;
    rep.q = q;

    double sup = 0.0;
    for (const cplx& z : A.v) sup = std::max(sup, std::abs(z));
    double leak = 0.0;
    const int n = g.samples;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < (g.dim == 2 ? n : 1); ++b) {
            if (Q.contains(a, b, g.dim)) continue;
            std::size_t idx = g.dim == 2 ? std::size_t(a) * n + b : std::size_t(a);
            leak = std::max(leak, std::abs(A.v[idx]));
        }
    }
    rep.support_ok = leak <= 1e-12 * sup || sup == 0.0;

    double measure = std::pow(Q.length(g), g.dim);
    rep.size_norm = lp_norm(A, q);
    rep.size_bound = std::pow(measure, 1.0 / q - 1.0 / p);
    rep.size_ok = rep.size_norm <= rep.size_bound * (1.0 + 1e-10);

    int max_moment = int(std::floor(g.dim * (1.0 / p - 1.0)));
    double l1 = lp_norm(A, 1.0);
    double diam = Q.length(g) * (g.dim == 2 ? std::numbers::sqrt2 : 1.0);
    const double w = std::pow(g.dx(), g.dim);
    bool moments_ok = true;
    for (int o0 = 0; o0 <= max_moment; ++o0) {
        for (int o1 = 0; o1 <= (g.dim == 2 ? max_moment - o0 : 0); ++o1) {
            std::vector<cplx> terms;
            terms.reserve(A.size());
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < (g.dim == 2 ? n : 1); ++b) {
                    std::size_t idx = g.dim == 2 ? std::size_t(a) * n + b : std::size_t(a);
                    double x = g.coord(a);
                    double y = g.dim == 2 ? g.coord(b) : 0.0;
                    double r2 = g.dim == 2 ? x * x + y * y : x * x;
                    cplx chirp{std::cos(kPi * r2 * frac.kappa), std::sin(kPi * r2 * frac.kappa)};
                    terms.push_back(monomial(x, y, o0, o1, g.dim) * chirp * A.v[idx]);
                }
            }
            double mag = std::abs(dft::pairwise_sum(std::span<const cplx>(terms.data(), terms.size())) * w);
            double tol = 1e-8 * l1 * std::pow(diam, o0 + o1);
            rep.moments.push_back({o0, o1, mag, tol});
            if (mag > tol) moments_ok = false;
        }
    }
    rep.pass = rep.support_ok && rep.size_ok && moments_ok;
    return rep;
}

Signal synthesize_atom(const GridSpec& grid, const Cube& Q, double p, double q,
                       const FracParam& frac, std::uint64_t seed) {
    if (!(p > 0.0 && p <= 1.0)) fail(ErrorCode::UsageError, "p must be in (0,1]");
    int max_moment = int(std::floor(grid.dim * (1.0 / p - 1.0)));
    // count monomials
    int n_mom = 0;
    for (int o0 = 0; o0 <= max_moment; ++o0)
        n_mom += grid.dim == 2 ? (max_moment - o0 + 1) : 1;
    std::size_t cube_sz = grid.dim == 1 ? std::size_t(Q.side) : std::size_t(Q.side) * Q.side;
    if (cube_sz <= std::size_t(n_mom) + 1)
        fail(ErrorCode::CubeTooSmall, "cube has too few samples for the moment projection");

    // random bump on Q
    Rng rng(seed);
    Signal a(grid);
    const int n = grid.samples;
    for_cube(grid, Q, [&](std::size_t i) { a.v[i] = rng.cgauss(); });
    // taper to the cube interior so the support is strict
    // (values at the boundary samples stay in-cube by construction)

    // project out monomials in local coordinates (orthogonalize within Q)
    const double w = std::pow(grid.dx(), grid.dim);
    double mid0 = grid.coord(Q.offset0) + Q.length(grid) / 2.0;
    double mid1 = grid.dim == 2 ? grid.coord(Q.offset1) + Q.length(grid) / 2.0 : 0.0;
    double half = Q.length(grid) / 2.0;
    std::vector<std::vector<cplx>> basis;
    for (int o0 = 0; o0 <= max_moment; ++o0) {
        for (int o1 = 0; o1 <= (grid.dim == 2 ? max_moment - o0 : 0); ++o1) {
            std::vector<cplx> vec(grid.size(), cplx{0.0, 0.0});
            for (int aa = 0; aa < n; ++aa) {
                for (int bb = 0; bb < (grid.dim == 2 ? n : 1); ++bb) {
                    if (!Q.contains(aa, bb, grid.dim)) continue;
                    std::size_t idx = grid.dim == 2 ? std::size_t(aa) * n + bb : std::size_t(aa);
                    double lx = (grid.coord(aa) - mid0) / half;
                    double ly = grid.dim == 2 ? (grid.coord(bb) - mid1) / half : 0.0;
                    vec[idx] = cplx{monomial(lx, ly, o0, o1, grid.dim), 0.0};
                }
            }
            basis.push_back(std::move(vec));
        }
    }
    // Gram-Schmidt on the basis, then subtract projections
    auto inner = [&](const std::vector<cplx>& u, const std::vector<cplx>& v) {
        std::vector<cplx> t(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) t[i] = std::conj(u[i]) * v[i];
        return dft::pairwise_sum(std::span<const cplx>(t.data(), t.size())) * w;
    };
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            cplx c = inner(basis[j], basis[i]);
            for (std::size_t t = 0; t < basis[i].size(); ++t) basis[i][t] -= c * basis[j][t];
        }
        double nn = std::sqrt(std::abs(inner(basis[i], basis[i]).real()));
        if (nn > 0.0)
            for (auto& z : basis[i]) z /= nn;
    }
    for (const auto& e : basis) {
        cplx c = inner(e, a.v);
        for (std::size_t t = 0; t < a.v.size(); ++t) a.v[t] -= c * e[t];
    }

    // normalize to the size condition with a hair of slack
    double target = std::pow(std::pow(Q.length(grid), grid.dim), 1.0 / q - 1.0 / p);
    double nq = lp_norm(a, q);
    if (nq == 0.0) fail(ErrorCode::CubeTooSmall, "projection annihilated the bump");
    double scale = target * (1.0 - 1e-12) / nq;
    for (auto& z : a.v) z *= scale;

    // chirp-conjugate: A = M^{-1} a
    return chirp_mul(a, frac, ChirpDirection::inverse);
}

StabilityScores stability_scores(const Signal& b, const FracParam& p, double r,
                                 const PsiKernel& psi, const CubeFamily& cubes,
                                 const ScoreBand& band) {
    StabilityScores s;
    s.r = r;
    auto scales = dyadic_scales(b.grid);
    s.omega_r = bmo_alpha_norm(b, cubes, p, r);
    s.carleson = carleson_score(b, p, psi, scales, cubes);
    Signal sm = sharp_maximal(b, cubes, p);
    s.sharpmax = lp_norm(sm, std::numeric_limits<double>::infinity());
    s.psi_nondegeneracy = psi_nondegeneracy(psi, b.grid, scales);
    auto ratio = [](double x, double y) {
        if (y == 0.0) return x == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
        return x / y;
    };
    s.ratio_omega_carleson = ratio(s.omega_r, s.carleson);
    s.ratio_omega_sharp = ratio(s.omega_r, s.sharpmax);
    s.ratio_carleson_sharp = ratio(s.carleson, s.sharpmax);
    auto in_band = [&](double v) {
        return v >= band.lo && v <= band.hi;
    };
    bool degenerate = s.omega_r == 0.0 && s.carleson == 0.0 && s.sharpmax == 0.0;
    s.within_band = degenerate || (in_band(s.ratio_omega_carleson) && in_band(s.ratio_omega_sharp) &&
                                   in_band(s.ratio_carleson_sharp));
    return s;
}

double spearman_rank_correlation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2) fail(ErrorCode::UsageError, "bad rank inputs");
    auto ranks = [](const std::vector<double>& v) {
        std::vector<std::size_t> idx(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return v[x] < v[y]; });
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < idx.size(); ++i) r[idx[i]] = double(i);
        return r;
    };
    auto ra = ranks(a);
    auto rb = ranks(b);
    double n = double(a.size());
    double mean = (n - 1.0) / 2.0;
    double num = 0.0, da = 0.0, db = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (ra[i] - mean) * (rb[i] - mean);
        da += (ra[i] - mean) * (ra[i] - mean);
        db += (rb[i] - mean) * (rb[i] - mean);
    }
    return num / std::sqrt(da * db);
}

} // namespace frlp
