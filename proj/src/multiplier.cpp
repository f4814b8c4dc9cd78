#include "frlp/multiplier.hpp"

#include <cmath>

#include "frlp/dft.hpp"

namespace frlp {

namespace {

void check_bounded(const std::vector<cplx>& samples) {
    double mx = 0.0;
    for (const cplx& z : samples) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(ErrorCode::SymbolUnbounded, "symbol is non-finite on the grid");
        mx = std::max(mx, std::abs(z));
    }
    if (mx > 1e12) fail(ErrorCode::SymbolUnbounded, "symbol exceeds 1e12 on the grid");
}

} // namespace

Signal apply_multiplier(const Symbol& m, const Signal& f) {
    auto samples = sample_symbol(m, f.grid);
    check_bounded(samples);
    Spectrum S = grid_fourier(f);
    for (std::size_t i = 0; i < S.v.size(); ++i) S.v[i] *= samples[i];
    return grid_inverse_fourier(S);
}

Signal apply_frft_multiplier(const Symbol& m, const Signal& f, const FracParam& p,
                             MultiplierRoute route) {
    if (route == MultiplierRoute::definition) {
        auto report = validate_sampling(f.grid, p);
        if (!report.ok)
            fail(ErrorCode::ChirpAliased, "chirp frequency " + std::to_string(report.chirp_freq) +
                                              " exceeds " + std::to_string(report.margin) +
                                              " x Nyquist " + std::to_string(report.nyquist));
        auto samples = sample_symbol(m, f.grid);
        check_bounded(samples);
        Spectrum F = frft(f, p);
        for (std::size_t i = 0; i < F.v.size(); ++i) F.v[i] *= samples[i];
        return ifrft(F, p);
    }
    Symbol ms = rescale_symbol(m, p);
    Signal g = chirp_mul(f, p, ChirpDirection::forward);
    Signal h = apply_multiplier(ms, g);
    return chirp_mul(h, p, ChirpDirection::inverse);
}

Signal band_selector(const Symbol& profile, double R, const Signal& f, const FracParam& p) {
    SymbolFn base = profile.eval;
    Symbol scaled{[base, R](const FreqPoint& q) {
                      FreqPoint r = q;
                      r.v[0] /= R;
                      r.v[1] /= R;
                      return base(r);
                  },
                  "selector(" + profile.name + ")"};
    return apply_frft_multiplier(scaled, f, p, MultiplierRoute::conjugation);
}

Signal bochner_riesz(double lambda, double R, const Signal& f, const FracParam& p) {
    if (lambda < 0.0) fail(ErrorCode::UsageError, "bochner-riesz order must be >= 0");
    return apply_frft_multiplier(sym_bochner_riesz(lambda, R), f, p, MultiplierRoute::conjugation);
}

namespace {

// 4th-order central first derivative of the symbol along the 1-d axis
double sym_derivative_1d(const Symbol& m, double xi, double h) {
    auto at = [&](double q) {
        FreqPoint fp{{q, 0.0}, 1};
        return m.eval(fp);
    };
    cplx d = (-at(xi + 2 * h) + 8.0 * at(xi + h) - 8.0 * at(xi - h) + at(xi - 2 * h)) / (12.0 * h);
    return std::abs(d);
}

} // namespace

SymbolConditionReport marcinkiewicz_check(const Symbol& m, int jmin, int jmax,
                                          int quad_points,
                                          std::optional<double> user_bound) {
    if (quad_points < 4) fail(ErrorCode::UsageError, "need at least 4 quadrature points");
    SymbolConditionReport rep;
    rep.condition = "Marcinkiewicz1D";
    rep.symbol = m.name;
    rep.covering_count = 2;
    double A = 0.0;
    for (int j = jmin; j <= jmax; ++j) {
        double lo = std::ldexp(1.0, j);
        double hi = std::ldexp(1.0, j + 1);
        double dt = (hi - lo) / quad_points;
        double h = dt / 16.0;
        double var = 0.0;
        bool finite = true;
        for (int side = 0; side < 2; ++side) {
            double sgn = side == 0 ? 1.0 : -1.0;
            std::vector<double> vals(static_cast<std::size_t>(quad_points));
            for (int i = 0; i < quad_points; ++i) {
                double t = lo + (i + 0.5) * dt;
                double d = sym_derivative_1d(m, sgn * t, h);
                if (!std::isfinite(d)) finite = false;
                vals[std::size_t(i)] = d * dt;
            }
            var += dft::pairwise_sum(vals);
        }
        rep.intervals.push_back({j, finite ? var : std::nan("")});
        if (finite) A = std::max(A, var);
    }
    rep.bound = A;
    if (user_bound) rep.pass = A <= *user_bound;
    return rep;
}

int dyadic_covering_count(const FracParam& p) {
    // [s 2^j, s 2^{j+1}] spans one octave shifted by s; it meets
    // ceil(log2(1/s)) + 1 dyadic intervals.
    return int(std::ceil(std::log2(1.0 / p.s) - 1e-12)) + 1;
}

namespace {

struct AnnulusQuad {
    // master nodes on 1 <= |u| <= 2, weights for the L2 integral
    std::vector<FreqPoint> nodes;
    std::vector<double> weights;
};

AnnulusQuad master_annulus(int dim, int refine) {
    AnnulusQuad q;
    if (dim == 1) {
        int mr = 64 * refine;
        double dr = 1.0 / mr;
        for (int side = 0; side < 2; ++side) {
            double sgn = side == 0 ? 1.0 : -1.0;
            for (int i = 0; i < mr; ++i) {
                double r = 1.0 + (i + 0.5) * dr;
                q.nodes.push_back(FreqPoint{{sgn * r, 0.0}, 1});
                q.weights.push_back(dr);
            }
        }
    } else {
        int mr = 24 * refine;
        int mt = 48 * refine;
        double dr = 1.0 / mr;
        double dth = 2.0 * std::numbers::pi / mt;
        for (int i = 0; i < mr; ++i) {
            double r = 1.0 + (i + 0.5) * dr;
            for (int t = 0; t < mt; ++t) {
                double th = (t + 0.5) * dth;
                q.nodes.push_back(FreqPoint{{r * std::cos(th), r * std::sin(th)}, 2});
                q.weights.push_back(r * dr * dth);
            }
        }
    }
    return q;
}

// mixed partial derivative by nested 4th-order central stencils with
// radius-proportional step
cplx sym_partial(const Symbol& m, FreqPoint q, int bx, int by, double h) {
    if (bx > 0) {
        auto shift = [&](double d) {
            FreqPoint r = q;
            r.v[0] += d;
            return sym_partial(m, r, bx - 1, by, h);
        };
        return (-shift(2 * h) + 8.0 * shift(h) - 8.0 * shift(-h) + shift(-2 * h)) / (12.0 * h);
    }
    if (by > 0) {
        auto shift = [&](double d) {
            FreqPoint r = q;
            r.v[1] += d;
            return sym_partial(m, r, bx, by - 1, h);
        };
        return (-shift(2 * h) + 8.0 * shift(h) - 8.0 * shift(-h) + shift(-2 * h)) / (12.0 * h);
    }
    return m.eval(q);
}

} // namespace

SymbolConditionReport mihlin_check(const Symbol& m, int dim, int max_order,
                                   const std::vector<double>& annuli,
                                   int refine,
                                   std::optional<double> user_bound) {
    SymbolConditionReport rep;
    rep.condition = "MihlinHormander";
    rep.symbol = m.name;
    auto quad = master_annulus(dim, refine);
    double A = 0.0;
    for (double R : annuli) {
        SymbolConditionReport::AnnulusEntry entry;
        entry.radius = R;
        double h = R / (16.0 * 64.0);
        for (int order = 0; order <= max_order; ++order) {
            // max over the multi-indices of this total order
            double worst = 0.0;
            for (int bx = 0; bx <= order; ++bx) {
                int by = order - bx;
                if (dim == 1 && by > 0) continue;
                std::vector<double> terms(quad.nodes.size());
                for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
                    FreqPoint q = quad.nodes[i];
                    q.v[0] *= R;
                    q.v[1] *= R;
                    cplx d = sym_partial(m, q, bx, by, h);
                    // scale weights by R^dim for the dilated annulus measure
                    terms[i] = std::norm(d) * quad.weights[i] * std::pow(R, dim);
                }
                double l2 = std::sqrt(dft::pairwise_sum(terms));
                worst = std::max(worst, l2 / std::pow(R, dim / 2.0 - order));
            }
            entry.ratio_by_order.push_back(worst);
            A = std::max(A, worst);
        }
        rep.annuli.push_back(std::move(entry));
    }
    rep.bound = A;
    if (user_bound) rep.pass = A <= *user_bound;
    return rep;
}

Signal conjugated_multiplier(const Symbol& m, const Signal& f, const FracParam& p) {
    Signal g = chirp_mul(f, p, ChirpDirection::forward);
    return chirp_mul(apply_multiplier(m, g), p, ChirpDirection::inverse);
}

Signal maximal_over_family(const std::vector<Symbol>& family, const Signal& f,
                           const FracParam& p) {
    Signal out(f.grid);
    for (const Symbol& m : family) {
        Signal t = conjugated_multiplier(m, f, p);
        for (std::size_t i = 0; i < out.size(); ++i)
            out.v[i] = cplx{std::max(out.v[i].real(), std::abs(t.v[i])), 0.0};
    }
    return out;
}

Signal rough_square_function(const std::vector<Symbol>& family, const Signal& f,
                             const FracParam& p) {
    Signal acc(f.grid);
    for (const Symbol& m : family) {
        Signal t = conjugated_multiplier(m, f, p);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc.v[i] += cplx{std::norm(t.v[i]), 0.0};
    }
    for (auto& z : acc.v) z = cplx{std::sqrt(z.real()), 0.0};
    return acc;
}

AlmostOrthogonalReport almost_orthogonal_sum(const std::vector<AnnulusSymbol>& family,
                                             const Signal& f, const FracParam& p,
                                             double q) {
    // validate supports on the grid
    for (const auto& [level, sym] : family) {
        auto samples = sample_symbol(sym, f.grid);
        double mx = 0.0;
        for (const cplx& z : samples) mx = std::max(mx, std::abs(z));
        double lo = std::ldexp(1.0, level - 1);
        double hi = std::ldexp(1.0, level + 1);
        const int n = f.grid.samples;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < (f.grid.dim == 2 ? n : 1); ++b) {
                FreqPoint fp{{f.grid.freq(a), f.grid.dim == 2 ? f.grid.freq(b) : 0.0}, f.grid.dim};
                double r = fp.radius();
                std::size_t idx = f.grid.dim == 2 ? std::size_t(a) * n + b : std::size_t(a);
                if ((r < lo || r > hi) && std::abs(samples[idx]) > 1e-12 * mx)
                    fail(ErrorCode::SupportViolation,
                         sym.name + " leaks outside its dyadic annulus at level " +
                             std::to_string(level));
            }
        }
    }
    AlmostOrthogonalReport rep;
    rep.total = Signal(f.grid);
    double prev = 0.0;
    for (const auto& [level, sym] : family) {
        (void)level;
        Signal t = conjugated_multiplier(sym, f, p);
        rep.term_l2.push_back(lp_norm(t, q));
        for (std::size_t i = 0; i < t.size(); ++i) rep.total.v[i] += t.v[i];
        double now = lp_norm(rep.total, q);
        rep.cauchy_increment.push_back(std::abs(now - prev));
        prev = now;
    }
    return rep;
}

Signal vector_valued_aggregate(const std::vector<Symbol>& symbols,
                               const std::vector<Signal>& fs, const FracParam& p) {
    if (symbols.size() != fs.size())
        fail(ErrorCode::UsageError, "family sizes differ");
    if (fs.empty()) fail(ErrorCode::UsageError, "empty family");
    Signal acc(fs.front().grid);
    for (std::size_t k = 0; k < fs.size(); ++k) {
        require_same_grid(fs[k].grid, acc.grid, "vector aggregate grids differ");
        Signal t = conjugated_multiplier(symbols[k], fs[k], p);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc.v[i] += cplx{std::norm(t.v[i]), 0.0};
    }
    for (auto& z : acc.v) z = cplx{std::sqrt(z.real()), 0.0};
    return acc;
}

} // namespace frlp
