#include "frlp/lp.hpp"

#include <cmath>

#include "frlp/dft.hpp"
#include "frlp/multiplier.hpp"

namespace frlp {

namespace {

std::vector<double> sample_radial(const GridSpec& g, const std::function<double(double)>& f) {
    const int n = g.samples;
    std::vector<double> out(g.size());
    if (g.dim == 1) {
        for (int i = 0; i < n; ++i) out[std::size_t(i)] = f(std::abs(g.freq(i)));
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                out[std::size_t(a) * n + b] = f(std::hypot(g.freq(a), g.freq(b)));
    }
    return out;
}

Signal mask_multiplier(const Signal& f, const std::vector<double>& mask) {
    Spectrum S = grid_fourier(f);
    for (std::size_t i = 0; i < S.v.size(); ++i) S.v[i] *= mask[i];
    return grid_inverse_fourier(S);
}

Signal maybe_conjugated_mask(const Signal& f, const std::vector<double>& mask,
                             const std::optional<FracParam>& p) {
    if (!p) return mask_multiplier(f, mask);
    Signal g = chirp_mul(f, *p, ChirpDirection::forward);
    Signal h = mask_multiplier(g, mask);
    return chirp_mul(h, *p, ChirpDirection::inverse);
}

} // namespace

DyadicBank::FrameBounds DyadicBank::frame_bounds() const {
    const int n = grid.samples;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double rmin = std::ldexp(1.0, jmin);
    double rmax = std::ldexp(1.0, jmax);
    auto visit = [&](double r, std::size_t idx) {
        if (r < rmin || r > rmax) return;
        double s2 = 0.0;
        for (const auto& mask : phi) s2 += mask[idx] * mask[idx];
        double v = std::sqrt(s2);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    };
    if (grid.dim == 1) {
        for (int i = 0; i < n; ++i) visit(std::abs(grid.freq(i)), std::size_t(i));
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                visit(std::hypot(grid.freq(a), grid.freq(b)), std::size_t(a) * n + b);
    }
    if (!std::isfinite(lo)) lo = 0.0;
    return {lo, hi};
}

DyadicBank build_bank(const GridSpec& grid, int jmin, int jmax,
                      BankNormalization normalization) {
    if (jmin > jmax) fail(ErrorCode::UsageError, "jmin > jmax");
    if (std::ldexp(1.0, jmax + 1) > grid.nyquist() * (1.0 + 1e-12))
        fail(ErrorCode::RangeExceedsNyquist,
             "level " + std::to_string(jmax) + " support exceeds the grid Nyquist");
    DyadicBank bank;
    bank.grid = grid;
    bank.jmin = jmin;
    bank.jmax = jmax;
    bank.normalization = normalization;
    bank.chi = sample_radial(grid, [](double r) { return theta_profile(r); });
    for (int j = jmin; j <= jmax; ++j) {
        double hi = std::ldexp(1.0, j);
        double lo = std::ldexp(1.0, j - 1);
        bank.phi.push_back(sample_radial(grid, [hi, lo](double r) {
            return theta_profile(r / hi) - theta_profile(r / lo);
        }));
    }
    if (normalization == BankNormalization::sum_squares) {
        // divide each mask by sqrt(sum phi^2) wherever the sum is positive
        std::vector<double> s2(grid.size(), 0.0);
        for (const auto& mask : bank.phi)
            for (std::size_t i = 0; i < s2.size(); ++i) s2[i] += mask[i] * mask[i];
        for (auto& mask : bank.phi)
            for (std::size_t i = 0; i < s2.size(); ++i)
                if (s2[i] > 0.0) mask[i] /= std::sqrt(s2[i]);
    }
    return bank;
}

Signal lp_block(const Signal& f, const DyadicBank& bank, int j,
                const std::optional<FracParam>& p) {
    require_same_grid(f.grid, bank.grid, "bank grid mismatch");
    if (!bank.has_level(j)) fail(ErrorCode::UsageError, "level outside bank range");
    return maybe_conjugated_mask(f, bank.level(j), p);
}

Signal lowpass_block(const Signal& f, const DyadicBank& bank,
                     const std::optional<FracParam>& p) {
    require_same_grid(f.grid, bank.grid, "bank grid mismatch");
    return maybe_conjugated_mask(f, bank.chi, p);
}

Signal square_function(const Signal& f, const DyadicBank& bank,
                       const std::optional<FracParam>& p) {
    require_same_grid(f.grid, bank.grid, "bank grid mismatch");
    Signal acc(f.grid);
    for (int j = bank.jmin; j <= bank.jmax; ++j) {
        Signal blk = lp_block(f, bank, j, p);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc.v[i] += cplx{std::norm(blk.v[i]), 0.0};
    }
    for (auto& z : acc.v) z = cplx{std::sqrt(z.real()), 0.0};
    return acc;
}

Signal sharp_block(const Signal& f, int j, const std::optional<FracParam>& p) {
    if (f.grid.dim != 1) fail(ErrorCode::DimUnsupported, "sharp blocks are 1-d");
    const int n = f.grid.samples;
    double lo = std::ldexp(1.0, j);
    double hi = std::ldexp(1.0, j + 1);
    std::vector<double> mask(std::size_t(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double xi = f.grid.freq(i);
        bool in = (xi >= lo && xi < hi) || (xi > -hi && xi <= -lo);
        mask[std::size_t(i)] = in ? 1.0 : 0.0;
    }
    return maybe_conjugated_mask(f, mask, p);
}

Decomposition decompose(const Signal& f, const DyadicBank& bank,
                        const std::optional<FracParam>& p, bool homogeneous) {
    Decomposition dec;
    dec.input = f;
    dec.frac = p;
    if (!homogeneous) dec.lowpass = lowpass_block(f, bank, p);
    int jlo = homogeneous ? bank.jmin : std::max(bank.jmin, 1);
    for (int j = jlo; j <= bank.jmax; ++j)
        dec.blocks.emplace_back(j, lp_block(f, bank, j, p));
    return dec;
}

Reconstruction reconstruct(const Decomposition& dec) {
    Reconstruction rec;
    rec.sum = Signal(dec.input.grid);
    if (dec.lowpass)
        for (std::size_t i = 0; i < rec.sum.size(); ++i) rec.sum.v[i] += dec.lowpass->v[i];
    for (const auto& [j, blk] : dec.blocks) {
        (void)j;
        for (std::size_t i = 0; i < rec.sum.size(); ++i) rec.sum.v[i] += blk.v[i];
    }
    Signal diff(dec.input.grid);
    for (std::size_t i = 0; i < diff.size(); ++i) diff.v[i] = rec.sum.v[i] - dec.input.v[i];
    rec.residual_l2 = lp_norm(diff, 2.0);
    double ref = lp_norm(dec.input, 2.0);
    rec.residual_rel = ref > 0.0 ? rec.residual_l2 / ref : rec.residual_l2;
    return rec;
}

namespace {

double sequence_lq(const std::vector<double>& terms, double q) {
    if (std::isinf(q)) {
        double m = 0.0;
        for (double t : terms) m = std::max(m, t);
        return m;
    }
    std::vector<double> pw(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) pw[i] = std::pow(terms[i], q);
    return std::pow(dft::pairwise_sum(pw), 1.0 / q);
}

} // namespace

NormReport besov_norm(const Signal& f, const DyadicBank& bank, double s, double p,
                      double q, const std::optional<FracParam>& frac) {
    if (!(q > 0.0)) fail(ErrorCode::UsageError, "q must be positive");
    NormReport rep;
    rep.space = "besov";
    rep.lowpass_term = lp_norm(lowpass_block(f, bank, frac), p);
    std::vector<double> terms;
    for (int j = std::max(bank.jmin, 1); j <= bank.jmax; ++j) {
        double w = std::pow(2.0, double(j) * s);
        double bn = lp_norm(lp_block(f, bank, j, frac), p);
        rep.levels.push_back({j, w, bn});
        terms.push_back(w * bn);
    }
    rep.value = rep.lowpass_term + sequence_lq(terms, q);
    return rep;
}

NormReport triebel_norm(const Signal& f, const DyadicBank& bank, double s, double p,
                        double q, const std::optional<FracParam>& frac) {
    if (!(q > 0.0)) fail(ErrorCode::UsageError, "q must be positive");
    NormReport rep;
    rep.space = "triebel";
    rep.lowpass_term = lp_norm(lowpass_block(f, bank, frac), p);
    // pointwise l^q aggregation of 2^{js} |Delta_j f|
    std::vector<double> agg(f.size(), 0.0);
    bool qinf = std::isinf(q);
    for (int j = std::max(bank.jmin, 1); j <= bank.jmax; ++j) {
        double w = std::pow(2.0, double(j) * s);
        Signal blk = lp_block(f, bank, j, frac);
        rep.levels.push_back({j, w, lp_norm(blk, p)});
        for (std::size_t i = 0; i < agg.size(); ++i) {
            double t = w * std::abs(blk.v[i]);
            agg[i] = qinf ? std::max(agg[i], t) : agg[i] + std::pow(t, q);
        }
    }
    Signal inner(f.grid);
    for (std::size_t i = 0; i < agg.size(); ++i)
        inner.v[i] = cplx{qinf ? agg[i] : std::pow(agg[i], 1.0 / q), 0.0};
    rep.value = rep.lowpass_term + lp_norm(inner, p);
    return rep;
}

NormReport lipschitz_norm(const Signal& f, const DyadicBank& bank, double gamma,
                          LipschitzVariant variant,
                          const std::optional<FracParam>& frac) {
    if (!(gamma > 0.0)) fail(ErrorCode::UsageError, "gamma must be positive");
    NormReport rep;
    rep.space = variant == LipschitzVariant::homogeneous ? "lipschitz_hom" : "lipschitz_inh";
    double sup = 0.0;
    int jlo = variant == LipschitzVariant::homogeneous ? bank.jmin : std::max(bank.jmin, 1);
    for (int j = jlo; j <= bank.jmax; ++j) {
        double w = std::pow(2.0, double(j) * gamma);
        double bn = lp_norm(lp_block(f, bank, j, frac), std::numeric_limits<double>::infinity());
        rep.levels.push_back({j, w, bn});
        sup = std::max(sup, w * bn);
    }
    if (variant == LipschitzVariant::inhomogeneous) {
        rep.lowpass_term =
            lp_norm(lowpass_block(f, bank, frac), std::numeric_limits<double>::infinity());
        rep.value = rep.lowpass_term + sup;
    } else {
        rep.value = sup;
    }
    return rep;
}

double order_shift_ratio(const Signal& f, const DyadicBank& bank, double gamma,
                         double sigma, LipschitzVariant variant) {
    if (!(sigma > 0.0 && sigma < gamma))
        fail(ErrorCode::UsageError, "need 0 < sigma < gamma");
    // |D|^sigma (homogeneous) or <D>^sigma (inhomogeneous)
    Symbol deriv = variant == LipschitzVariant::homogeneous
                       ? Symbol{[sigma](const FreqPoint& q) {
                                    double r = q.radius();
                                    return cplx{r == 0.0 ? 0.0 : std::pow(r, sigma), 0.0};
                                },
                                "homog_deriv"}
                       : Symbol{[sigma](const FreqPoint& q) {
                                    double r = q.radius();
                                    return cplx{std::pow(1.0 + r * r, sigma / 2.0), 0.0};
                                },
                                "inhomog_deriv"};
    Signal df = apply_multiplier(deriv, f);
    double num = lipschitz_norm(f, bank, gamma, variant).value;
    double den = lipschitz_norm(df, bank, gamma - sigma, variant).value;
    if (den == 0.0) fail(ErrorCode::UsageError, "derivative norm vanished");
    return num / den;
}

} // namespace frlp
