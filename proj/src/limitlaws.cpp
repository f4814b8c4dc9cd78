#include "frlp/limitlaws.hpp"

#include <cmath>
#include <numbers>

#include "frlp/dft.hpp"
#include "frlp/multiplier.hpp"

namespace frlp {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::classical: return "classical";
        case Regime::effective_fractional: return "effective_fractional";
        case Regime::warning: return "warning";
    }
    return "?";
}

Regime classify_regime(const FracParam& p, const RegimeConfig& cfg) {
    if (!(cfg.delta1 > 0.0 && cfg.delta1 < cfg.delta2))
        fail(ErrorCode::UsageError, "need 0 < delta1 < delta2");
    if (!(cfg.s_min > 0.0 && cfg.s_min < 1.0))
        fail(ErrorCode::UsageError, "need s_min in (0,1)");
    if (p.deviation <= cfg.delta1) return Regime::classical;
    if (p.deviation >= cfg.delta2 || p.s < cfg.s_min) return Regime::warning;
    return Regime::effective_fractional;
}

namespace {

double rel_l2(const Signal& a, const Signal& b, double ref) {
    Signal d(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) d.v[i] = a.v[i] - b.v[i];
    return lp_norm(d, 2.0) / ref;
}

// nonincreasing after at most `transient` entries, with floor slack
bool tail_nonincreasing(const std::vector<double>& errs, int transient, double floor_abs) {
    for (std::size_t i = std::size_t(transient); i + 1 < errs.size(); ++i)
        if (errs[i + 1] > errs[i] * 1.05 + floor_abs) return false;
    return true;
}

} // namespace

ConvergenceProfile classical_limit_profile(const Signal& f, const DyadicBank& bank,
                                           const Symbol& m, int block_level, int ell_max,
                                           double final_tol) {
    ConvergenceProfile prof;
    prof.law = "classical_limit";
    const double ref = lp_norm(f, 2.0);
    Signal block_ref = lp_block(f, bank, block_level);
    Signal square_ref = square_function(f, bank);
    Signal mult_ref = apply_multiplier(m, f);

    std::vector<double> block_errs;
    for (int ell = 1; ell <= ell_max; ++ell) {
        double alpha = std::numbers::pi / 2.0 + std::ldexp(1.0, -ell);
        FracParam p = frac_param(alpha);
        ProfileRow row;
        row.ell = ell;
        row.alpha = alpha;
        row.s = p.s;
        row.kappa = p.kappa;
        row.deviation = p.deviation;
        row.sampling_ok = validate_sampling(f.grid, p).ok;
        row.block_err = rel_l2(lp_block(f, bank, block_level, p), block_ref, ref);
        row.square_err = rel_l2(square_function(f, bank, p), square_ref, ref);
        row.multiplier_err =
            rel_l2(apply_frft_multiplier(m, f, p, MultiplierRoute::conjugation), mult_ref, ref);
        prof.rows.push_back(row);
        block_errs.push_back(std::max({row.block_err, row.square_err, row.multiplier_err}));
    }
    double final_err = block_errs.back();
    bool mono = tail_nonincreasing(block_errs, 2, 1e-13);
    prof.pass = final_err < final_tol && mono;
    prof.detail = "final=" + std::to_string(final_err) + (mono ? " tail-nonincreasing" : " tail-violation");
    return prof;
}

ConvergenceProfile singular_boundary_profile(const Signal& f, const Symbol& profile,
                                             double R, int ell_max, double final_tol) {
    ConvergenceProfile prof;
    prof.law = "singular_boundary";
    const double ref = lp_norm(f, 2.0);
    FreqPoint origin{{0.0, 0.0}, f.grid.dim};
    cplx phi0 = profile.eval(origin);
    Signal target(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) target.v[i] = phi0 * f.v[i];

    std::vector<double> errs;
    for (int ell = 1; ell <= ell_max; ++ell) {
        double alpha = std::ldexp(1.0, -ell);
        FracParam p = frac_param(alpha);
        ProfileRow row;
        row.ell = ell;
        row.alpha = alpha;
        row.s = p.s;
        row.kappa = p.kappa;
        row.deviation = p.deviation;
        row.sampling_ok = validate_sampling(f.grid, p).ok;
        Signal sel = band_selector(profile, R, f, p);
        row.selector_err = rel_l2(sel, target, ref);
        // passband centroid of the rescaled symbol on the positive grid axis
        {
            const GridSpec& g = f.grid;
            double num = 0.0, den = 0.0;
            for (int i = 0; i < g.samples; ++i) {
                double xi = g.freq(i);
                if (xi <= 0.0) continue;
                FreqPoint q{{p.sin_alpha * xi / R, 0.0}, 1};
                double v = std::norm(profile.eval(q));
                num += xi * v;
                den += v;
            }
            row.passband_center = den > 1e-12 ? num / den : 0.0;
        }
        prof.rows.push_back(row);
        errs.push_back(row.selector_err);
    }
    bool mono = tail_nonincreasing(errs, 2, 1e-13);
    prof.pass = errs.back() < final_tol && mono;
    prof.detail = "final=" + std::to_string(errs.back()) + (mono ? " tail-nonincreasing" : " tail-violation");
    return prof;
}

} // namespace frlp
