#include "frlp/grid.hpp"

#include <algorithm>
#include <cmath>

#include "frlp/dft.hpp"

namespace frlp {

GridSpec make_grid(int dim, double extent, int samples) {
    if (dim != 1 && dim != 2) fail(ErrorCode::DimUnsupported, "dim must be 1 or 2");
    if (!(extent > 0.0)) fail(ErrorCode::UsageError, "extent must be positive");
    if (samples < 8) fail(ErrorCode::OddSampleCount, "need at least 8 samples per axis");
    if (samples % 2 != 0) fail(ErrorCode::OddSampleCount, "sample count must be even");
    return GridSpec{dim, extent, samples};
}

Signal::Signal(const GridSpec& g, std::vector<cplx> vals) : grid(g), v(std::move(vals)) {
    if (v.size() != g.size()) fail(ErrorCode::GridMismatch, "value count does not match grid");
    for (const cplx& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(ErrorCode::UsageError, "signal contains non-finite values");
}

Spectrum::Spectrum(const GridSpec& g, std::vector<cplx> vals) : grid(g), v(std::move(vals)) {
    if (v.size() != g.size()) fail(ErrorCode::GridMismatch, "value count does not match grid");
    for (const cplx& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(ErrorCode::UsageError, "spectrum contains non-finite values");
}

FracParam frac_param(double alpha) {
    double sa = std::sin(alpha);
    if (std::abs(sa) <= 1e-12) fail(ErrorCode::AngleSingular, "alpha is a multiple of pi");
    FracParam p;
    p.alpha = alpha;
    p.sin_alpha = sa;
    p.s = std::abs(sa);
    p.kappa = std::cos(alpha) / sa;
    p.deviation = std::abs(1.0 - p.s) + std::abs(p.kappa);
    return p;
}

double effective_radius(const FracParam& p, double R) {
    if (!(R > 0.0)) fail(ErrorCode::UsageError, "radius must be positive");
    return R / p.s;
}

double lp_norm_values(const std::vector<cplx>& v, double weight, double p) {
    if (!(p > 0.0)) fail(ErrorCode::UsageError, "p must be positive");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const cplx& z : v) m = std::max(m, std::abs(z));
        return m;
    }
    std::vector<double> terms(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        terms[i] = std::pow(std::abs(v[i]), p);
    return std::pow(weight * dft::pairwise_sum(terms), 1.0 / p);
}

double lp_norm(const Signal& f, double p) {
    double w = std::pow(f.grid.dx(), f.grid.dim);
    return lp_norm_values(f.v, w, p);
}

double weak_norm_estimate(const Signal& f, double p) {
    if (!(p >= 1.0) || std::isinf(p)) fail(ErrorCode::UsageError, "weak norm needs p in [1,inf)");
    std::vector<double> mags(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mags[i] = std::abs(f.v[i]);
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    const double cell = std::pow(f.grid.dx(), f.grid.dim);
    double best = 0.0;
    // after sorting, mags[i] has i+1 samples with |f| >= mags[i]
    for (std::size_t i = 0; i < mags.size(); ++i) {
        if (mags[i] == 0.0) break;
        double measure = cell * double(i + 1);
        best = std::max(best, mags[i] * std::pow(measure, 1.0 / p));
    }
    return best;
}

double boundary_residual(const Signal& f) {
    double peak = 0.0;
    for (const cplx& z : f.v) peak = std::max(peak, std::abs(z));
    if (peak == 0.0) return 0.0;
    const int n = f.grid.samples;
    double edge = 0.0;
    if (f.grid.dim == 1) {
        edge = std::max(std::abs(f.v.front()), std::abs(f.v.back()));
    } else {
        for (int i = 0; i < n; ++i) {
            edge = std::max(edge, std::abs(f.at(0, i)));
            edge = std::max(edge, std::abs(f.at(n - 1, i)));
            edge = std::max(edge, std::abs(f.at(i, 0)));
            edge = std::max(edge, std::abs(f.at(i, n - 1)));
        }
    }
    return edge / peak;
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
    if (!(a == b)) fail(ErrorCode::GridMismatch, what);
}

} // namespace frlp
