#include "frlp/frft.hpp"

#include <cmath>
#include <numbers>

#include "frlp/dft.hpp"

namespace frlp {

namespace {

constexpr double kPi = std::numbers::pi;

cplx unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Apply a 1-d transform to every axis line of a (possibly 2-d) array.
template <typename Fn>
void for_each_line(std::vector<cplx>& v, int dim, int n, Fn&& fn) {
    if (dim == 1) {
        fn(std::span<cplx>(v.data(), std::size_t(n)), 1);
        return;
    }
    // axis 1 (contiguous rows)
    for (int r = 0; r < n; ++r)
        fn(std::span<cplx>(v.data() + std::size_t(r) * n, std::size_t(n)), 1);
    // axis 0 (strided columns)
    for (int c = 0; c < n; ++c)
        fn(std::span<cplx>(v.data() + c, std::size_t(n) * n - c), n);
}

std::vector<cplx> gather(std::span<cplx> line, int stride, int n) {
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[std::size_t(i)] = line[std::size_t(i) * stride];
    return out;
}

void scatter(std::span<cplx> line, int stride, const std::vector<cplx>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i) line[i * std::size_t(stride)] = vals[i];
}

} // namespace

SamplingReport validate_sampling(const GridSpec& grid, const FracParam& p) {
    SamplingReport r;
    r.chirp_freq = std::abs(p.kappa) * grid.extent / 2.0;
    r.nyquist = grid.nyquist();
    r.ok = r.chirp_freq <= r.margin * r.nyquist * (1.0 + 1e-12);
    return r;
}

Signal chirp_mul(const Signal& f, const FracParam& p, ChirpDirection dir) {
    Signal out(f.grid);
    const int n = f.grid.samples;
    const double sign = dir == ChirpDirection::forward ? 1.0 : -1.0;
    if (f.grid.dim == 1) {
        for (int k = 0; k < n; ++k) {
            double x = f.grid.coord(k);
            out.v[std::size_t(k)] = f.v[std::size_t(k)] * unit_phase(sign * kPi * x * x * p.kappa);
        }
    } else {
        for (int a = 0; a < n; ++a) {
            double xa = f.grid.coord(a);
            for (int b = 0; b < n; ++b) {
                double xb = f.grid.coord(b);
                std::size_t idx = std::size_t(a) * n + b;
                out.v[idx] = f.v[idx] * unit_phase(sign * kPi * (xa * xa + xb * xb) * p.kappa);
            }
        }
    }
    return out;
}

Spectrum grid_fourier(const Signal& f) {
    const int n = f.grid.samples;
    const double dx = f.grid.dx();
    Spectrum out(f.grid);
    out.v = f.v;
    for_each_line(out.v, f.grid.dim, n, [&](std::span<cplx> line, int stride) {
        auto vals = gather(line, stride, n);
        auto spec = dft::dft_centered(vals, -1);
        for (auto& z : spec) z *= dx;
        scatter(line, stride, spec);
    });
    return out;
}

Signal grid_inverse_fourier(const Spectrum& F) {
    const int n = F.grid.samples;
    const double dxi = F.grid.dxi();
    Signal out(F.grid);
    out.v = F.v;
    for_each_line(out.v, F.grid.dim, n, [&](std::span<cplx> line, int stride) {
        auto vals = gather(line, stride, n);
        auto sig = dft::dft_centered(vals, +1);
        for (auto& z : sig) z *= dxi;
        scatter(line, stride, sig);
    });
    return out;
}

FrftPlan::FrftPlan(const GridSpec& grid, const FracParam& p) : grid_(grid), param_(p) {
    const double sgn = p.sin_alpha > 0 ? 1.0 : -1.0;
    c_axis_ = unit_phase(sgn * kPi / 4.0 - p.alpha / 2.0);
    const int n = grid.samples;
    chirp_in_.resize(std::size_t(n));
    chirp_out_.resize(std::size_t(n));
    for (int k = 0; k < n; ++k) {
        double x = grid.coord(k);
        chirp_in_[std::size_t(k)] = unit_phase(kPi * x * x * p.kappa);
        double xi = grid.freq(k);
        chirp_out_[std::size_t(k)] = unit_phase(kPi * xi * xi * p.kappa);
    }
}

void FrftPlan::axis_forward(std::vector<cplx>& line) const {
    const int n = grid_.samples;
    const double dx = grid_.dx();
    for (int k = 0; k < n; ++k) line[std::size_t(k)] *= chirp_in_[std::size_t(k)];
    auto T = dft::czt_centered(line, 1.0 / (double(n) * param_.sin_alpha));
    const cplx scale = c_axis_ * (1.0 / std::sqrt(param_.s)) * dx;
    for (int m = 0; m < n; ++m) line[std::size_t(m)] = scale * chirp_out_[std::size_t(m)] * T[std::size_t(m)];
}

void FrftPlan::axis_inverse(std::vector<cplx>& line) const {
    const int n = grid_.samples;
    const double dxi = grid_.dxi();
    const cplx cs = c_axis_ * (1.0 / std::sqrt(param_.s));
    for (int m = 0; m < n; ++m) line[std::size_t(m)] /= cs * chirp_out_[std::size_t(m)];
    // undo the dilation: evaluate the index-domain interpolant of the sampled
    // line at fractional positions sin(alpha) * j, then invert the grid FT
    auto yhat = dft::dft_centered(line, -1);
    auto ghat = dft::czt_centered(yhat, -param_.sin_alpha / double(n));
    for (auto& z : ghat) z /= double(n);
    auto g = dft::dft_centered(ghat, +1);
    for (int k = 0; k < n; ++k)
        line[std::size_t(k)] = g[std::size_t(k)] * dxi * std::conj(chirp_in_[std::size_t(k)]);
}

Spectrum FrftPlan::forward(const Signal& f) const {
    require_same_grid(f.grid, grid_, "frft plan grid mismatch");
    Spectrum out(grid_);
    out.v = f.v;
    const int n = grid_.samples;
    for_each_line(out.v, grid_.dim, n, [&](std::span<cplx> line, int stride) {
        auto vals = gather(line, stride, n);
        axis_forward(vals);
        scatter(line, stride, vals);
    });
    return out;
}

Signal FrftPlan::inverse(const Spectrum& F) const {
    require_same_grid(F.grid, grid_, "frft plan grid mismatch");
    Signal out(grid_);
    out.v = F.v;
    const int n = grid_.samples;
    for_each_line(out.v, grid_.dim, n, [&](std::span<cplx> line, int stride) {
        auto vals = gather(line, stride, n);
        axis_inverse(vals);
        scatter(line, stride, vals);
    });
    return out;
}

Spectrum frft(const Signal& f, const FracParam& p) {
    return FrftPlan(f.grid, p).forward(f);
}

Signal ifrft(const Spectrum& F, const FracParam& p) {
    return FrftPlan(F.grid, p).inverse(F);
}

SignalOp conjugate_operator(const SignalOp& T, const FracParam& p) {
    return [T, p](const Signal& f) {
        return chirp_mul(T(chirp_mul(f, p, ChirpDirection::forward)), p, ChirpDirection::inverse);
    };
}

} // namespace frlp
