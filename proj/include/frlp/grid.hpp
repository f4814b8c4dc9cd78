#pragma once

// Uniform periodic sampling grids, signals, spectra and the fractional
// parameter descriptors. Everything here is a plain value type; operations
// are pure.

#include <complex>
#include <cstddef>
#include <vector>

#include "frlp/errors.hpp"

namespace frlp {

using cplx = std::complex<double>;

struct GridSpec {
    int dim = 1;        // 1 or 2
    double extent = 1;  // physical period L per axis
    int samples = 8;    // N per axis, even

    double dx() const { return extent / samples; }
    double dxi() const { return 1.0 / extent; }
    double nyquist() const { return samples / (2.0 * extent); }
    std::size_t size() const {
        return dim == 1 ? std::size_t(samples)
                        : std::size_t(samples) * std::size_t(samples);
    }
    // k, m run over storage indices 0..N-1; centered offsets are k - N/2.
    double coord(int k) const { return (k - samples / 2) * dx(); }
    double freq(int m) const { return (m - samples / 2) * dxi(); }

    bool operator==(const GridSpec& o) const {
        return dim == o.dim && extent == o.extent && samples == o.samples;
    }
};

GridSpec make_grid(int dim, double extent, int samples);

struct Signal {
    GridSpec grid;
    std::vector<cplx> v;

    Signal() = default;
    explicit Signal(const GridSpec& g) : grid(g), v(g.size(), cplx{0.0, 0.0}) {}
    Signal(const GridSpec& g, std::vector<cplx> vals);

    std::size_t size() const { return v.size(); }
    // row-major for dim=2: index = i0 * N + i1
    cplx& at(int i0, int i1 = 0) {
        return v[std::size_t(i0) * (grid.dim == 2 ? grid.samples : 1) + std::size_t(grid.dim == 2 ? i1 : 0)];
    }
    const cplx& at(int i0, int i1 = 0) const {
        return v[std::size_t(i0) * (grid.dim == 2 ? grid.samples : 1) + std::size_t(grid.dim == 2 ? i1 : 0)];
    }
};

// Spectra share the representation; values are indexed by centered
// frequencies (fftshift layout is canonical).
struct Spectrum {
    GridSpec grid;
    std::vector<cplx> v;

    Spectrum() = default;
    explicit Spectrum(const GridSpec& g) : grid(g), v(g.size(), cplx{0.0, 0.0}) {}
    Spectrum(const GridSpec& g, std::vector<cplx> vals);

    std::size_t size() const { return v.size(); }
};

struct FracParam {
    double alpha = 0.0;
    double sin_alpha = 0.0;   // signed sin(alpha)
    double s = 0.0;           // |sin(alpha)|
    double kappa = 0.0;       // cot(alpha)
    double deviation = 0.0;   // D(alpha) = |1 - s| + |kappa|
};

// Requires |sin(alpha)| > 1e-12, else AngleSingular.
FracParam frac_param(double alpha);

// R_eff = R / s_alpha.
double effective_radius(const FracParam& p, double R);

// Riemann-sum L^p norm with weight dx^dim; p in (0, inf], p=inf is the max.
double lp_norm(const Signal& f, double p);
double lp_norm_values(const std::vector<cplx>& v, double weight, double p);

// Exact discrete weak-L^p functional: sup over levels of
// lambda * |{|f| >= lambda}|^{1/p}.
double weak_norm_estimate(const Signal& f, double p);

// Relative magnitude of the largest boundary sample; periodization
// diagnostic reported by the CLI.
double boundary_residual(const Signal& f);

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

} // namespace frlp
