#pragma once

// Chirp multiplier, discrete fractional Fourier transform via the
// chirp -> FFT -> chirp-z resampling factorization, and its algebraic
// inverse. The plan precomputes per-axis chirp tables and is immutable.

#include <functional>

#include "frlp/grid.hpp"

namespace frlp {

enum class ChirpDirection { forward, inverse };

struct SamplingReport {
    bool ok = true;
    double chirp_freq = 0.0;  // |kappa| * L/2
    double nyquist = 0.0;     // 1/(2 dx)
    double margin = 0.9;
};

// ok iff the chirp's maximal instantaneous frequency stays below
// margin * Nyquist.
SamplingReport validate_sampling(const GridSpec& grid, const FracParam& p);

// Pointwise multiplication by exp(+-i pi |x|^2 cot(alpha)).
Signal chirp_mul(const Signal& f, const FracParam& p, ChirpDirection dir);

// Classical grid Fourier transform (Riemann-normalized, centered layout)
// and its inverse; the alpha = pi/2 degeneration of frft.
Spectrum grid_fourier(const Signal& f);
Signal grid_inverse_fourier(const Spectrum& F);

class FrftPlan {
public:
    FrftPlan(const GridSpec& grid, const FracParam& p);

    const GridSpec& grid() const { return grid_; }
    const FracParam& param() const { return param_; }
    cplx unit_constant() const { return c_axis_; }  // per-axis c_{alpha,1}

    Spectrum forward(const Signal& f) const;
    Signal inverse(const Spectrum& F) const;

private:
    void axis_forward(std::vector<cplx>& line) const;
    void axis_inverse(std::vector<cplx>& line) const;

    GridSpec grid_;
    FracParam param_;
    cplx c_axis_;
    std::vector<cplx> chirp_in_;    // e^{i pi x_k^2 kappa} on one axis
    std::vector<cplx> chirp_out_;   // e^{i pi xi_m^2 kappa} on one axis
};

Spectrum frft(const Signal& f, const FracParam& p);
Signal ifrft(const Spectrum& F, const FracParam& p);

// T^alpha = M_alpha^{-1} T M_alpha as a callable on signals.
using SignalOp = std::function<Signal(const Signal&)>;
SignalOp conjugate_operator(const SignalOp& T, const FracParam& p);

} // namespace frlp
