#pragma once

// Self-contained complex FFT machinery: power-of-two Cooley-Tukey, Bluestein
// for arbitrary lengths, and the centered chirp-z evaluation used by the
// fractional transform. All sums are evaluated in a fixed order so repeated
// runs are bit-identical.

#include <complex>
#include <span>
#include <vector>

namespace frlp::dft {

using cplx = std::complex<double>;

// In-place FFT, length must be a power of two. sign=-1 forward, +1 inverse
// (unnormalized).
void fft_pow2(std::span<cplx> data, int sign);

// Unnormalized DFT of arbitrary length: X_m = sum_k x_k exp(sign*2pi i k m/N).
// Power-of-two lengths use the radix-2 kernel, others fall back to Bluestein.
void fft_any(std::vector<cplx>& data, int sign);

// Centered chirp-z: out[i] = sum_k g_k exp(-2pi i theta k m), where
// k = j - N/2 and m = i - N/2 run over centered indices of length N.
std::vector<cplx> czt_centered(const std::vector<cplx>& g, double theta);

// Centered DFT pair: Y_mu = sum_m y_m exp(sign*2pi i mu m / N) with both
// indices centered. Exactly czt_centered with theta = -sign/N, but cheaper.
std::vector<cplx> dft_centered(const std::vector<cplx>& y, int sign);

// Pairwise (tree-order) summation helpers used by every norm/inner product.
double pairwise_sum(std::span<const double> v);
cplx pairwise_sum(std::span<const cplx> v);

} // namespace frlp::dft
