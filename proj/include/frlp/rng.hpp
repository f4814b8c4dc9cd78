#pragma once

// Deterministic random generation. std::mt19937_64 raw output is fully
// specified by the standard; the distributions here are hand-rolled so the
// streams are bit-identical across platforms and compilers.

#include <cstdint>
#include <random>
#include <string>

#include "frlp/grid.hpp"

namespace frlp {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    double uniform01() {
        // 53-bit mantissa in [0,1)
        return double(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double gauss();

    cplx cgauss() {
        double re = gauss();
        double im = gauss();
        return {re, im};
    }

    int index(int n) { return int(eng_() % std::uint64_t(n)); }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stable 64-bit FNV-1a over bytes; used for per-entry seed mixing and input
// digests in certificates.
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag);

// ---- test-signal factory ----

// exp(-pi ((x-center)/sigma)^2) * exp(2 pi i mod_freq x), per axis in 2-d.
Signal gen_gaussian(const GridSpec& g, double sigma, double center = 0.0, double mod_freq = 0.0);

// Linear chirp: exp(i pi rate x^2) with gaussian envelope.
Signal gen_chirp(const GridSpec& g, double rate, double sigma);

// C-infinity bump supported on |x - center| < radius.
Signal gen_bump(const GridSpec& g, double radius, double center = 0.0);

// Random trigonometric polynomial with |freq| <= band under a gaussian
// envelope; spectrum is smooth and concentrated, suitable for transform tests.
Signal gen_random_bandlimited(const GridSpec& g, double band, double sigma, Rng& rng);

// Log-singularity oscillation signal for the BMO-type corpus.
Signal gen_log_bmo(const GridSpec& g, double center, double eps, double amp = 1.0);

} // namespace frlp
