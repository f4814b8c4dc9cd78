#include "frlp/rng.hpp"

#include <cmath>
#include <numbers>

namespace frlp {

namespace {
constexpr double kPi = std::numbers::pi;
}

double Rng::gauss() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on the hand-rolled uniforms
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = fnv1a(tag.data(), tag.size());
    return fnv1a(&seed, sizeof(seed), h);
}

namespace {

template <typename Fn>
Signal from_profile(const GridSpec& g, Fn&& f1d) {
    Signal out(g);
    const int n = g.samples;
    if (g.dim == 1) {
        for (int k = 0; k < n; ++k) out.v[std::size_t(k)] = f1d(g.coord(k));
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                out.v[std::size_t(a) * n + b] = f1d(g.coord(a)) * f1d(g.coord(b));
    }
    return out;
}

} // namespace

Signal gen_gaussian(const GridSpec& g, double sigma, double center, double mod_freq) {
    return from_profile(g, [&](double x) -> cplx {
        double u = (x - center) / sigma;
        double env = std::exp(-kPi * u * u);
        double ph = 2.0 * kPi * mod_freq * x;
        return cplx{env * std::cos(ph), env * std::sin(ph)};
    });
}

Signal gen_chirp(const GridSpec& g, double rate, double sigma) {
    return from_profile(g, [&](double x) -> cplx {
        double env = std::exp(-kPi * (x / sigma) * (x / sigma));
        double ph = kPi * rate * x * x;
        return cplx{env * std::cos(ph), env * std::sin(ph)};
    });
}

Signal gen_bump(const GridSpec& g, double radius, double center) {
    return from_profile(g, [&](double x) -> cplx {
        double u = (x - center) / radius;
        if (std::abs(u) >= 1.0) return {0.0, 0.0};
        return cplx{std::exp(-1.0 / (1.0 - u * u)) * std::numbers::e, 0.0};
    });
}

Signal gen_random_bandlimited(const GridSpec& g, double band, double sigma, Rng& rng) {
    // a few random modes below the band edge, then a gaussian envelope
    const int modes = 7;
    std::vector<double> freqs(modes);
    std::vector<cplx> coef(modes);
    for (int t = 0; t < modes; ++t) {
        freqs[std::size_t(t)] = rng.uniform(-band, band);
        coef[std::size_t(t)] = rng.cgauss();
    }
    return from_profile(g, [&](double x) -> cplx {
        cplx acc{0.0, 0.0};
        for (int t = 0; t < modes; ++t) {
            double ph = 2.0 * kPi * freqs[std::size_t(t)] * x;
            acc += coef[std::size_t(t)] * cplx{std::cos(ph), std::sin(ph)};
        }
        double u = x / sigma;
        return acc * std::exp(-kPi * u * u);
    });
}

Signal gen_log_bmo(const GridSpec& g, double center, double eps, double amp) {
    return from_profile(g, [&](double x) -> cplx {
        return cplx{amp * std::log(std::abs(x - center) + eps), 0.0};
    });
}

} // namespace frlp
