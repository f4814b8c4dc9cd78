#include "frlp/dft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace frlp::dft {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// Twiddle tables are shared across calls; building them is the only
// synchronized step.
const std::vector<cplx>& twiddles(std::size_t n) {
    static std::map<std::size_t, std::vector<cplx>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cplx> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        double a = -2.0 * kPi * double(k) / double(n);
        w[k] = {std::cos(a), std::sin(a)};
    }
    return cache.emplace(n, std::move(w)).first->second;
}

} // namespace

void fft_pow2(std::span<cplx> data, int sign) {
    const std::size_t n = data.size();
    if (n <= 1) return;
    if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: length not a power of two");

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    const auto& w = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx tw = w[k * stride];
                if (sign > 0) tw = std::conj(tw);
                cplx u = data[i + k];
                cplx v = data[i + k + len / 2] * tw;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
            }
        }
    }
}

namespace {

// Bluestein: arbitrary-length DFT via chirp convolution on a padded
// power-of-two grid.
void bluestein(std::vector<cplx>& x, int sign) {
    const std::size_t n = x.size();
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cplx> a(m, cplx{0.0, 0.0});
    std::vector<cplx> b(m, cplx{0.0, 0.0});
    // phase k^2/2 * (2pi/n): evaluate k^2 mod 2n to keep the argument small
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t k2 = (k * k) % (2 * n);
        double ang = double(sign) * kPi * double(k2) / double(n);
        cplx c{std::cos(ang), std::sin(ang)};
        a[k] = x[k] * c;
        b[k] = std::conj(c);
        if (k > 0) b[m - k] = std::conj(c);
    }
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    const double inv = 1.0 / double(m);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t k2 = (k * k) % (2 * n);
        double ang = double(sign) * kPi * double(k2) / double(n);
        x[k] = a[k] * inv * cplx{std::cos(ang), std::sin(ang)};
    }
}

} // namespace

void fft_any(std::vector<cplx>& data, int sign) {
    if (is_pow2(data.size())) {
        fft_pow2(data, sign);
    } else {
        bluestein(data, sign);
    }
}

std::vector<cplx> czt_centered(const std::vector<cplx>& g, double theta) {
    const std::size_t n = g.size();
    const long half = long(n) / 2;
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cplx> a(m, cplx{0.0, 0.0});
    std::vector<cplx> b(m, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        long k = long(i) - half;
        double ang = -kPi * theta * double(k) * double(k);
        a[i] = g[i] * cplx{std::cos(ang), std::sin(ang)};
    }
    // b_j = exp(+i pi theta j^2), j in [-(n-1), n-1], stored at j + (n-1)
    for (long j = -(long(n) - 1); j <= long(n) - 1; ++j) {
        double ang = kPi * theta * double(j) * double(j);
        b[std::size_t(j + long(n) - 1)] = cplx{std::cos(ang), std::sin(ang)};
    }
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    const double inv = 1.0 / double(m);
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        long mm = long(i) - half;
        double ang = -kPi * theta * double(mm) * double(mm);
        out[i] = a[i + n - 1] * inv * cplx{std::cos(ang), std::sin(ang)};
    }
    return out;
}

std::vector<cplx> dft_centered(const std::vector<cplx>& y, int sign) {
    // Y_mu = sum_j y[j] exp(sign 2pi i mu (j - h)/N) = (-1)^mu G[mu mod N]
    // with h = N/2 and G the standard DFT of the storage-order sequence.
    const std::size_t n = y.size();
    const long half = long(n) / 2;
    std::vector<cplx> g(y);
    fft_any(g, sign);
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        long mu = long(i) - half;
        std::size_t idx = std::size_t((mu % long(n) + long(n)) % long(n));
        cplx v = g[idx];
        if (mu & 1L) v = -v;
        out[i] = v;
    }
    return out;
}

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 16) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    std::size_t h = v.size() / 2;
    return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

cplx pairwise_sum(std::span<const cplx> v) {
    if (v.size() <= 16) {
        cplx s{0.0, 0.0};
        for (const cplx& x : v) s += x;
        return s;
    }
    std::size_t h = v.size() / 2;
    return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

} // namespace frlp::dft
