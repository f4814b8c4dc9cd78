#include "frlp/opnorm.hpp"

#include <cmath>

#include "frlp/dft.hpp"
#include "frlp/rng.hpp"

namespace frlp {

namespace {

double norm2_raw(const Signal& f) {
    std::vector<double> t(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) t[i] = std::norm(f.v[i]);
    return std::sqrt(dft::pairwise_sum(t));
}

cplx inner_raw(const Signal& a, const Signal& b) {
    std::vector<cplx> t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) t[i] = std::conj(a.v[i]) * b.v[i];
    return dft::pairwise_sum(std::span<const cplx>(t.data(), t.size()));
}

} // namespace

Signal random_probe(const GridSpec& grid, std::uint64_t seed) {
    Rng rng(seed);
    Signal v(grid);
    for (auto& z : v.v) z = rng.cgauss();
    return v;
}

OpNormEstimate operator_norm(const std::function<Signal(const Signal&)>& apply,
                             const std::function<Signal(const Signal&)>& apply_adjoint,
                             const GridSpec& grid,
                             int iterations,
                             std::uint64_t seed,
                             const Signal* probe) {
    Signal v = probe ? *probe : random_probe(grid, seed);
    double nv = norm2_raw(v);
    if (nv == 0.0) return {};
    for (auto& z : v.v) z /= nv;

    OpNormEstimate est;
    double lam = 0.0;
    for (int it = 0; it < iterations; ++it) {
        Signal w = apply_adjoint(apply(v));
        double rayleigh = std::real(inner_raw(v, w));
        est.last_increment = std::abs(rayleigh - lam);
        lam = rayleigh;
        est.iterations = it + 1;
        double nw = norm2_raw(w);
        if (nw == 0.0) {
            lam = 0.0;
            break;
        }
        for (std::size_t i = 0; i < w.size(); ++i) w.v[i] /= nw;
        v = std::move(w);
    }
    est.norm = std::sqrt(std::max(lam, 0.0));
    return est;
}

} // namespace frlp
