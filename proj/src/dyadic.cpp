#include "frlp/dyadic.hpp"

#include <cmath>
#include <map>

#include "frlp/dft.hpp"
#include "frlp/opnorm.hpp"

namespace frlp {

DyadicTree make_tree(const GridSpec& grid, int k_min, int k_max) {
    if (k_min > k_max) fail(ErrorCode::UsageError, "k_min > k_max");
    int levels = k_max - k_min;
    if (levels > 30) fail(ErrorCode::UsageError, "tree too deep");
    int cells = 1 << levels;
    if (grid.samples % cells != 0)
        fail(ErrorCode::ScaleMisaligned,
             "sample count " + std::to_string(grid.samples) + " not divisible by " +
                 std::to_string(cells) + " cells");
    return DyadicTree{grid, k_min, k_max};
}

namespace {

Signal expectation_classical(const Signal& f, const DyadicTree& tree, int k) {
    const int n = f.grid.samples;
    const int w = tree.cell_samples(k);
    Signal out(f.grid);
    if (f.grid.dim == 1) {
        for (int c = 0; c < n; c += w) {
            cplx acc{0.0, 0.0};
            for (int i = 0; i < w; ++i) acc += f.v[std::size_t(c + i)];
            acc /= double(w);
            for (int i = 0; i < w; ++i) out.v[std::size_t(c + i)] = acc;
        }
    } else {
        for (int ca = 0; ca < n; ca += w) {
            for (int cb = 0; cb < n; cb += w) {
                cplx acc{0.0, 0.0};
                for (int a = 0; a < w; ++a)
                    for (int b = 0; b < w; ++b)
                        acc += f.v[std::size_t(ca + a) * n + (cb + b)];
                acc /= double(w) * double(w);
                for (int a = 0; a < w; ++a)
                    for (int b = 0; b < w; ++b)
                        out.v[std::size_t(ca + a) * n + (cb + b)] = acc;
            }
        }
    }
    return out;
}

} // namespace

Signal expectation(const Signal& f, const DyadicTree& tree, int k,
                   const std::optional<FracParam>& p) {
    require_same_grid(f.grid, tree.grid, "tree grid mismatch");
    if (k < tree.k_min || k > tree.k_max) fail(ErrorCode::ScaleMisaligned, "scale out of range");
    if (!p) return expectation_classical(f, tree, k);
    Signal g = chirp_mul(f, *p, ChirpDirection::forward);
    return chirp_mul(expectation_classical(g, tree, k), *p, ChirpDirection::inverse);
}

Signal difference(const Signal& f, const DyadicTree& tree, int k,
                  const std::optional<FracParam>& p) {
    if (k <= tree.k_min) fail(ErrorCode::ScaleMisaligned, "difference needs k > k_min");
    Signal fine = expectation(f, tree, k, p);
    Signal coarse = expectation(f, tree, k - 1, p);
    for (std::size_t i = 0; i < fine.size(); ++i) fine.v[i] -= coarse.v[i];
    return fine;
}

HaarCoefficients haar_transform(const Signal& f, const DyadicTree& tree,
                                const std::optional<FracParam>& p) {
    require_same_grid(f.grid, tree.grid, "tree grid mismatch");
    if (f.grid.dim != 1) fail(ErrorCode::DimUnsupported, "Haar system is 1-d");
    if (!tree.full_depth())
        fail(ErrorCode::ScaleMisaligned, "Haar transform needs the tree to reach single samples");

    // work on g = M_alpha f so that <f, h_I^alpha> = <g, h_I>
    Signal g = p ? chirp_mul(f, *p, ChirpDirection::forward) : f;
    const double dx = f.grid.dx();
    const int n = f.grid.samples;

    HaarCoefficients out;
    out.k_min = tree.k_min;
    out.k_max = tree.k_max;
    out.extent = f.grid.extent;
    out.frac = p;

    // prefix sums for cell sums: sum over [a, b)
    std::vector<cplx> pref(std::size_t(n) + 1, cplx{0.0, 0.0});
    for (int i = 0; i < n; ++i) pref[std::size_t(i) + 1] = pref[std::size_t(i)] + g.v[std::size_t(i)];
    auto cell_sum = [&](int a, int b) { return pref[std::size_t(b)] - pref[std::size_t(a)]; };

    // scaling coefficient: <g, L^{-1/2} 1> * dx
    out.scaling = cell_sum(0, n) * dx / std::sqrt(f.grid.extent);

    for (int scale = tree.k_min; scale < tree.k_max; ++scale) {
        int w = tree.cell_samples(scale);
        double len = w * dx;
        double norm = 1.0 / std::sqrt(len);
        int cells = tree.cells_per_axis(scale);
        for (int c = 0; c < cells; ++c) {
            int a = c * w;
            cplx left = cell_sum(a, a + w / 2);
            cplx right = cell_sum(a + w / 2, a + w);
            out.entries.push_back({scale, c, (left - right) * norm * dx});
        }
    }
    return out;
}

Signal inverse_haar(const HaarCoefficients& coeffs, const DyadicTree& tree) {
    if (tree.grid.dim != 1) fail(ErrorCode::DimUnsupported, "Haar system is 1-d");
    Signal g(tree.grid);
    const int n = tree.grid.samples;
    const double dx = tree.grid.dx();
    cplx base = coeffs.scaling / std::sqrt(tree.grid.extent);
    for (auto& z : g.v) z = base;
    for (const auto& e : coeffs.entries) {
        int w = tree.cell_samples(e.scale);
        double norm = 1.0 / std::sqrt(w * dx);
        int a = e.offset * w;
        for (int i = 0; i < w / 2; ++i) g.v[std::size_t(a + i)] += e.coef * norm;
        for (int i = w / 2; i < w; ++i) g.v[std::size_t(a + i)] -= e.coef * norm;
    }
    if (coeffs.frac) return chirp_mul(g, *coeffs.frac, ChirpDirection::inverse);
    return g;
}

Signal dyadic_square_function(const Signal& f, const DyadicTree& tree,
                              const std::optional<FracParam>& p) {
    Signal acc(f.grid);
    for (int k = tree.k_min + 1; k <= tree.k_max; ++k) {
        Signal d = difference(f, tree, k, p);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc.v[i] += cplx{std::norm(d.v[i]), 0.0};
    }
    for (auto& z : acc.v) z = cplx{std::sqrt(z.real()), 0.0};
    return acc;
}

MixedProbeReport mixed_orthogonality_probe(const DyadicTree& tree, const DyadicBank& bank,
                                           const std::vector<std::pair<int, int>>& pairs,
                                           const FracParam& p, int iterations,
                                           std::uint64_t seed) {
    require_same_grid(tree.grid, bank.grid, "tree and bank grids differ");
    MixedProbeReport rep;
    std::map<int, double> max_by_distance;

    for (const auto& [j, k] : pairs) {
        if (!bank.has_level(j)) fail(ErrorCode::UsageError, "bank level out of range");
        if (k <= tree.k_min || k > tree.k_max) fail(ErrorCode::ScaleMisaligned, "tree scale out of range");

        auto classical_apply = [&](const Signal& v) {
            return difference(lp_block(v, bank, j), tree, k);
        };
        auto classical_adjoint = [&](const Signal& v) {
            return lp_block(difference(v, tree, k), bank, j);
        };
        auto twisted_apply = [&](const Signal& v) {
            return difference(lp_block(v, bank, j, p), tree, k, p);
        };
        auto twisted_adjoint = [&](const Signal& v) {
            return lp_block(difference(v, tree, k, p), bank, j, p);
        };

        Signal probe = random_probe(tree.grid, seed);
        Signal probe_tw = chirp_mul(probe, p, ChirpDirection::inverse);

        auto cls = operator_norm(classical_apply, classical_adjoint, tree.grid, iterations, seed, &probe);
        auto tw = operator_norm(twisted_apply, twisted_adjoint, tree.grid, iterations, seed, &probe_tw);

        MixedProbeRow row;
        row.j = j;
        row.k = k;
        row.distance = std::abs(j - k);
        row.classical_norm = cls.norm;
        row.twisted_norm = tw.norm;
        row.equality_err = cls.norm > 0.0 ? std::abs(tw.norm - cls.norm) / cls.norm : 0.0;
        rep.rows.push_back(row);

        rep.baseline = std::max(rep.baseline, cls.norm);
        auto it = max_by_distance.find(row.distance);
        if (it == max_by_distance.end())
            max_by_distance.emplace(row.distance, cls.norm);
        else
            it->second = std::max(it->second, cls.norm);
    }

    // least-squares slope of log2(envelope) vs distance
    if (max_by_distance.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        double m = 0;
        for (const auto& [d, v] : max_by_distance) {
            if (v <= 0.0) continue;
            double y = std::log2(v);
            sx += d;
            sy += y;
            sxx += double(d) * d;
            sxy += d * y;
            m += 1;
        }
        double denom = m * sxx - sx * sx;
        rep.fitted_slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
    }
    return rep;
}

} // namespace frlp
