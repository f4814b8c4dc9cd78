#pragma once

// Classical and twisted dyadic martingale machinery: conditional
// expectations, martingale differences, the chirped Haar system, and the
// mixed fractional-dyadic almost-orthogonality probe.

#include <optional>
#include <vector>

#include "frlp/frft.hpp"
#include "frlp/lp.hpp"

namespace frlp {

struct DyadicTree {
    GridSpec grid;
    int k_min = 0;  // coarsest scale: one cell spanning the whole domain
    int k_max = 0;  // finest scale: 2^{k_max - k_min} cells per axis

    int cells_per_axis(int k) const { return 1 << (k - k_min); }
    int cell_samples(int k) const { return grid.samples / cells_per_axis(k); }
    bool full_depth() const { return cell_samples(k_max) == 1; }
};

DyadicTree make_tree(const GridSpec& grid, int k_min, int k_max);

// E_k: per-cell average (twisted by conjugation when p given).
Signal expectation(const Signal& f, const DyadicTree& tree, int k,
                   const std::optional<FracParam>& p = std::nullopt);

// D_k = E_k - E_{k-1}; requires k > k_min.
Signal difference(const Signal& f, const DyadicTree& tree, int k,
                  const std::optional<FracParam>& p = std::nullopt);

struct HaarCoefficients {
    int k_min = 0;
    int k_max = 0;
    double extent = 0.0;
    std::optional<FracParam> frac;
    cplx scaling{0.0, 0.0};  // coefficient on the coarsest (chirped) indicator
    struct Entry {
        int scale;   // scale of the parent interval I
        int offset;  // cell index at that scale
        cplx coef;   // <f, h_I^alpha>
    };
    std::vector<Entry> entries;
};

// 1-d only; the tree must refine down to single samples.
HaarCoefficients haar_transform(const Signal& f, const DyadicTree& tree,
                                const std::optional<FracParam>& p = std::nullopt);

Signal inverse_haar(const HaarCoefficients& coeffs, const DyadicTree& tree);

// (sum_k |D_k^alpha f|^2)^{1/2} over k_min < k <= k_max.
Signal dyadic_square_function(const Signal& f, const DyadicTree& tree,
                              const std::optional<FracParam>& p = std::nullopt);

struct MixedProbeRow {
    int j = 0;
    int k = 0;
    int distance = 0;
    double twisted_norm = 0.0;
    double classical_norm = 0.0;
    double equality_err = 0.0;  // |twisted - classical| / classical
};

struct MixedProbeReport {
    std::vector<MixedProbeRow> rows;
    double baseline = 0.0;       // max norm over all probed pairs
    double fitted_slope = 0.0;   // log2(max norm per distance) vs distance
};

// Power-iteration estimates of ||D_k^a Delta_j^a||_{2->2}; the twisted run
// reuses the classical probe transported through the chirp.
MixedProbeReport mixed_orthogonality_probe(const DyadicTree& tree, const DyadicBank& bank,
                                           const std::vector<std::pair<int, int>>& pairs,
                                           const FracParam& p, int iterations = 250,
                                           std::uint64_t seed = 0x5EED);

} // namespace frlp
