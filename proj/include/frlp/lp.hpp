#pragma once

// Dyadic partition of unity, classical and fractional Littlewood-Paley
// blocks, square functions, sharp blocks, reconstruction, and the
// Besov / Triebel-Lizorkin / Sobolev / Lipschitz norms built on them.

#include <optional>
#include <vector>

#include "frlp/frft.hpp"
#include "frlp/symbols.hpp"

namespace frlp {

enum class BankNormalization {
    partition,      // sum_j phi_j = 1 (telescoping, default)
    sum_squares,    // masks scaled so sum_j phi_j^2 = 1 on the covered annulus
};

struct DyadicBank {
    GridSpec grid;
    int jmin = 0;
    int jmax = 0;
    BankNormalization normalization = BankNormalization::partition;
    std::vector<double> chi;                // low-pass mask on grid bins
    std::vector<std::vector<double>> phi;   // per-level masks, jmin..jmax

    const std::vector<double>& level(int j) const { return phi[std::size_t(j - jmin)]; }
    bool has_level(int j) const { return j >= jmin && j <= jmax; }

    struct FrameBounds {
        double lower = 0.0;  // min over covered annulus of sqrt(sum phi^2)
        double upper = 0.0;
    };
    FrameBounds frame_bounds() const;
};

DyadicBank build_bank(const GridSpec& grid, int jmin, int jmax,
                      BankNormalization normalization = BankNormalization::partition);

// Delta_j (classical) or M^{-1} Delta_j M (fractional when p given).
Signal lp_block(const Signal& f, const DyadicBank& bank, int j,
                const std::optional<FracParam>& p = std::nullopt);

// Low-pass piece S_0 (or its conjugated version).
Signal lowpass_block(const Signal& f, const DyadicBank& bank,
                     const std::optional<FracParam>& p = std::nullopt);

// (sum_j |Delta_{j,alpha} f|^2)^{1/2} over the bank range.
Signal square_function(const Signal& f, const DyadicBank& bank,
                       const std::optional<FracParam>& p = std::nullopt);

// Sharp indicator block on I_j = [2^j, 2^{j+1}) u (-2^{j+1}, -2^j]; 1-d only.
Signal sharp_block(const Signal& f, int j, const std::optional<FracParam>& p = std::nullopt);

struct Decomposition {
    Signal input;
    std::optional<Signal> lowpass;               // S_0 piece (inhomogeneous)
    std::vector<std::pair<int, Signal>> blocks;  // (level, block)
    std::optional<FracParam> frac;
};

Decomposition decompose(const Signal& f, const DyadicBank& bank,
                        const std::optional<FracParam>& p = std::nullopt,
                        bool homogeneous = false);

struct Reconstruction {
    Signal sum;
    double residual_l2 = 0.0;       // ||sum - input||_2
    double residual_rel = 0.0;      // relative to ||input||_2
};

Reconstruction reconstruct(const Decomposition& dec);

struct NormReport {
    std::string space;
    double value = 0.0;
    double lowpass_term = 0.0;
    struct Level {
        int j;
        double weight;      // 2^{js}
        double block_norm;  // ||Delta_j f||_p (Besov ledger)
    };
    std::vector<Level> levels;
};

NormReport besov_norm(const Signal& f, const DyadicBank& bank, double s, double p,
                      double q, const std::optional<FracParam>& frac = std::nullopt);

NormReport triebel_norm(const Signal& f, const DyadicBank& bank, double s, double p,
                        double q, const std::optional<FracParam>& frac = std::nullopt);

inline NormReport sobolev_norm(const Signal& f, const DyadicBank& bank, double s, double p,
                               const std::optional<FracParam>& frac = std::nullopt) {
    return triebel_norm(f, bank, s, p, 2.0, frac);
}

enum class LipschitzVariant { homogeneous, inhomogeneous };

NormReport lipschitz_norm(const Signal& f, const DyadicBank& bank, double gamma,
                          LipschitzVariant variant,
                          const std::optional<FracParam>& frac = std::nullopt);

// ||f||_{Lip gamma} / |||D|^sigma f||_{Lip gamma-sigma}
double order_shift_ratio(const Signal& f, const DyadicBank& bank, double gamma,
                         double sigma, LipschitzVariant variant);

} // namespace frlp
