#pragma once

// BMO-type oscillation scores in the chirped frame, sharp maximal function,
// Carleson score, John-Nirenberg empirical decay, Hardy quasi-norms, and
// atom validation/synthesis.

#include <cstdint>
#include <optional>
#include <vector>

#include "frlp/frft.hpp"
#include "frlp/lp.hpp"

namespace frlp {

struct Cube {
    int offset0 = 0;
    int offset1 = 0;  // unused for dim=1
    int side = 0;     // in samples

    bool contains(int a, int b, int dim) const {
        bool in0 = a >= offset0 && a < offset0 + side;
        if (dim == 1) return in0;
        return in0 && b >= offset1 && b < offset1 + side;
    }
    double length(const GridSpec& g) const { return side * g.dx(); }
};

struct CubeFamily {
    GridSpec grid;
    std::vector<Cube> cubes;
};

// Every dyadic cube with side >= min_side_samples (halving while even).
CubeFamily all_dyadic_cubes(const GridSpec& grid, int min_side_samples = 4);

// sup over cubes of the r-mean oscillation of M_alpha b.
double bmo_alpha_norm(const Signal& b, const CubeFamily& cubes, const FracParam& p, double r);

// classical-side helper: r-mean oscillation of an explicit signal
double mean_oscillation_norm(const Signal& g, const CubeFamily& cubes, double r);

// pointwise sup over cubes containing x of mean oscillation of M_alpha b.
Signal sharp_maximal(const Signal& b, const CubeFamily& cubes, const FracParam& p);
Signal sharp_maximal_classical(const Signal& g, const CubeFamily& cubes);

struct PsiKernel {
    // mother wavelet as an analytic radial profile: psi(x) = shape(|x|^2, dim)
    std::function<double(double r2, int dim)> shape;
    std::string name;
};

// Mexican-hat family (second-derivative-of-gaussian shape), mean zero in
// both dimensions.
PsiKernel default_psi();

// Sample psi_t(x) = t^{-n} psi(x/t) on the grid, re-centered to exact zero
// mean; throws PsiNotMeanZero when the raw sampling is not mean-zero.
Signal sample_psi(const PsiKernel& psi, const GridSpec& grid, double t);

// measured nondegeneracy inf_{xi != 0} sup_t |psi_hat(t xi)| over grid bins
double psi_nondegeneracy(const PsiKernel& psi, const GridSpec& grid,
                         const std::vector<double>& scales);

double carleson_score(const Signal& b, const FracParam& p, const PsiKernel& psi,
                      const std::vector<double>& scales, const CubeFamily& cubes);
double carleson_score_classical(const Signal& g, const PsiKernel& psi,
                                const std::vector<double>& scales, const CubeFamily& cubes);

std::vector<double> dyadic_scales(const GridSpec& grid);

struct JohnNirenbergProfile {
    std::vector<double> lambdas;
    std::vector<double> fractions;  // |{x in Q : |M_a b - avg| > lambda}| / |Q|
    double slope = 0.0;             // of log(fraction) vs lambda
    double intercept = 0.0;
    double r_squared = 0.0;
    bool pass = false;              // slope < 0 with bounded residual
};

JohnNirenbergProfile john_nirenberg_profile(const Signal& b, const FracParam& p,
                                            const Cube& Q,
                                            const std::vector<double>& lambda_grid);

double hardy_square_quasinorm(const Signal& f, const DyadicBank& bank, const FracParam& p,
                              double hardy_p);

struct AtomReport {
    Cube cube;
    double p = 0.0;
    double q = 0.0;
    bool support_ok = false;
    bool size_ok = false;
    double size_norm = 0.0;
    double size_bound = 0.0;
    struct Moment {
        int order0;
        int order1;
        double magnitude;
        double tolerance;
    };
    std::vector<Moment> moments;
    bool pass = false;
};

AtomReport validate_atom(const Signal& A, const Cube& Q, double p, double q,
                         const FracParam& frac);

Signal synthesize_atom(const GridSpec& grid, const Cube& Q, double p, double q,
                       const FracParam& frac, std::uint64_t seed);

struct StabilityScores {
    double omega_r = 0.0;
    double carleson = 0.0;
    double sharpmax = 0.0;
    double r = 0.0;
    double psi_nondegeneracy = 0.0;
    double ratio_omega_carleson = 0.0;
    double ratio_omega_sharp = 0.0;
    double ratio_carleson_sharp = 0.0;
    bool within_band = true;
};

struct ScoreBand {
    double lo = 1.0 / 64.0;
    double hi = 64.0;
};

StabilityScores stability_scores(const Signal& b, const FracParam& p, double r,
                                 const PsiKernel& psi, const CubeFamily& cubes,
                                 const ScoreBand& band = {});

double spearman_rank_correlation(const std::vector<double>& a, const std::vector<double>& b);

} // namespace frlp
