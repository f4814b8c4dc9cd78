#pragma once

// Fractional-parameter regime analysis: classifier, classical-limit
// convergence profiles, and singular-boundary collapse profiles.

#include <string>
#include <vector>

#include "frlp/lp.hpp"
#include "frlp/symbols.hpp"

namespace frlp {

struct RegimeConfig {
    double delta1 = 0.1;
    double delta2 = 3.0;
    double s_min = 0.05;
};

enum class Regime { classical, effective_fractional, warning };

const char* regime_name(Regime r);

// classical if D <= delta1 (closed); warning if D >= delta2 or s < s_min.
Regime classify_regime(const FracParam& p, const RegimeConfig& cfg);

struct ProfileRow {
    int ell = 0;
    double alpha = 0.0;
    double s = 0.0;
    double kappa = 0.0;
    double deviation = 0.0;
    double block_err = 0.0;
    double square_err = 0.0;
    double multiplier_err = 0.0;
    double selector_err = 0.0;
    double passband_center = 0.0;
    bool sampling_ok = true;
};

struct ConvergenceProfile {
    std::string law;
    std::vector<ProfileRow> rows;
    bool pass = false;
    std::string detail;
};

// alpha_ell = pi/2 + 2^-ell; block/square/multiplier errors per ell.
ConvergenceProfile classical_limit_profile(const Signal& f, const DyadicBank& bank,
                                           const Symbol& m, int block_level, int ell_max,
                                           double final_tol = 1e-6);

// alpha_ell = 2^-ell; selector error vs Phi(0) f and passband drift.
ConvergenceProfile singular_boundary_profile(const Signal& f, const Symbol& profile,
                                             double R, int ell_max,
                                             double final_tol = 1e-6);

} // namespace frlp
