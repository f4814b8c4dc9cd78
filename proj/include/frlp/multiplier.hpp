#pragma once

// Classical and fractional multiplier operators, localized selectors,
// Bochner-Riesz means, and the Marcinkiewicz / Mihlin-Hoermander symbol
// condition checkers with their dilation-invariance reports.

#include <optional>
#include <vector>

#include "frlp/frft.hpp"
#include "frlp/symbols.hpp"

namespace frlp {

enum class MultiplierRoute { definition, conjugation };

Signal apply_multiplier(const Symbol& m, const Signal& f);

Signal apply_frft_multiplier(const Symbol& m, const Signal& f, const FracParam& p,
                             MultiplierRoute route);

Signal band_selector(const Symbol& profile, double R, const Signal& f, const FracParam& p);

Signal bochner_riesz(double lambda, double R, const Signal& f, const FracParam& p);

struct IntervalVariation {
    int level = 0;        // dyadic interval [2^j, 2^{j+1}] (both signs)
    double variation = 0.0;
};

struct SymbolConditionReport {
    std::string condition;
    std::string symbol;
    std::vector<IntervalVariation> intervals;  // Marcinkiewicz ledger
    struct AnnulusEntry {
        double radius = 0.0;
        std::vector<double> ratio_by_order;  // ||d^beta m||_{L2(ann)} / R^{n/2-|beta|}
    };
    std::vector<AnnulusEntry> annuli;          // Mihlin ledger
    double bound = 0.0;                         // the sup constant A
    int covering_count = 0;                     // dyadic covering count used
    std::optional<bool> pass;                   // vs user bound, when given
};

SymbolConditionReport marcinkiewicz_check(const Symbol& m, int jmin, int jmax,
                                          int quad_points,
                                          std::optional<double> user_bound = std::nullopt);

// covering count for the rescaling invariance factor at this angle
int dyadic_covering_count(const FracParam& p);

SymbolConditionReport mihlin_check(const Symbol& m, int dim, int max_order,
                                   const std::vector<double>& annuli,
                                   int refine = 1,
                                   std::optional<double> user_bound = std::nullopt);

// T^alpha = M^{-1} T_m M: the chirp-conjugated classical multiplier
// (no dilation of the symbol; distinct from the FrFT multiplier above).
Signal conjugated_multiplier(const Symbol& m, const Signal& f, const FracParam& p);

// pointwise sup over the family of |T_k^alpha f| (conjugation realization)
Signal maximal_over_family(const std::vector<Symbol>& family, const Signal& f,
                           const FracParam& p);

// pointwise l2 over the dilated family
Signal rough_square_function(const std::vector<Symbol>& family, const Signal& f,
                             const FracParam& p);

struct AnnulusSymbol {
    int level = 0;  // symbol must live on 2^{level-1} <= |xi| <= 2^{level+1}
    Symbol sym;
};

struct AlmostOrthogonalReport {
    Signal total;
    std::vector<double> term_l2;
    std::vector<double> cauchy_increment;
};

AlmostOrthogonalReport almost_orthogonal_sum(const std::vector<AnnulusSymbol>& family,
                                             const Signal& f, const FracParam& p,
                                             double q = 2.0);

// pointwise l2 aggregate over pairs (m_j, f_j)
Signal vector_valued_aggregate(const std::vector<Symbol>& symbols,
                               const std::vector<Signal>& fs, const FracParam& p);

} // namespace frlp
