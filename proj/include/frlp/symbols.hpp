#pragma once

// Evaluable multiplier symbols on frequency space. Symbols stay closures so
// rescaling stays exact; they are sampled on the grid at application time.

#include <array>
#include <functional>
#include <string>

#include "frlp/grid.hpp"

namespace frlp {

struct FreqPoint {
    std::array<double, 2> v{0.0, 0.0};
    int dim = 1;

    double radius() const {
        return dim == 1 ? std::abs(v[0]) : std::hypot(v[0], v[1]);
    }
};

using SymbolFn = std::function<cplx(const FreqPoint&)>;

struct Symbol {
    SymbolFn eval;
    std::string name;
};

// Smooth transition profile: 1 on r<=1, 0 on r>=2, exp-glue in between.
double theta_profile(double r);

// m_alpha(xi) = m(sin(alpha) * xi), signed.
Symbol rescale_symbol(const Symbol& m, const FracParam& p);

// named library (addressable from the CLI)
Symbol sym_one();
Symbol sym_ball(double R);                  // indicator of |xi| <= R
Symbol sym_annulus(double a, double b);     // indicator of a <= |xi| <= b
Symbol sym_smoothstep(double r0, double r1);// 1 inside r0, 0 outside r1, smooth
Symbol sym_smooth_annulus(int j);           // theta(|xi|/2^j) - theta(|xi|/2^{j-1})
Symbol sym_riesz(double s);                 // (2 pi |xi|)^{-s}, 0 at xi=0
Symbol sym_bessel(double sigma);            // (1 + 4 pi^2 |xi|^2)^{-sigma/2}
Symbol sym_bochner_riesz(double lambda, double R);
Symbol sym_gauss(double sigma);             // exp(-pi (|xi| sigma)^2)
Symbol sym_translation(double a);           // exp(-2 pi i a xi) (1-d shift)
Symbol sym_step_levels(double r_in, double level_in, double level_out, double r_out);
Symbol sym_oscillatory(double t);           // |xi|^{i t} away from 0

// Parse "name(arg,...)" strings, e.g. "ball(1.5)" or "smoothstep(1,2)".
Symbol parse_symbol(const std::string& text);

// Sample a symbol on every grid frequency (row-major for dim=2).
std::vector<cplx> sample_symbol(const Symbol& m, const GridSpec& g);

} // namespace frlp
