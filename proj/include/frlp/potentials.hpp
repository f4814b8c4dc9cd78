#pragma once

// Fractional derivatives and potentials in three frames (classical,
// chirp-conjugated, pullback), semigroup/commutation checks, pullback norms,
// HLS desk checks, the operator chain, twisted products/convolutions, and
// the structural-condition classifier for the twisted convolution estimate.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frlp/frft.hpp"
#include "frlp/symbols.hpp"

namespace frlp {

enum class PotentialKind { riesz, bessel, homog_deriv, inhomog_deriv, frac_laplacian };
enum class DcPolicy { zero, hold };

struct PotentialSpec {
    PotentialKind kind;
    double order = 0.0;
    std::optional<DcPolicy> dc;  // required for symbols singular at xi = 0
};

PotentialSpec riesz_potential(double s, DcPolicy dc = DcPolicy::zero);
PotentialSpec bessel_potential(double sigma);
PotentialSpec homog_derivative(double s, std::optional<DcPolicy> dc = std::nullopt);
PotentialSpec inhomog_derivative(double sigma);
// (-Delta)^{z/2}; symbol (2 pi |xi|)^z
PotentialSpec frac_laplacian(double z, std::optional<DcPolicy> dc = std::nullopt);

Symbol potential_symbol(const PotentialSpec& spec);

struct Frame {
    enum class Kind { classical, conjugated, pullback } kind = Kind::classical;
    std::optional<FracParam> p;

    static Frame classical() { return {Kind::classical, std::nullopt}; }
    static Frame conjugated(const FracParam& p) { return {Kind::conjugated, p}; }
    static Frame pullback(const FracParam& p) { return {Kind::pullback, p}; }
    std::string name() const;
};

Signal apply_potential(const PotentialSpec& spec, const Signal& f, const Frame& frame);

struct CheckCertificate {
    std::string identity;
    std::string frame;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::uint64_t inputs_digest = 0;
};

// Composition identities: applying `lhs` specs in order equals applying
// `rhs` specs, measured in relative L2 on the given signals.
CheckCertificate semigroup_check(const std::vector<PotentialSpec>& lhs,
                                 const std::vector<PotentialSpec>& rhs,
                                 const std::vector<Signal>& signals, const Frame& frame,
                                 double tolerance = 1e-9);

struct PullbackNorm {
    double r = 0.0;
    double value = 0.0;
    double alpha = 0.0;
};

PullbackNorm pullback_norm(const Signal& f, double r, const FracParam& p);

// Band-limited spectral refinement (zero-padding interpolation); used by the
// HLS two-resolution stability gate.
Signal resample_refine(const Signal& f, int factor);

CheckCertificate hls_desk_check(double s, double p_exp, double q_exp,
                                const std::vector<Signal>& family, const FracParam& p,
                                double stability_factor = 10.0);

struct BoundedOp {
    std::function<Signal(const Signal&)> op;
    double constant = 1.0;
    std::string name;
};

struct ChainStage {
    std::string name;
    double norm_in = 0.0;
    double norm_out = 0.0;
};

struct ChainReport {
    CheckCertificate certificate;
    std::vector<ChainStage> stages;
};

ChainReport operator_chain(const BoundedOp& T, const BoundedOp& A, double s, double sigma,
                           double p_exp, double q_exp, const Signal& f, const FracParam& p);

// Pi_alpha(f_1, ..., f_m) = M^{-1} prod (M f_i)
Signal twisted_product(const std::vector<Signal>& fs, const FracParam& p);

// f *_alpha g = M^{-1}((M f) * (M g)), periodic convolution with dx^dim weight
Signal twisted_convolution(const Signal& omega, const Signal& u, const FracParam& p);

enum class KatoPonceRegion { allowed, forbidden };
KatoPonceRegion kato_ponce_region(double s, double r, int n);

} // namespace frlp
