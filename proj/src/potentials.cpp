#include "frlp/potentials.hpp"

#include <cmath>
#include <numbers>

#include "frlp/dft.hpp"
#include "frlp/multiplier.hpp"
#include "frlp/rng.hpp"

namespace frlp {

namespace {
constexpr double kPi = std::numbers::pi;
}

PotentialSpec riesz_potential(double s, DcPolicy dc) {
    return {PotentialKind::riesz, s, dc};
}
PotentialSpec bessel_potential(double sigma) {
    return {PotentialKind::bessel, sigma, std::nullopt};
}
PotentialSpec homog_derivative(double s, std::optional<DcPolicy> dc) {
    return {PotentialKind::homog_deriv, s, dc};
}
PotentialSpec inhomog_derivative(double sigma) {
    return {PotentialKind::inhomog_deriv, sigma, std::nullopt};
}
PotentialSpec frac_laplacian(double z, std::optional<DcPolicy> dc) {
    return {PotentialKind::frac_laplacian, z, dc};
}

Symbol potential_symbol(const PotentialSpec& spec) {
    const double order = spec.order;
    bool singular_at_zero = false;
    std::string name;
    std::function<double(double)> radial;
    switch (spec.kind) {
        case PotentialKind::riesz:
            singular_at_zero = order > 0.0;
            name = "riesz(" + std::to_string(order) + ")";
            radial = [order](double r) { return std::pow(2.0 * kPi * r, -order); };
            break;
        case PotentialKind::bessel:
            name = "bessel(" + std::to_string(order) + ")";
            radial = [order](double r) {
                return std::pow(1.0 + 4.0 * kPi * kPi * r * r, -order / 2.0);
            };
            break;
        case PotentialKind::homog_deriv:
            singular_at_zero = order < 0.0;
            name = "homog_deriv(" + std::to_string(order) + ")";
            radial = [order](double r) { return std::pow(r, order); };
            break;
        case PotentialKind::inhomog_deriv:
            name = "inhomog_deriv(" + std::to_string(order) + ")";
            radial = [order](double r) { return std::pow(1.0 + r * r, order / 2.0); };
            break;
        case PotentialKind::frac_laplacian:
            singular_at_zero = order < 0.0;
            name = "frac_laplacian(" + std::to_string(order) + ")";
            radial = [order](double r) { return std::pow(2.0 * kPi * r, order); };
            break;
    }
    DcPolicy dc = DcPolicy::zero;
    if (singular_at_zero) {
        if (!spec.dc) fail(ErrorCode::DcSingular, name + " needs a dc policy");
        dc = *spec.dc;
    }
    bool zero_at_dc = (spec.kind == PotentialKind::riesz && order < 0.0) ||
                      (spec.kind == PotentialKind::homog_deriv && order > 0.0) ||
                      (spec.kind == PotentialKind::frac_laplacian && order > 0.0);
    return Symbol{[radial, singular_at_zero, zero_at_dc, dc](const FreqPoint& q) -> cplx {
                      double r = q.radius();
                      if (r == 0.0) {
                          if (singular_at_zero)
                              return dc == DcPolicy::zero ? cplx{0.0, 0.0} : cplx{1.0, 0.0};
                          if (zero_at_dc) return {0.0, 0.0};
                          return {radial(0.0), 0.0};
                      }
                      return {radial(r), 0.0};
                  },
                  name};
}

std::string Frame::name() const {
    switch (kind) {
        case Kind::classical: return "classical";
        case Kind::conjugated: return "conjugated";
        case Kind::pullback: return "pullback";
    }
    return "?";
}

Signal apply_potential(const PotentialSpec& spec, const Signal& f, const Frame& frame) {
    Symbol sym = potential_symbol(spec);
    switch (frame.kind) {
        case Frame::Kind::classical:
            return apply_multiplier(sym, f);
        case Frame::Kind::conjugated:
            return conjugated_multiplier(sym, f, *frame.p);
        case Frame::Kind::pullback: {
            auto rep = validate_sampling(f.grid, *frame.p);
            if (!rep.ok) fail(ErrorCode::ChirpAliased, "pullback frame needs a valid sampling");
            auto samples = sample_symbol(sym, f.grid);
            Spectrum F = frft(f, *frame.p);
            for (std::size_t i = 0; i < F.v.size(); ++i) F.v[i] *= samples[i];
            return ifrft(F, *frame.p);
        }
    }
    fail(ErrorCode::UsageError, "bad frame");
}

namespace {

std::uint64_t digest_signals(const std::vector<Signal>& signals) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const Signal& f : signals)
        h = fnv1a(f.v.data(), f.v.size() * sizeof(cplx), h);
    return h;
}

double rel_l2_diff(const Signal& a, const Signal& b) {
    Signal d(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) d.v[i] = a.v[i] - b.v[i];
    double ref = lp_norm(b, 2.0);
    double diff = lp_norm(d, 2.0);
    return ref > 0.0 ? diff / ref : diff;
}

} // namespace

CheckCertificate semigroup_check(const std::vector<PotentialSpec>& lhs,
                                 const std::vector<PotentialSpec>& rhs,
                                 const std::vector<Signal>& signals, const Frame& frame,
                                 double tolerance) {
    CheckCertificate cert;
    std::string id = "compose[";
    for (const auto& s : lhs) id += potential_symbol(s).name + " ";
    id += "] == compose[";
    for (const auto& s : rhs) id += potential_symbol(s).name + " ";
    id += "]";
    cert.identity = id;
    cert.frame = frame.name();
    cert.tolerance = tolerance;
    cert.inputs_digest = digest_signals(signals);
    double worst = 0.0;
    for (const Signal& f : signals) {
        Signal a = f;
        for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) a = apply_potential(*it, a, frame);
        Signal b = f;
        for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) b = apply_potential(*it, b, frame);
        worst = std::max(worst, rel_l2_diff(a, b));
    }
    cert.max_rel_err = worst;
    cert.pass = worst < tolerance;
    return cert;
}

PullbackNorm pullback_norm(const Signal& f, double r, const FracParam& p) {
    auto rep = validate_sampling(f.grid, p);
    if (!rep.ok) fail(ErrorCode::ChirpAliased, "pullback norm needs a valid sampling");
    Spectrum F = frft(f, p);
    double w = std::pow(f.grid.dxi(), f.grid.dim);
    return {r, lp_norm_values(F.v, w, r), p.alpha};
}

Signal resample_refine(const Signal& f, int factor) {
    if (factor < 1) fail(ErrorCode::UsageError, "refine factor must be >= 1");
    if (factor == 1) return f;
    const int n = f.grid.samples;
    const int m = n * factor;
    GridSpec fine = make_grid(f.grid.dim, f.grid.extent, m);
    Spectrum S = grid_fourier(f);
    Spectrum Sf(fine);
    // embed centered bins: fine index = coarse centered offset + m/2
    if (f.grid.dim == 1) {
        for (int i = 0; i < n; ++i)
            Sf.v[std::size_t(i - n / 2 + m / 2)] = S.v[std::size_t(i)];
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                Sf.v[std::size_t(a - n / 2 + m / 2) * m + std::size_t(b - n / 2 + m / 2)] =
                    S.v[std::size_t(a) * n + b];
    }
    return grid_inverse_fourier(Sf);
}

CheckCertificate hls_desk_check(double s, double p_exp, double q_exp,
                                const std::vector<Signal>& family, const FracParam& p,
                                double stability_factor) {
    if (family.empty()) fail(ErrorCode::UsageError, "empty family");
    const int n = family.front().grid.dim;
    if (!(s > 0.0 && s < double(n)))
        fail(ErrorCode::ExponentMismatch, "need 0 < s < n");
    if (std::abs(1.0 / p_exp - 1.0 / q_exp - s / double(n)) > 1e-12)
        fail(ErrorCode::ExponentMismatch, "1/p - 1/q must equal s/n");

    CheckCertificate cert;
    cert.identity = "hls ratio stability, s=" + std::to_string(s);
    cert.frame = "pullback";
    cert.inputs_digest = digest_signals(family);
    PotentialSpec rp = riesz_potential(s);

    auto sup_ratio = [&](const std::vector<Signal>& fam) {
        double worst = 0.0;
        for (const Signal& f : fam) {
            Signal g = apply_potential(rp, f, Frame::pullback(p));
            double num = pullback_norm(g, q_exp, p).value;
            double den = pullback_norm(f, p_exp, p).value;
            if (den > 0.0) worst = std::max(worst, num / den);
        }
        return worst;
    };

    double base = sup_ratio(family);
    std::vector<Signal> refined;
    refined.reserve(family.size());
    for (const Signal& f : family) refined.push_back(resample_refine(f, 4));
    double fine = sup_ratio(refined);

    double drift = base > 0.0 ? fine / base : std::numeric_limits<double>::infinity();
    cert.max_rel_err = std::max(drift, 1.0 / drift);
    cert.tolerance = stability_factor;
    cert.pass = std::isfinite(base) && std::isfinite(fine) &&
                cert.max_rel_err < stability_factor;
    return cert;
}

ChainReport operator_chain(const BoundedOp& T, const BoundedOp& A, double s, double sigma,
                           double p_exp, double q_exp, const Signal& f, const FracParam& p) {
    const int n = f.grid.dim;
    if (std::abs(1.0 / p_exp - 1.0 / q_exp - s / double(n)) > 1e-12)
        fail(ErrorCode::ExponentMismatch, "1/p - 1/q must equal s/n");

    ChainReport rep;
    Frame pb = Frame::pullback(p);
    double nf = pullback_norm(f, p_exp, p).value;

    Signal g = T.op(f);
    double ng = pullback_norm(g, p_exp, p).value;
    rep.stages.push_back({"entry:" + T.name, nf, ng});

    Signal h1 = apply_potential(riesz_potential(s), g, pb);
    double nh1 = pullback_norm(h1, q_exp, p).value;
    rep.stages.push_back({"riesz", ng, nh1});

    Signal h2 = A.op(h1);
    double nh2 = pullback_norm(h2, q_exp, p).value;
    rep.stages.push_back({"selector:" + A.name, nh1, nh2});

    Signal out = apply_potential(bessel_potential(sigma), h2, pb);
    double nout = pullback_norm(out, q_exp, p).value;
    rep.stages.push_back({"bessel", nh2, nout});

    const double slack = 1.0 + 1e-10;
    double c_hls = ng > 0.0 ? nh1 / ng : 0.0;
    bool contraction_ok = nout <= nh2 * slack;
    bool selector_ok = nh2 <= A.constant * nh1 * slack;
    bool entry_ok = ng <= T.constant * nf * slack;
    bool total_ok = nout <= A.constant * c_hls * T.constant * nf * slack;

    rep.certificate.identity = "chain bessel(after) selector riesz entry";
    rep.certificate.frame = pb.name();
    rep.certificate.tolerance = 1e-10;
    rep.certificate.inputs_digest = digest_signals({f});
    rep.certificate.pass = contraction_ok && selector_ok && entry_ok && total_ok;
    rep.certificate.max_rel_err =
        nh2 > 0.0 ? std::max(0.0, nout / nh2 - 1.0) : 0.0;
    return rep;
}

Signal twisted_product(const std::vector<Signal>& fs, const FracParam& p) {
    if (fs.empty()) fail(ErrorCode::UsageError, "empty product");
    for (const Signal& f : fs) require_same_grid(f.grid, fs.front().grid, "product grids differ");
    Signal acc = chirp_mul(fs.front(), p, ChirpDirection::forward);
    for (std::size_t k = 1; k < fs.size(); ++k) {
        Signal g = chirp_mul(fs[k], p, ChirpDirection::forward);
        for (std::size_t i = 0; i < acc.size(); ++i) acc.v[i] *= g.v[i];
    }
    return chirp_mul(acc, p, ChirpDirection::inverse);
}

Signal twisted_convolution(const Signal& omega, const Signal& u, const FracParam& p) {
    require_same_grid(omega.grid, u.grid, "convolution grids differ");
    Signal a = chirp_mul(omega, p, ChirpDirection::forward);
    Signal b = chirp_mul(u, p, ChirpDirection::forward);
    Spectrum A = grid_fourier(a);
    Spectrum B = grid_fourier(b);
    for (std::size_t i = 0; i < A.v.size(); ++i) A.v[i] *= B.v[i];
    return chirp_mul(grid_inverse_fourier(A), p, ChirpDirection::inverse);
}

KatoPonceRegion kato_ponce_region(double s, double r, int n) {
    if (!(r > 0.5) || !std::isfinite(r)) fail(ErrorCode::UsageError, "need r in (1/2, inf)");
    if (n < 1) fail(ErrorCode::UsageError, "need n >= 1");
    auto is_even_positive_integer = [](double x) {
        if (x <= 0.0) return false;
        double rounded = std::round(x / 2.0) * 2.0;
        return std::abs(x - rounded) < 1e-12 && rounded >= 2.0;
    };
    double edge = std::max(double(n) / r - double(n), 0.0);
    if (s < 0.0) return KatoPonceRegion::forbidden;
    if (s <= edge && !is_even_positive_integer(s) && s != 0.0)
        return KatoPonceRegion::forbidden;
    return KatoPonceRegion::allowed;
}

} // namespace frlp
