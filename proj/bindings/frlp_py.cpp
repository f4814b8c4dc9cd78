// Python bindings for the core operations. Signals cross the boundary as
// complex128 numpy arrays plus the grid extent L; 2-d arrays map to 2-d grids.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frlp/checks.hpp"
#include "frlp/dyadic.hpp"
#include "frlp/frft.hpp"
#include "frlp/limitlaws.hpp"
#include "frlp/lp.hpp"
#include "frlp/multiplier.hpp"
#include "frlp/oscillation.hpp"
#include "frlp/potentials.hpp"
#include "frlp/rng.hpp"
#include "frlp/symbols.hpp"

namespace py = pybind11;
using namespace frlp;

namespace {

using Array = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

Signal to_signal(const Array& arr, double extent) {
    auto buf = arr.request();
    if (buf.ndim != 1 && buf.ndim != 2)
        throw py::value_error("expected a 1-d or 2-d complex array");
    int dim = int(buf.ndim);
    int n = int(buf.shape[0]);
    if (dim == 2 && buf.shape[1] != buf.shape[0])
        throw py::value_error("2-d signals must be square");
    GridSpec g = make_grid(dim, extent, n);
    const auto* data = static_cast<const std::complex<double>*>(buf.ptr);
    std::vector<cplx> v(data, data + g.size());
    return Signal(g, std::move(v));
}

Array from_signal(const Signal& f) {
    if (f.grid.dim == 1) {
        Array out(py::ssize_t(f.grid.samples));
        std::copy(f.v.begin(), f.v.end(), out.mutable_data());
        return out;
    }
    Array out({py::ssize_t(f.grid.samples), py::ssize_t(f.grid.samples)});
    std::copy(f.v.begin(), f.v.end(), out.mutable_data());
    return out;
}

FracParam param(double alpha) { return frac_param(alpha); }

std::optional<FracParam> opt_param(std::optional<double> alpha) {
    if (!alpha) return std::nullopt;
    return frac_param(*alpha);
}

Frame make_frame(const std::string& name, std::optional<double> alpha) {
    if (name == "classical") return Frame::classical();
    if (!alpha) throw py::value_error("frame '" + name + "' needs alpha");
    if (name == "conjugated") return Frame::conjugated(frac_param(*alpha));
    if (name == "pullback") return Frame::pullback(frac_param(*alpha));
    throw py::value_error("unknown frame: " + name);
}

PotentialSpec make_potential(const std::string& kind, double order) {
    if (kind == "riesz") return riesz_potential(order);
    if (kind == "bessel") return bessel_potential(order);
    if (kind == "homog_deriv") return homog_derivative(order, DcPolicy::zero);
    if (kind == "inhomog_deriv") return inhomog_derivative(order);
    if (kind == "frac_laplacian") return frac_laplacian(order, DcPolicy::zero);
    throw py::value_error("unknown potential kind: " + kind);
}

} // namespace

PYBIND11_MODULE(_frlp, m) {
    m.doc() = "fractional Fourier Littlewood-Paley toolbox (C++ core)";

    py::register_exception<Error>(m, "FrlpError");

    m.def("descriptors", [](double alpha) {
        FracParam p = param(alpha);
        py::dict d;
        d["alpha"] = p.alpha;
        d["s"] = p.s;
        d["kappa"] = p.kappa;
        d["deviation"] = p.deviation;
        return d;
    }, py::arg("alpha"));

    m.def("effective_radius",
          [](double alpha, double R) { return effective_radius(param(alpha), R); },
          py::arg("alpha"), py::arg("R"));

    m.def("validate_sampling", [](int samples, double extent, double alpha) {
        GridSpec g = make_grid(1, extent, samples);
        auto r = validate_sampling(g, param(alpha));
        py::dict d;
        d["ok"] = r.ok;
        d["chirp_freq"] = r.chirp_freq;
        d["nyquist"] = r.nyquist;
        d["margin"] = r.margin;
        return d;
    }, py::arg("samples"), py::arg("extent"), py::arg("alpha"));

    m.def("lp_norm",
          [](const Array& a, double extent, double p) { return lp_norm(to_signal(a, extent), p); },
          py::arg("values"), py::arg("extent"), py::arg("p"));

    m.def("weak_norm",
          [](const Array& a, double extent, double p) {
              return weak_norm_estimate(to_signal(a, extent), p);
          },
          py::arg("values"), py::arg("extent"), py::arg("p"));

    m.def("chirp_mul",
          [](const Array& a, double extent, double alpha, bool inverse) {
              return from_signal(chirp_mul(to_signal(a, extent), param(alpha),
                                           inverse ? ChirpDirection::inverse
                                                   : ChirpDirection::forward));
          },
          py::arg("values"), py::arg("extent"), py::arg("alpha"), py::arg("inverse") = false);

    m.def("frft",
          [](const Array& a, double extent, double alpha) {
              Spectrum F = frft(to_signal(a, extent), param(alpha));
              Signal holder(F.grid);
              holder.v = F.v;
              return from_signal(holder);
          },
          py::arg("values"), py::arg("extent"), py::arg("alpha"));

    m.def("ifrft",
          [](const Array& a, double extent, double alpha) {
              Signal holder = to_signal(a, extent);
              Spectrum F(holder.grid);
              F.v = holder.v;
              return from_signal(ifrft(F, param(alpha)));
          },
          py::arg("values"), py::arg("extent"), py::arg("alpha"));

    m.def("apply_multiplier",
          [](const std::string& symbol, const Array& a, double extent,
             std::optional<double> alpha, const std::string& route) {
              Signal f = to_signal(a, extent);
              Symbol sym = parse_symbol(symbol);
              if (!alpha) return from_signal(apply_multiplier(sym, f));
              MultiplierRoute r = route == "definition" ? MultiplierRoute::definition
                                                        : MultiplierRoute::conjugation;
              return from_signal(apply_frft_multiplier(sym, f, param(*alpha), r));
          },
          py::arg("symbol"), py::arg("values"), py::arg("extent"),
          py::arg("alpha") = std::nullopt, py::arg("route") = "conjugation");

    m.def("band_selector",
          [](const std::string& symbol, double R, const Array& a, double extent, double alpha) {
              return from_signal(band_selector(parse_symbol(symbol), R, to_signal(a, extent),
                                               param(alpha)));
          },
          py::arg("symbol"), py::arg("R"), py::arg("values"), py::arg("extent"),
          py::arg("alpha"));

    m.def("square_function",
          [](const Array& a, double extent, int jmin, int jmax, std::optional<double> alpha) {
              Signal f = to_signal(a, extent);
              auto bank = build_bank(f.grid, jmin, jmax);
              return from_signal(square_function(f, bank, opt_param(alpha)));
          },
          py::arg("values"), py::arg("extent"), py::arg("jmin"), py::arg("jmax"),
          py::arg("alpha") = std::nullopt);

    m.def("lp_block",
          [](const Array& a, double extent, int jmin, int jmax, int j,
             std::optional<double> alpha) {
              Signal f = to_signal(a, extent);
              auto bank = build_bank(f.grid, jmin, jmax);
              return from_signal(lp_block(f, bank, j, opt_param(alpha)));
          },
          py::arg("values"), py::arg("extent"), py::arg("jmin"), py::arg("jmax"), py::arg("j"),
          py::arg("alpha") = std::nullopt);

    m.def("besov_norm",
          [](const Array& a, double extent, int jmin, int jmax, double s, double p, double q,
             std::optional<double> alpha) {
              Signal f = to_signal(a, extent);
              auto bank = build_bank(f.grid, jmin, jmax);
              return besov_norm(f, bank, s, p, q, opt_param(alpha)).value;
          },
          py::arg("values"), py::arg("extent"), py::arg("jmin"), py::arg("jmax"), py::arg("s"),
          py::arg("p"), py::arg("q"), py::arg("alpha") = std::nullopt);

    m.def("triebel_norm",
          [](const Array& a, double extent, int jmin, int jmax, double s, double p, double q,
             std::optional<double> alpha) {
              Signal f = to_signal(a, extent);
              auto bank = build_bank(f.grid, jmin, jmax);
              return triebel_norm(f, bank, s, p, q, opt_param(alpha)).value;
          },
          py::arg("values"), py::arg("extent"), py::arg("jmin"), py::arg("jmax"), py::arg("s"),
          py::arg("p"), py::arg("q"), py::arg("alpha") = std::nullopt);

    m.def("haar_transform",
          [](const Array& a, double extent, std::optional<double> alpha) {
              Signal f = to_signal(a, extent);
              int depth = 0;
              while ((1 << depth) < f.grid.samples) ++depth;
              auto tree = make_tree(f.grid, 0, depth);
              auto hc = haar_transform(f, tree, opt_param(alpha));
              py::list entries;
              for (const auto& e : hc.entries) {
                  py::dict d;
                  d["scale"] = e.scale;
                  d["offset"] = e.offset;
                  d["coef"] = e.coef;
                  entries.append(d);
              }
              py::dict out;
              out["scaling"] = hc.scaling;
              out["entries"] = entries;
              return out;
          },
          py::arg("values"), py::arg("extent"), py::arg("alpha") = std::nullopt);

    m.def("dyadic_square_function",
          [](const Array& a, double extent, std::optional<double> alpha) {
              Signal f = to_signal(a, extent);
              int depth = 0;
              while ((1 << depth) < f.grid.samples) ++depth;
              auto tree = make_tree(f.grid, 0, depth);
              return from_signal(dyadic_square_function(f, tree, opt_param(alpha)));
          },
          py::arg("values"), py::arg("extent"), py::arg("alpha") = std::nullopt);

    m.def("apply_potential",
          [](const std::string& kind, double order, const Array& a, double extent,
             const std::string& frame, std::optional<double> alpha) {
              return from_signal(apply_potential(make_potential(kind, order),
                                                 to_signal(a, extent),
                                                 make_frame(frame, alpha)));
          },
          py::arg("kind"), py::arg("order"), py::arg("values"), py::arg("extent"),
          py::arg("frame") = "classical", py::arg("alpha") = std::nullopt);

    m.def("pullback_norm",
          [](const Array& a, double extent, double r, double alpha) {
              return pullback_norm(to_signal(a, extent), r, param(alpha)).value;
          },
          py::arg("values"), py::arg("extent"), py::arg("r"), py::arg("alpha"));

    m.def("twisted_product",
          [](const std::vector<Array>& arrays, double extent, double alpha) {
              std::vector<Signal> fs;
              for (const auto& a : arrays) fs.push_back(to_signal(a, extent));
              return from_signal(twisted_product(fs, param(alpha)));
          },
          py::arg("values"), py::arg("extent"), py::arg("alpha"));

    m.def("twisted_convolution",
          [](const Array& a, const Array& b, double extent, double alpha) {
              return from_signal(twisted_convolution(to_signal(a, extent),
                                                     to_signal(b, extent), param(alpha)));
          },
          py::arg("omega"), py::arg("u"), py::arg("extent"), py::arg("alpha"));

    m.def("kato_ponce_region",
          [](double s, double r, int n) {
              return kato_ponce_region(s, r, n) == KatoPonceRegion::allowed
                         ? std::string("allowed")
                         : std::string("forbidden");
          },
          py::arg("s"), py::arg("r"), py::arg("n"));

    m.def("bmo_norm",
          [](const Array& a, double extent, double alpha, double r) {
              Signal b = to_signal(a, extent);
              auto cubes = all_dyadic_cubes(b.grid);
              return bmo_alpha_norm(b, cubes, param(alpha), r);
          },
          py::arg("values"), py::arg("extent"), py::arg("alpha"), py::arg("r") = 1.0);

    m.def("sharp_maximal",
          [](const Array& a, double extent, double alpha) {
              Signal b = to_signal(a, extent);
              auto cubes = all_dyadic_cubes(b.grid);
              return from_signal(sharp_maximal(b, cubes, param(alpha)));
          },
          py::arg("values"), py::arg("extent"), py::arg("alpha"));

    m.def("carleson_score",
          [](const Array& a, double extent, double alpha) {
              Signal b = to_signal(a, extent);
              auto cubes = all_dyadic_cubes(b.grid);
              return carleson_score(b, param(alpha), default_psi(), dyadic_scales(b.grid), cubes);
          },
          py::arg("values"), py::arg("extent"), py::arg("alpha"));

    m.def("hardy_quasinorm",
          [](const Array& a, double extent, int jmin, int jmax, double alpha, double p) {
              Signal f = to_signal(a, extent);
              auto bank = build_bank(f.grid, jmin, jmax);
              return hardy_square_quasinorm(f, bank, param(alpha), p);
          },
          py::arg("values"), py::arg("extent"), py::arg("jmin"), py::arg("jmax"),
          py::arg("alpha"), py::arg("p"));

    m.def("synthesize_atom",
          [](int samples, double extent, int offset, int side, double p, double q, double alpha,
             std::uint64_t seed) {
              GridSpec g = make_grid(1, extent, samples);
              return from_signal(synthesize_atom(g, Cube{offset, 0, side}, p, q,
                                                 param(alpha), seed));
          },
          py::arg("samples"), py::arg("extent"), py::arg("offset"), py::arg("side"),
          py::arg("p"), py::arg("q"), py::arg("alpha"), py::arg("seed") = 0);

    m.def("validate_atom",
          [](const Array& a, double extent, int offset, int side, double p, double q,
             double alpha) {
              Signal A = to_signal(a, extent);
              auto rep = validate_atom(A, Cube{offset, 0, side}, p, q, param(alpha));
              py::dict d;
              d["pass"] = rep.pass;
              d["support_ok"] = rep.support_ok;
              d["size_ok"] = rep.size_ok;
              d["size_norm"] = rep.size_norm;
              d["size_bound"] = rep.size_bound;
              return d;
          },
          py::arg("values"), py::arg("extent"), py::arg("offset"), py::arg("side"),
          py::arg("p"), py::arg("q"), py::arg("alpha"));

    m.def("classify_regime",
          [](double alpha, double delta1, double delta2, double s_min) {
              return std::string(regime_name(
                  classify_regime(param(alpha), RegimeConfig{delta1, delta2, s_min})));
          },
          py::arg("alpha"), py::arg("delta1") = 0.1, py::arg("delta2") = 3.0,
          py::arg("s_min") = 0.05);

    m.def("run_checks",
          [](const std::string& filter, std::uint64_t seed, bool strict) {
              checks::RunOptions opt;
              opt.filter = filter;
              opt.seed = seed;
              opt.strict = strict;
              auto rep = checks::run_checks(opt);
              py::dict d;
              d["json"] = checks::report_to_json(rep, opt);
              d["gated_failures"] = rep.gated_failures;
              d["warnings"] = rep.warnings;
              d["entries"] = int(rep.rows.size());
              return d;
          },
          py::arg("filter") = "", py::arg("seed") = 7, py::arg("strict") = false);

    m.def("gen_gaussian",
          [](int samples, double extent, double sigma, double center, double mod_freq) {
              return from_signal(gen_gaussian(make_grid(1, extent, samples), sigma, center,
                                              mod_freq));
          },
          py::arg("samples"), py::arg("extent"), py::arg("sigma") = 1.0,
          py::arg("center") = 0.0, py::arg("mod_freq") = 0.0);
}
