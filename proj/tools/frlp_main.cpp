// frlp: fractional Littlewood-Paley toolbox CLI.
//
// Subcommands: frft, decompose, norms, check, gen, descriptors.
// Exit codes: 0 ok, 1 check failure, 2 I/O, 3 sampling guard, 4 usage.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "frlp/checks.hpp"
#include "frlp/dyadic.hpp"
#include "frlp/frft.hpp"
#include "frlp/io.hpp"
#include "frlp/limitlaws.hpp"
#include "frlp/lp.hpp"
#include "frlp/multiplier.hpp"
#include "frlp/oscillation.hpp"
#include "frlp/potentials.hpp"
#include "frlp/rng.hpp"
#include "frlp/symbols.hpp"

namespace {

using namespace frlp;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitIo = 2;
constexpr int kExitSampling = 3;
constexpr int kExitUsage = 4;

int code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::IoError: return kExitIo;
        case ErrorCode::ChirpAliased: return kExitSampling;
        default: return kExitUsage;
    }
}

struct GridArg {
    double L = 16.0;
    int N = 256;
};

GridArg parse_grid(const std::string& text) {
    GridArg g;
    auto comma = text.find(',');
    if (comma == std::string::npos) fail(ErrorCode::UsageError, "--grid expects L,N");
    g.L = std::stod(text.substr(0, comma));
    g.N = std::stoi(text.substr(comma + 1));
    return g;
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

void print_descriptors(const FracParam& p, const GridSpec& grid) {
    auto rep = validate_sampling(grid, p);
    std::cout << "alpha      = " << fmt(p.alpha) << "\n"
              << "s_alpha    = " << fmt(p.s) << "\n"
              << "kappa      = " << fmt(p.kappa) << "\n"
              << "deviation  = " << fmt(p.deviation) << "\n"
              << "R_eff(1)   = " << fmt(effective_radius(p, 1.0)) << "\n"
              << "sampling   = " << (rep.ok ? "ok" : "chirp-aliased") << " (chirp_freq="
              << fmt(rep.chirp_freq) << ", nyquist=" << fmt(rep.nyquist)
              << ", margin=" << fmt(rep.margin) << ")\n";
}

int cmd_frft(const std::string& input, double alpha, const std::string& out,
             const std::string& format) {
    Signal f = io::read_signal(input);
    FracParam p = frac_param(alpha);
    print_descriptors(p, f.grid);
    std::cout << "boundary residual = " << fmt(boundary_residual(f)) << "\n";
    auto rep = validate_sampling(f.grid, p);
    if (!rep.ok) {
        std::cerr << "error: chirp aliased (chirp_freq=" << fmt(rep.chirp_freq)
                  << " > " << fmt(rep.margin) << " x nyquist=" << fmt(rep.nyquist) << ")\n";
        return kExitSampling;
    }
    Spectrum F = frft(f, p);
    Signal holder(F.grid);
    holder.v = F.v;
    io::write_signal(out, holder, io::format_from_name(format));
    std::cout << "wrote spectrum to " << out << "\n";
    return kExitOk;
}

int cmd_decompose(const std::string& input, double alpha, int jmin, int jmax,
                  const std::string& outdir, const std::string& format, bool homogeneous) {
    Signal f = io::read_signal(input);
    std::optional<FracParam> p;
    if (alpha != 0.0) p = frac_param(alpha);
    auto bank = build_bank(f.grid, jmin, jmax);
    auto dec = decompose(f, bank, p, homogeneous);
    auto rec = reconstruct(dec);

    std::filesystem::path dir(outdir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!std::filesystem::is_directory(dir)) fail(ErrorCode::IoError, "cannot create " + outdir);

    auto fmt_name = io::format_from_name(format);
    std::ostringstream ledger;
    ledger << "{\n  \"schema\": \"frlp-decomposition v1\",\n";
    ledger << "  \"alpha\": " << (p ? fmt(p->alpha) : "null") << ",\n";
    ledger << "  \"levels\": [\n";
    if (dec.lowpass)
        io::write_signal(dir / ("block_lowpass." + format), *dec.lowpass, fmt_name);
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        const auto& [j, blk] = dec.blocks[i];
        std::string name = "block_j" + std::to_string(j) + "." + format;
        io::write_signal(dir / name, blk, fmt_name);
        ledger << "    {\"j\": " << j << ", \"l2\": " << fmt(lp_norm(blk, 2.0)) << ", \"file\": \""
               << name << "\"}" << (i + 1 < dec.blocks.size() ? "," : "") << "\n";
    }
    ledger << "  ],\n";
    ledger << "  \"lowpass_l2\": " << (dec.lowpass ? fmt(lp_norm(*dec.lowpass, 2.0)) : "null")
           << ",\n";
    ledger << "  \"residual_l2\": " << fmt(rec.residual_l2) << ",\n";
    ledger << "  \"residual_rel\": " << fmt(rec.residual_rel) << "\n}\n";
    io::write_text(dir / "decomposition.json", ledger.str());
    std::cout << "reconstruction residual (relative): " << fmt(rec.residual_rel) << "\n";
    return kExitOk;
}

int cmd_norms(const std::string& input, double alpha, const std::string& space, double s,
              double pp, double q, double gamma, double r, int jmin, int jmax) {
    Signal f = io::read_signal(input);
    std::optional<FracParam> p;
    if (alpha != 0.0) p = frac_param(alpha);

    if (space == "besov" || space == "triebel" || space == "sobolev" || space == "lipschitz" ||
        space == "hardy") {
        auto bank = build_bank(f.grid, jmin, jmax);
        if (space == "besov") {
            auto rep = besov_norm(f, bank, s, pp, q, p);
            std::cout << "besov(s=" << s << ",p=" << pp << ",q=" << q << ") = " << fmt(rep.value)
                      << "\n";
            std::cout << "  lowpass = " << fmt(rep.lowpass_term) << "\n";
            for (const auto& lv : rep.levels)
                std::cout << "  j=" << lv.j << "  2^{js}=" << fmt(lv.weight)
                          << "  ||block||_p=" << fmt(lv.block_norm) << "\n";
        } else if (space == "triebel") {
            auto rep = triebel_norm(f, bank, s, pp, q, p);
            std::cout << "triebel(s=" << s << ",p=" << pp << ",q=" << q << ") = "
                      << fmt(rep.value) << "\n";
        } else if (space == "sobolev") {
            auto rep = sobolev_norm(f, bank, s, pp, p);
            std::cout << "sobolev(s=" << s << ",p=" << pp << ") = " << fmt(rep.value) << "\n";
        } else if (space == "lipschitz") {
            auto rep = lipschitz_norm(f, bank, gamma, LipschitzVariant::inhomogeneous, p);
            std::cout << "lipschitz(gamma=" << gamma << ") = " << fmt(rep.value) << "\n";
        } else {
            if (!p) fail(ErrorCode::UsageError, "hardy norm needs --alpha");
            double v = hardy_square_quasinorm(f, bank, *p, pp);
            std::cout << "hardy(p=" << pp << ") = " << fmt(v) << "\n";
        }
        return kExitOk;
    }
    if (space == "bmo") {
        if (!p) fail(ErrorCode::UsageError, "bmo norm needs --alpha");
        auto cubes = all_dyadic_cubes(f.grid);
        double v = bmo_alpha_norm(f, cubes, *p, r);
        std::cout << "bmo(r=" << r << ") = " << fmt(v) << "\n";
        return kExitOk;
    }
    if (space == "pullback") {
        if (!p) fail(ErrorCode::UsageError, "pullback norm needs --alpha");
        auto pn = pullback_norm(f, r, *p);
        std::cout << "pullback(r=" << r << ") = " << fmt(pn.value) << "\n";
        return kExitOk;
    }
    fail(ErrorCode::UsageError, "unknown space: " + space);
}

int cmd_check(const std::string& filter, std::uint64_t seed, bool strict, int jobs,
              const std::string& out, bool timings) {
    checks::RunOptions opt;
    opt.filter = filter;
    opt.seed = seed;
    opt.strict = strict;
    opt.jobs = jobs;
    opt.timings = timings;
    auto report = checks::run_checks(opt);
    std::cout << checks::report_summary(report);
    if (!out.empty()) io::write_text(out, checks::report_to_json(report, opt));
    return report.gated_failures == 0 ? kExitOk : kExitCheckFailure;
}

int cmd_gen(const std::string& kind, const GridArg& grid, double alpha, double sigma,
            double param, std::uint64_t seed, const std::string& out,
            const std::string& format) {
    GridSpec g = make_grid(1, grid.L, grid.N);
    Signal f(g);
    if (kind == "gaussian") {
        f = gen_gaussian(g, sigma, 0.0, param);
    } else if (kind == "chirp") {
        f = gen_chirp(g, param == 0.0 ? 1.0 : param, sigma);
    } else if (kind == "bump") {
        f = gen_bump(g, sigma);
    } else if (kind == "haar-atom") {
        auto tree = make_tree(g, 0, int(std::round(std::log2(g.samples))));
        HaarCoefficients hc;
        hc.k_min = tree.k_min;
        hc.k_max = tree.k_max;
        hc.extent = g.extent;
        if (alpha != 0.0) hc.frac = frac_param(alpha);
        int scale = std::max(0, int(param));
        hc.entries.push_back({scale, 0, cplx{1.0, 0.0}});
        f = inverse_haar(hc, tree);
    } else if (kind == "bmo-corpus") {
        Rng rng(seed);
        Signal w = gen_log_bmo(g, rng.uniform(-2.0, 2.0), 1e-3);
        f = alpha != 0.0 ? chirp_mul(w, frac_param(alpha), ChirpDirection::inverse) : w;
    } else if (kind == "frft-atom") {
        if (alpha == 0.0) fail(ErrorCode::UsageError, "frft-atom needs --alpha");
        int side = std::max(8, int(param));
        Cube Q{g.samples / 2 - side / 2, 0, side};
        f = synthesize_atom(g, Q, 1.0, 2.0, frac_param(alpha), seed);
    } else {
        fail(ErrorCode::UsageError, "unknown kind: " + kind);
    }
    io::write_signal(out, f, io::format_from_name(format));
    std::cout << "wrote " << kind << " signal to " << out << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional Littlewood-Paley toolbox"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string grid_text = "16,256";
    double alpha = 0.0;
    std::string out;
    std::uint64_t seed = 7;
    bool strict = false;
    std::string format = "csv";
    app.add_option("--grid", grid_text, "grid as L,N");
    app.add_option("--alpha", alpha, "fractional angle");
    app.add_option("--out", out, "output path");
    app.add_option("--seed", seed, "random seed");
    app.add_flag("--strict", strict, "empirical entries gate the exit code");
    app.add_option("--format", format, "signal format: csv|bin");

    auto* cfrft = app.add_subcommand("frft", "fractional transform of a signal file");
    cfrft->fallthrough();
    std::string input;
    cfrft->add_option("input", input, "signal file")->required();

    auto* cdec = app.add_subcommand("decompose", "dyadic block decomposition");
    cdec->fallthrough();
    int jmin = -2, jmax = 2;
    bool homogeneous = false;
    cdec->add_option("input", input, "signal file")->required();
    cdec->add_option("--jmin", jmin, "lowest level");
    cdec->add_option("--jmax", jmax, "highest level");
    cdec->add_flag("--homogeneous", homogeneous, "skip the lowpass piece");

    auto* cnorm = app.add_subcommand("norms", "function-space norms");
    cnorm->fallthrough();
    std::string space = "besov";
    double s = 1.0, pp = 2.0, q = 2.0, gamma = 1.0, r = 2.0;
    cnorm->add_option("input", input, "signal file")->required();
    cnorm->add_option("--space", space, "besov|triebel|sobolev|lipschitz|bmo|hardy|pullback");
    cnorm->add_option("-s", s, "smoothness order");
    cnorm->add_option("-p", pp, "integrability exponent");
    cnorm->add_option("-q", q, "summability exponent");
    cnorm->add_option("--gamma", gamma, "Lipschitz order");
    cnorm->add_option("-r", r, "oscillation / pullback exponent");
    cnorm->add_option("--jmin", jmin, "lowest level");
    cnorm->add_option("--jmax", jmax, "highest level");

    auto* cchk = app.add_subcommand("check", "run the identity registry");
    cchk->fallthrough();
    std::string filter;
    int jobs = 1;
    bool timings = false;
    cchk->add_option("--filter", filter, "regex over entry ids");
    cchk->add_option("--jobs", jobs, "worker threads");
    cchk->add_flag("--timings", timings, "include runtimes in the JSON report");

    auto* cgen = app.add_subcommand("gen", "generate test signals");
    cgen->fallthrough();
    std::string kind = "gaussian";
    double sigma = 1.0, param = 0.0;
    cgen->add_option("kind", kind, "gaussian|chirp|bump|haar-atom|bmo-corpus|frft-atom")
        ->required();
    cgen->add_option("--sigma", sigma, "width");
    cgen->add_option("--param", param, "kind-specific parameter");

    auto* cdesc = app.add_subcommand("descriptors", "print fractional descriptors");
    cdesc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        GridArg garg = parse_grid(grid_text);
        if (cfrft->parsed()) {
            if (out.empty()) fail(ErrorCode::UsageError, "--out is required");
            if (alpha == 0.0) fail(ErrorCode::AngleSingular, "alpha is a multiple of pi");
            return cmd_frft(input, alpha, out, format);
        }
        if (cdec->parsed()) {
            if (out.empty()) fail(ErrorCode::UsageError, "--out directory is required");
            return cmd_decompose(input, alpha, jmin, jmax, out, format, homogeneous);
        }
        if (cnorm->parsed()) return cmd_norms(input, alpha, space, s, pp, q, gamma, r, jmin, jmax);
        if (cchk->parsed()) return cmd_check(filter, seed, strict, jobs, out, timings);
        if (cgen->parsed()) {
            if (out.empty()) fail(ErrorCode::UsageError, "--out is required");
            return cmd_gen(kind, garg, alpha, sigma, param, seed, out, format);
        }
        if (cdesc->parsed()) {
            if (alpha == 0.0) fail(ErrorCode::AngleSingular, "alpha is a multiple of pi");
            print_descriptors(frac_param(alpha), make_grid(1, garg.L, garg.N));
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
