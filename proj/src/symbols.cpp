#include "frlp/symbols.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace frlp {

namespace {
constexpr double kPi = std::numbers::pi;

double glue(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
} // namespace

double theta_profile(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    double a = glue(2.0 - r);
    double b = glue(r - 1.0);
    return a / (a + b);
}

Symbol rescale_symbol(const Symbol& m, const FracParam& p) {
    double st = p.sin_alpha;
    SymbolFn f = m.eval;
    std::ostringstream name;
    name << "rescale(" << m.name << ";" << st << ")";
    return Symbol{[f, st](const FreqPoint& q) {
                      FreqPoint r = q;
                      r.v[0] *= st;
                      r.v[1] *= st;
                      return f(r);
                  },
                  name.str()};
}

Symbol sym_one() {
    return Symbol{[](const FreqPoint&) { return cplx{1.0, 0.0}; }, "one"};
}

Symbol sym_ball(double R) {
    std::ostringstream n;
    n << "ball(" << R << ")";
    return Symbol{[R](const FreqPoint& q) { return cplx{q.radius() <= R ? 1.0 : 0.0, 0.0}; }, n.str()};
}

Symbol sym_annulus(double a, double b) {
    std::ostringstream n;
    n << "annulus(" << a << "," << b << ")";
    return Symbol{[a, b](const FreqPoint& q) {
                      double r = q.radius();
                      return cplx{(r >= a && r <= b) ? 1.0 : 0.0, 0.0};
                  },
                  n.str()};
}

Symbol sym_smoothstep(double r0, double r1) {
    std::ostringstream n;
    n << "smoothstep(" << r0 << "," << r1 << ")";
    return Symbol{[r0, r1](const FreqPoint& q) {
                      double r = q.radius();
                      // map [r0, r1] onto the profile's [1, 2]
                      double t = 1.0 + (r - r0) / (r1 - r0);
                      return cplx{theta_profile(t), 0.0};
                  },
                  n.str()};
}

Symbol sym_smooth_annulus(int j) {
    std::ostringstream n;
    n << "dyadic_annulus(" << j << ")";
    double lo = std::ldexp(1.0, j - 1);
    double hi = std::ldexp(1.0, j);
    return Symbol{[lo, hi](const FreqPoint& q) {
                      double r = q.radius();
                      return cplx{theta_profile(r / hi) - theta_profile(r / lo), 0.0};
                  },
                  n.str()};
}

Symbol sym_riesz(double s) {
    std::ostringstream n;
    n << "riesz(" << s << ")";
    return Symbol{[s](const FreqPoint& q) {
                      double r = q.radius();
                      if (r == 0.0) return cplx{0.0, 0.0};
                      return cplx{std::pow(2.0 * kPi * r, -s), 0.0};
                  },
                  n.str()};
}

Symbol sym_bessel(double sigma) {
    std::ostringstream n;
    n << "bessel(" << sigma << ")";
    return Symbol{[sigma](const FreqPoint& q) {
                      double r = q.radius();
                      return cplx{std::pow(1.0 + 4.0 * kPi * kPi * r * r, -sigma / 2.0), 0.0};
                  },
                  n.str()};
}

Symbol sym_bochner_riesz(double lambda, double R) {
    std::ostringstream n;
    n << "br(" << lambda << "," << R << ")";
    return Symbol{[lambda, R](const FreqPoint& q) {
                      double r = q.radius();
                      double t = 1.0 - (r * r) / (R * R);
                      if (t <= 0.0) return cplx{0.0, 0.0};
                      return cplx{lambda == 0.0 ? 1.0 : std::pow(t, lambda), 0.0};
                  },
                  n.str()};
}

Symbol sym_gauss(double sigma) {
    std::ostringstream n;
    n << "gauss(" << sigma << ")";
    return Symbol{[sigma](const FreqPoint& q) {
                      double r = q.radius() * sigma;
                      return cplx{std::exp(-kPi * r * r), 0.0};
                  },
                  n.str()};
}

Symbol sym_translation(double a) {
    std::ostringstream n;
    n << "shift(" << a << ")";
    return Symbol{[a](const FreqPoint& q) {
                      double ph = -2.0 * kPi * a * q.v[0];
                      return cplx{std::cos(ph), std::sin(ph)};
                  },
                  n.str()};
}

Symbol sym_step_levels(double r_in, double level_in, double level_out, double r_out) {
    std::ostringstream n;
    n << "steps(" << r_in << "," << level_in << "," << level_out << "," << r_out << ")";
    return Symbol{[=](const FreqPoint& q) {
                      double r = q.radius();
                      if (r <= r_in) return cplx{level_in, 0.0};
                      if (r <= r_out) return cplx{level_out, 0.0};
                      return cplx{0.0, 0.0};
                  },
                  n.str()};
}

Symbol sym_oscillatory(double t) {
    std::ostringstream n;
    n << "osc(" << t << ")";
    return Symbol{[t](const FreqPoint& q) {
                      double r = q.radius();
                      if (r == 0.0) return cplx{1.0, 0.0};
                      double ph = t * std::log(r);
                      return cplx{std::cos(ph), std::sin(ph)};
                  },
                  n.str()};
}

Symbol parse_symbol(const std::string& text) {
    auto open = text.find('(');
    std::string name = open == std::string::npos ? text : text.substr(0, open);
    std::vector<double> args;
    if (open != std::string::npos) {
        auto close = text.rfind(')');
        if (close == std::string::npos || close < open)
            fail(ErrorCode::UsageError, "malformed symbol: " + text);
        std::string inner = text.substr(open + 1, close - open - 1);
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) args.push_back(std::stod(tok));
        }
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            fail(ErrorCode::UsageError, "symbol " + name + " expects " + std::to_string(k) + " args");
    };
    if (name == "one") { want(0); return sym_one(); }
    if (name == "ball") { want(1); return sym_ball(args[0]); }
    if (name == "annulus") { want(2); return sym_annulus(args[0], args[1]); }
    if (name == "smoothstep") { want(2); return sym_smoothstep(args[0], args[1]); }
    if (name == "riesz") { want(1); return sym_riesz(args[0]); }
    if (name == "bessel") { want(1); return sym_bessel(args[0]); }
    if (name == "br") { want(2); return sym_bochner_riesz(args[0], args[1]); }
    if (name == "gauss") { want(1); return sym_gauss(args[0]); }
    fail(ErrorCode::UsageError, "unknown symbol: " + name);
}

std::vector<cplx> sample_symbol(const Symbol& m, const GridSpec& g) {
    const int n = g.samples;
    std::vector<cplx> out(g.size());
    if (g.dim == 1) {
        for (int i = 0; i < n; ++i) {
            FreqPoint q{{g.freq(i), 0.0}, 1};
            out[std::size_t(i)] = m.eval(q);
        }
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                FreqPoint q{{g.freq(a), g.freq(b)}, 2};
                out[std::size_t(a) * n + b] = m.eval(q);
            }
    }
    return out;
}

} // namespace frlp
