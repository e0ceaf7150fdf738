#include "fdwave/problem.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "fdwave/expression.hpp"
#include "fdwave/special.hpp"

namespace fdw {

namespace {

// dense sampling factor for hypothesis checks
constexpr std::size_t kDense = 4;

// verifies sign*fn >= sign*bound on the dense grid (sign=-1 flips to <=)
void check_bound(ValidationReport& rep, const std::string& name,
                 const UniformGrid& g, const SpaceTimeFn& fn, double sign,
                 double bound) {
    HypothesisCheck c;
    c.name = name;
    const std::size_t nx = g.nx() * kDense, nt = g.nt() * kDense;
    double worst = 1e300;
    for (std::size_t n = 0; n <= nt; ++n) {
        const double t = g.T() * static_cast<double>(n) / static_cast<double>(nt);
        for (std::size_t i = 0; i <= nx; ++i) {
            const double x = g.l() * static_cast<double>(i) / static_cast<double>(nx);
            const double v = sign * fn(x, t);
            if (v < worst) {
                worst = v;
                c.worst_value = fn(x, t);
                c.worst_x = x;
                c.worst_t = t;
            }
        }
    }
    c.observed_bound = sign * worst;
    c.pass = worst >= sign * bound - 1e-12;
    rep.checks.push_back(c);
}

SpaceTimeFn dt_of(const SpaceTimeFn& fn, double T) {
    const double eps = std::cbrt(2.2e-16) * std::max(T, 1.0);
    return [fn, eps](double x, double t) {
        return (fn(x, t + eps) - fn(x, t - eps)) / (2.0 * eps);
    };
}

TimeFn dt_of(const TimeFn& fn, double T) {
    const double eps = std::cbrt(2.2e-16) * std::max(T, 1.0);
    return [fn, eps](double t) { return (fn(t + eps) - fn(t - eps)) / (2.0 * eps); };
}

void check_time_bound(ValidationReport& rep, const std::string& name,
                      const UniformGrid& g, const TimeFn& fn, double sign,
                      double bound) {
    HypothesisCheck c;
    c.name = name;
    const std::size_t nt = g.nt() * kDense;
    double worst = 1e300;
    for (std::size_t n = 0; n <= nt; ++n) {
        const double t = g.T() * static_cast<double>(n) / static_cast<double>(nt);
        const double v = sign * fn(t);
        if (v < worst) {
            worst = v;
            c.worst_value = fn(t);
            c.worst_t = t;
        }
    }
    c.observed_bound = sign * worst;
    c.pass = worst >= sign * bound - 1e-12;
    rep.checks.push_back(c);
}

}  // namespace

ValidationReport validate(const ProblemSpec& spec, const UniformGrid& grid) {
    ValidationReport rep;
    const bool wave = spec.kind == EquationKind::Wave;
    const bool robin = spec.bc.kind == BCKind::Robin;

    // k >= c1 > 0 (all theorems)
    {
        HypothesisCheck c;
        c.name = "k >= c1 > 0";
        const std::size_t nx = grid.nx() * kDense, nt = grid.nt() * kDense;
        double kmin = 1e300;
        for (std::size_t n = 0; n <= nt; ++n) {
            const double t = grid.T() * static_cast<double>(n) / static_cast<double>(nt);
            for (std::size_t i = 0; i <= nx; ++i) {
                const double x = grid.l() * static_cast<double>(i) / static_cast<double>(nx);
                const double v = spec.coef.k(x, t);
                if (v < kmin) {
                    kmin = v;
                    c.worst_value = v;
                    c.worst_x = x;
                    c.worst_t = t;
                }
            }
        }
        c.observed_bound = kmin;  // inferred c1
        c.pass = spec.coef.c1 > 0.0 && kmin >= spec.coef.c1 - 1e-12;
        rep.checks.push_back(c);
    }

    if (!wave) {
        check_bound(rep, "q >= 0", grid, spec.coef.q, +1.0, 0.0);
    } else {
        check_bound(rep, "q >= m1 > 0", grid, spec.coef.q, +1.0, spec.coef.m1);
        rep.checks.back().pass = spec.coef.m1 > 0.0 &&
                                 rep.checks.back().observed_bound >= spec.coef.m1 - 1e-12;
        check_bound(rep, "q <= m2", grid, spec.coef.q, -1.0, spec.coef.m2);
        check_bound(rep, "k <= c2", grid, spec.coef.k, -1.0, spec.coef.c2);
        check_bound(rep, "|k_t| <= c3", grid,
                    [f = dt_of(spec.coef.k, grid.T())](double x, double t) {
                        return std::abs(f(x, t));
                    },
                    -1.0, spec.coef.c3 + 1e-8);
        check_bound(rep, "|q_t| <= c3", grid,
                    [f = dt_of(spec.coef.q, grid.T())](double x, double t) {
                        return std::abs(f(x, t));
                    },
                    -1.0, spec.coef.c3 + 1e-8);
        // u1 present
        HypothesisCheck c;
        c.name = "u1 present (wave)";
        c.pass = spec.init.u1.has_value();
        rep.checks.push_back(c);
    }

    if (!robin) {
        HypothesisCheck c;
        c.name = "u0 compatibility: u0(0) = u0(l) = 0";
        const double a = spec.init.u0(0.0), b = spec.init.u0(spec.l);
        c.pass = std::abs(a) <= 1e-12 && std::abs(b) <= 1e-12;
        c.worst_value = std::abs(a) > std::abs(b) ? a : b;
        c.worst_x = std::abs(a) > std::abs(b) ? 0.0 : spec.l;
        rep.checks.push_back(c);
    } else if (!wave) {
        check_time_bound(rep, "|beta1| <= beta", grid,
                         [f = spec.bc.beta1](double t) { return std::abs(f(t)); },
                         -1.0, spec.bc.beta);
        check_time_bound(rep, "|beta2| <= beta", grid,
                         [f = spec.bc.beta2](double t) { return std::abs(f(t)); },
                         -1.0, spec.bc.beta);
    } else {
        HypothesisCheck pos;
        pos.name = "beta > 0 declared (wave)";
        pos.pass = spec.bc.beta > 0.0;
        pos.observed_bound = spec.bc.beta;
        rep.checks.push_back(pos);
        check_time_bound(rep, "beta1 >= beta > 0", grid, spec.bc.beta1, +1.0,
                         spec.bc.beta);
        check_time_bound(rep, "beta2 >= beta > 0", grid, spec.bc.beta2, +1.0,
                         spec.bc.beta);
        check_time_bound(rep, "|beta1'| <= c4", grid,
                         [f = dt_of(spec.bc.beta1, grid.T())](double t) {
                             return std::abs(f(t));
                         },
                         -1.0, spec.bc.c4 + 1e-8);
        check_time_bound(rep, "|beta2'| <= c4", grid,
                         [f = dt_of(spec.bc.beta2, grid.T())](double t) {
                             return std::abs(f(t));
                         },
                         -1.0, spec.bc.c4 + 1e-8);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// manufactured catalog
// ---------------------------------------------------------------------------

namespace {

// time profile 1 + t^2 and its Caputo derivatives of order alpha and 1+alpha
struct PolyProfile {
    double alpha;
    double dt_alpha_coeff;   // d^alpha (t^2) = c * t^{2-alpha}
    double dt_1alpha_coeff;  // d^{1+alpha} (t^2) = c * t^{1-alpha}
};

PolyProfile profile(double alpha) {
    return {alpha, 2.0 / gamma_fn(3.0 - alpha), 2.0 / gamma_fn(2.0 - alpha)};
}

Manufactured make_d1(double alpha, bool varcoef) {
    Manufactured m;
    ProblemSpec& s = m.spec;
    s.kind = EquationKind::Diffusion;
    s.alpha = alpha;
    s.l = 1.0;
    s.T = 1.0;
    s.name = varcoef ? "diffusion-varcoef" : "diffusion-dirichlet-poly";
    const double l = s.l;
    const double w = M_PI / l;
    m.exact = [w](double x, double t) { return (1.0 + t * t) * std::sin(w * x); };
    m.exact_dt = [w](double x, double t) { return 2.0 * t * std::sin(w * x); };
    const PolyProfile p = profile(alpha);
    if (!varcoef) {
        s.coef.k = [](double, double) { return 1.0; };
        s.coef.q = [](double, double) { return 1.0; };
        s.coef.c1 = 1.0;
        s.coef.c2 = 1.0;
        s.coef.f = [p, w](double x, double t) {
            return p.dt_alpha_coeff * std::pow(t, 2.0 - p.alpha) * std::sin(w * x) +
                   (w * w + 1.0) * (1.0 + t * t) * std::sin(w * x);
        };
    } else {
        // k = 1 + 0.5 sin(pi x / l) e^{-t},  q = x t
        s.coef.k = [w](double x, double t) {
            return 1.0 + 0.5 * std::sin(w * x) * std::exp(-t);
        };
        s.coef.q = [](double x, double t) { return x * t; };
        s.coef.c1 = 1.0;
        s.coef.c2 = 1.5;
        s.coef.f = [p, w](double x, double t) {
            const double sp = std::sin(w * x), cp = std::cos(w * x);
            const double u = (1.0 + t * t);
            const double ux = u * w * cp, uxx = -u * w * w * sp;
            const double k = 1.0 + 0.5 * sp * std::exp(-t);
            const double kx = 0.5 * w * cp * std::exp(-t);
            return p.dt_alpha_coeff * std::pow(t, 2.0 - p.alpha) * sp -
                   (kx * ux + k * uxx) + x * t * u * sp;
        };
    }
    s.bc.kind = BCKind::Dirichlet;
    s.init.u0 = [w](double x) { return std::sin(w * x); };
    return m;
}

Manufactured make_robin_poly(double alpha, bool wave) {
    Manufactured m;
    ProblemSpec& s = m.spec;
    s.kind = wave ? EquationKind::Wave : EquationKind::Diffusion;
    s.alpha = alpha;
    s.l = 1.0;
    s.T = 1.0;
    s.name = wave ? "wave-robin-poly" : "diffusion-robin-poly";
    const double l = s.l;
    // u = (1 + t^2)(1 + x(l-x)), k = q = 1
    m.exact = [l](double x, double t) { return (1.0 + t * t) * (1.0 + x * (l - x)); };
    m.exact_dt = [l](double x, double t) { return 2.0 * t * (1.0 + x * (l - x)); };
    const PolyProfile p = profile(alpha);
    s.coef.k = [](double, double) { return 1.0; };
    s.coef.q = [](double, double) { return 1.0; };
    s.coef.c1 = 1.0;
    s.coef.c2 = 1.0;
    s.coef.m1 = 1.0;
    s.coef.m2 = 1.0;
    s.coef.c3 = 0.0;
    const double tc = wave ? p.dt_1alpha_coeff : p.dt_alpha_coeff;
    const double texp = wave ? 1.0 - alpha : 2.0 - alpha;
    s.coef.f = [tc, texp, l](double x, double t) {
        const double g = 1.0 + x * (l - x);
        return tc * std::pow(t, texp) * g + 2.0 * (1.0 + t * t) + (1.0 + t * t) * g;
    };
    s.bc.kind = BCKind::Robin;
    s.bc.beta1 = [](double) { return 1.0; };
    s.bc.beta2 = [](double) { return 1.0; };
    s.bc.beta = 1.0;
    s.bc.c4 = 0.0;
    // mu derived from the exact solution and the flux conditions:
    //   k u_x(0,t) = beta1 u(0,t) - mu1,  -k u_x(l,t) = beta2 u(l,t) - mu2
    // u_x = (1+t^2)(l-2x)
    s.bc.mu1 = [l](double t) { return (1.0 + t * t) * (1.0 - l); };
    s.bc.mu2 = [l](double t) { return (1.0 + t * t) * (1.0 - l); };
    s.init.u0 = [l](double x) { return 1.0 + x * (l - x); };
    if (wave) s.init.u1 = [](double) { return 0.0; };
    return m;
}

Manufactured make_w1(double alpha, bool cubic) {
    Manufactured m;
    ProblemSpec& s = m.spec;
    s.kind = EquationKind::Wave;
    s.alpha = alpha;
    s.l = 1.0;
    s.T = 1.0;
    s.name = cubic ? "wave-dirichlet-cubic" : "wave-dirichlet-poly";
    const double w = M_PI / s.l;
    const PolyProfile p = profile(alpha);
    if (!cubic) {
        m.exact = [w](double x, double t) { return (1.0 + t * t) * std::sin(w * x); };
        m.exact_dt = [w](double x, double t) { return 2.0 * t * std::sin(w * x); };
        s.coef.f = [p, w](double x, double t) {
            return p.dt_1alpha_coeff * std::pow(t, 1.0 - p.alpha) * std::sin(w * x) +
                   (w * w + 1.0) * (1.0 + t * t) * std::sin(w * x);
        };
    } else {
        // u = (1 + t^3) sin(pi x / l): d^{1+alpha} t^3 = 6 t^{2-alpha}/Gamma(3-alpha)
        const double c3 = 6.0 / gamma_fn(3.0 - alpha);
        m.exact = [w](double x, double t) {
            return (1.0 + t * t * t) * std::sin(w * x);
        };
        m.exact_dt = [w](double x, double t) { return 3.0 * t * t * std::sin(w * x); };
        s.coef.f = [c3, p, w](double x, double t) {
            return c3 * std::pow(t, 2.0 - p.alpha) * std::sin(w * x) +
                   (w * w + 1.0) * (1.0 + t * t * t) * std::sin(w * x);
        };
    }
    s.coef.k = [](double, double) { return 1.0; };
    s.coef.q = [](double, double) { return 1.0; };
    s.coef.c1 = 1.0;
    s.coef.c2 = 1.0;
    s.coef.m1 = 1.0;
    s.coef.m2 = 1.0;
    s.coef.c3 = 0.0;
    s.bc.kind = BCKind::Dirichlet;
    s.init.u0 = [w](double x) { return std::sin(w * x); };
    s.init.u1 = [](double) { return 0.0; };
    return m;
}

}  // namespace

std::vector<std::string> manufactured_names() {
    return {"diffusion-dirichlet-poly", "diffusion-robin-poly", "wave-dirichlet-poly",
            "wave-robin-poly", "diffusion-varcoef", "wave-dirichlet-cubic"};
}

Manufactured manufactured(const std::string& name, double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("manufactured: alpha must lie in (0,1)");
    if (name == "diffusion-dirichlet-poly") return make_d1(alpha, false);
    if (name == "diffusion-varcoef") return make_d1(alpha, true);
    if (name == "diffusion-robin-poly") return make_robin_poly(alpha, false);
    if (name == "wave-robin-poly") return make_robin_poly(alpha, true);
    if (name == "wave-dirichlet-poly") return make_w1(alpha, false);
    if (name == "wave-dirichlet-cubic") return make_w1(alpha, true);
    std::string known;
    for (const auto& n : manufactured_names()) known += " " + n;
    throw std::invalid_argument("manufactured: unknown name '" + name +
                                "'; available:" + known);
}

// ---------------------------------------------------------------------------
// problem files
// ---------------------------------------------------------------------------

namespace {

struct RawEntry {
    std::string value;
    int line = 0;
    int col = 0;
};

using Section = std::map<std::string, RawEntry>;

}  // namespace

ProblemSpec load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);

    std::map<std::string, Section> sections;
    std::string line, current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        std::string body = line.substr(b, e - b + 1);
        if (body.front() == '[') {
            if (body.back() != ']')
                throw ParseError("unterminated section header", lineno, static_cast<int>(b) + 1);
            current = body.substr(1, body.size() - 2);
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", lineno, static_cast<int>(b) + 1);
        std::string key = body.substr(0, eq);
        key.erase(key.find_last_not_of(" \t") + 1);
        std::string value = body.substr(eq + 1);
        const std::size_t vb = value.find_first_not_of(" \t");
        value = vb == std::string::npos ? "" : value.substr(vb);
        if (current.empty())
            throw ParseError("entry outside any [section]", lineno, static_cast<int>(b) + 1);
        RawEntry entry;
        entry.value = value;
        entry.line = lineno;
        entry.col = static_cast<int>(b + eq + 2 + (vb == std::string::npos ? 0 : vb));
        sections[current][key] = entry;
    }

    auto need = [&](const std::string& sec, const std::string& key) -> const RawEntry& {
        auto s = sections.find(sec);
        if (s == sections.end())
            throw std::runtime_error(path + ": missing section [" + sec + "]");
        auto k = s->second.find(key);
        if (k == s->second.end())
            throw std::runtime_error(path + ": missing key '" + key + "' in [" + sec + "]");
        return k->second;
    };
    auto get = [&](const std::string& sec, const std::string& key,
                   const std::string& dflt) -> RawEntry {
        auto s = sections.find(sec);
        if (s == sections.end()) return {dflt, 0, 0};
        auto k = s->second.find(key);
        if (k == s->second.end()) return {dflt, 0, 0};
        return k->second;
    };

    ProblemSpec spec;
    spec.name = path;

    const std::string kind = need("problem", "kind").value;
    if (kind == "diffusion")
        spec.kind = EquationKind::Diffusion;
    else if (kind == "wave")
        spec.kind = EquationKind::Wave;
    else
        throw std::runtime_error(path + ": kind must be 'diffusion' or 'wave'");

    spec.alpha = std::stod(need("problem", "alpha").value);
    spec.l = std::stod(need("problem", "l").value);
    spec.T = std::stod(need("problem", "T").value);
    if (!(spec.alpha > 0.0) || !(spec.alpha < 1.0))
        throw std::runtime_error(path + ": alpha must lie in (0,1)");

    const double l = spec.l;
    auto fn_xt = [l, &path](const RawEntry& e) -> SpaceTimeFn {
        Expression ex = Expression::parse(e.value, l, e.line, e.col);
        return [ex](double x, double t) { return ex.eval(x, t); };
    };
    auto fn_t = [l](const RawEntry& e, double x_at) -> TimeFn {
        Expression ex = Expression::parse(e.value, l, e.line, e.col);
        return [ex, x_at](double t) { return ex.eval(x_at, t); };
    };
    auto fn_x = [l](const RawEntry& e) -> SpaceFn {
        Expression ex = Expression::parse(e.value, l, e.line, e.col);
        return [ex](double x) { return ex.eval(x, 0.0); };
    };

    spec.coef.k = fn_xt(need("coefficients", "k"));
    spec.coef.q = fn_xt(need("coefficients", "q"));
    spec.coef.f = fn_xt(need("coefficients", "f"));
    spec.coef.c1 = std::stod(get("coefficients", "c1", "0").value);
    spec.coef.c2 = std::stod(get("coefficients", "c2", "0").value);
    spec.coef.m1 = std::stod(get("coefficients", "m1", "0").value);
    spec.coef.m2 = std::stod(get("coefficients", "m2", "0").value);
    spec.coef.c3 = std::stod(get("coefficients", "c3", "0").value);

    const std::string bck = need("boundary", "kind").value;
    if (bck == "dirichlet") {
        spec.bc.kind = BCKind::Dirichlet;
    } else if (bck == "robin") {
        spec.bc.kind = BCKind::Robin;
        spec.bc.beta1 = fn_t(need("boundary", "beta1"), 0.0);
        spec.bc.beta2 = fn_t(need("boundary", "beta2"), l);
        spec.bc.mu1 = fn_t(need("boundary", "mu1"), 0.0);
        spec.bc.mu2 = fn_t(need("boundary", "mu2"), l);
        spec.bc.beta = std::stod(get("boundary", "beta", "0").value);
        spec.bc.c4 = std::stod(get("boundary", "c4", "0").value);
    } else {
        throw std::runtime_error(path + ": boundary kind must be 'dirichlet' or 'robin'");
    }

    spec.init.u0 = fn_x(need("initial", "u0"));
    if (spec.kind == EquationKind::Wave) spec.init.u1 = fn_x(need("initial", "u1"));

    return spec;
}

}  // namespace fdw
