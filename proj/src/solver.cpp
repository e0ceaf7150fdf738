#include "fdwave/solver.hpp"

#include <cmath>

#include "fdwave/fractional.hpp"
#include "fdwave/special.hpp"

namespace fdw {

double TridiagonalSystem::dominance_margin() const {
    double m = 1e300;
    for (std::size_t i = 0; i < diag.size(); ++i)
        m = std::min(m, std::abs(diag[i]) - std::abs(sub[i]) - std::abs(sup[i]));
    return m;
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    const std::size_t n = sys.size();
    std::vector<double> c(n), d(n), b(n);
    b = sys.diag;
    c = sys.sup;
    d = sys.rhs;
    for (std::size_t i = 1; i < n; ++i) {
        if (b[i - 1] == 0.0 || !std::isfinite(b[i - 1]))
            throw std::runtime_error("thomas_solve: zero pivot at row " +
                                     std::to_string(i - 1));
        const double m = sys.sub[i] / b[i - 1];
        b[i] -= m * c[i - 1];
        d[i] -= m * d[i - 1];
    }
    if (b[n - 1] == 0.0 || !std::isfinite(b[n - 1]))
        throw std::runtime_error("thomas_solve: zero pivot at row " +
                                 std::to_string(n - 1));
    std::vector<double> x(n);
    x[n - 1] = d[n - 1] / b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (d[i] - c[i] * x[i + 1]) / b[i];
    return x;
}

namespace {

void require_hypotheses(const ProblemSpec& spec, const UniformGrid& grid) {
    const ValidationReport rep = validate(spec, grid);
    if (rep.all_pass()) return;
    std::string bad;
    for (const auto& c : rep.checks)
        if (!c.pass) bad += (bad.empty() ? "" : "; ") + c.name;
    throw HypothesisError("hypothesis validation failed: " + bad);
}

void check_finite(const std::vector<double>& row, std::size_t step) {
    for (double v : row)
        if (!std::isfinite(v)) throw SolverError("non-finite value", step);
}

}  // namespace

SolutionField solve_diffusion(const ProblemSpec& spec, const UniformGrid& grid) {
    if (spec.kind != EquationKind::Diffusion)
        throw std::invalid_argument("solve_diffusion: spec kind is not Diffusion");
    if (grid.nx() < 4 || grid.nt() < 4)
        throw std::invalid_argument("solve_diffusion: grid resolutions must be >= 4");
    require_hypotheses(spec, grid);

    const std::size_t nx = grid.nx(), nt = grid.nt();
    const double h = grid.h(), tau = grid.tau();
    const double a = spec.alpha;
    const double g = std::pow(tau, -a) / gamma_fn(2.0 - a);
    const std::vector<double> b = l1_weights(nt, a);
    const bool robin = spec.bc.kind == BCKind::Robin;

    SolutionField u(grid, spec.kind, spec.bc.kind, a, "implicit-L1");
    for (std::size_t i = 0; i <= nx; ++i) u.at(0, i) = spec.init.u0(grid.x(i));
    if (!robin) {
        u.at(0, 0) = 0.0;
        u.at(0, nx) = 0.0;
    }

    std::vector<double> am(nx);                    // a_{i+1/2} at the new level
    std::vector<double> hist(nx + 1), kacc(nx + 1);  // Kahan-compensated history
    TridiagonalSystem sys(nx + 1);

    for (std::size_t n = 1; n <= nt; ++n) {
        const double t = grid.t(n);
        for (std::size_t i = 0; i < nx; ++i) am[i] = spec.coef.k(grid.x(i) + h / 2.0, t);

        // history: g*( u^{n-1} - sum_{j=0}^{n-2} b_{n-1-j} (u^{j+1}-u^j) ),
        // accumulated ascending in j with compensation
        for (std::size_t i = 0; i <= nx; ++i) {
            hist[i] = 0.0;
            kacc[i] = 0.0;
        }
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const double w = b[n - 1 - j];
            const double* uj = u.row(j);
            const double* uj1 = u.row(j + 1);
            for (std::size_t i = 0; i <= nx; ++i) {
                const double x = -w * (uj1[i] - uj[i]) - kacc[i];
                const double s = hist[i] + x;
                kacc[i] = (s - hist[i]) - x;
                hist[i] = s;
            }
        }
        const double* up = u.row(n - 1);
        for (std::size_t i = 0; i <= nx; ++i) hist[i] = g * (up[i] + hist[i]);

        for (std::size_t i = 1; i < nx; ++i) {
            const double A = am[i - 1] / (h * h), B = am[i] / (h * h);
            sys.sub[i] = -A;
            sys.sup[i] = -B;
            sys.diag[i] = g + A + B + spec.coef.q(grid.x(i), t);
            sys.rhs[i] = spec.coef.f(grid.x(i), t) + hist[i];
        }
        if (!robin) {
            sys.sub[0] = sys.sup[0] = 0.0;
            sys.diag[0] = 1.0;
            sys.rhs[0] = 0.0;
            sys.sub[nx] = sys.sup[nx] = 0.0;
            sys.diag[nx] = 1.0;
            sys.rhs[nx] = 0.0;
        } else {
            // half-cell balance over [0, h/2] and [l-h/2, l]
            const double A0 = 2.0 * am[0] / (h * h);
            sys.sup[0] = -A0;
            sys.sub[0] = 0.0;
            sys.diag[0] = g + A0 + (2.0 / h) * spec.bc.beta1(t) + spec.coef.q(0.0, t);
            sys.rhs[0] = spec.coef.f(0.0, t) + (2.0 / h) * spec.bc.mu1(t) + hist[0];
            const double An = 2.0 * am[nx - 1] / (h * h);
            sys.sub[nx] = -An;
            sys.sup[nx] = 0.0;
            sys.diag[nx] =
                g + An + (2.0 / h) * spec.bc.beta2(t) + spec.coef.q(spec.l, t);
            sys.rhs[nx] =
                spec.coef.f(spec.l, t) + (2.0 / h) * spec.bc.mu2(t) + hist[nx];
        }

        const std::vector<double> un = thomas_solve(sys);
        check_finite(un, n);
        for (std::size_t i = 0; i <= nx; ++i) u.at(n, i) = un[i];
    }
    return u;
}

SolutionField solve_wave(const ProblemSpec& spec, const UniformGrid& grid) {
    if (spec.kind != EquationKind::Wave)
        throw std::invalid_argument("solve_wave: spec kind is not Wave");
    if (grid.nx() < 4 || grid.nt() < 4)
        throw std::invalid_argument("solve_wave: grid resolutions must be >= 4");
    if (!spec.init.u1) throw std::invalid_argument("solve_wave: u1 missing");
    require_hypotheses(spec, grid);

    const std::size_t nx = grid.nx(), nt = grid.nt();
    const double h = grid.h(), tau = grid.tau();
    const double a = spec.alpha;
    const double g = std::pow(tau, -a) / gamma_fn(2.0 - a);
    const std::vector<double> b = l1_weights(nt, a);
    const bool robin = spec.bc.kind == BCKind::Robin;

    SolutionField u(grid, spec.kind, spec.bc.kind, a, "implicit-L1-velocity");
    for (std::size_t i = 0; i <= nx; ++i) u.at(0, i) = spec.init.u0(grid.x(i));
    if (!robin) {
        u.at(0, 0) = 0.0;
        u.at(0, nx) = 0.0;
    }

    // velocity chain W[j] = w^{j-1/2}; W[0] = u1
    std::vector<std::vector<double>> W(nt + 1, std::vector<double>(nx + 1, 0.0));
    for (std::size_t i = 0; i <= nx; ++i) W[0][i] = (*spec.init.u1)(grid.x(i));

    std::vector<double> am(nx);
    std::vector<double> hist(nx + 1), kacc(nx + 1);
    TridiagonalSystem sys(nx + 1);

    for (std::size_t n = 1; n <= nt; ++n) {
        const double tm = grid.t(n) - tau / 2.0;  // velocity-chain center
        for (std::size_t i = 0; i < nx; ++i)
            am[i] = spec.coef.k(grid.x(i) + h / 2.0, tm);

        // history: g*( W^{n-1} - sum_{j=0}^{n-2} b_{n-1-j} (W^{j+1}-W^j) )
        for (std::size_t i = 0; i <= nx; ++i) {
            hist[i] = 0.0;
            kacc[i] = 0.0;
        }
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const double w = b[n - 1 - j];
            const std::vector<double>& Wj = W[j];
            const std::vector<double>& Wj1 = W[j + 1];
            for (std::size_t i = 0; i <= nx; ++i) {
                const double x = -w * (Wj1[i] - Wj[i]) - kacc[i];
                const double s = hist[i] + x;
                kacc[i] = (s - hist[i]) - x;
                hist[i] = s;
            }
        }
        for (std::size_t i = 0; i <= nx; ++i) hist[i] = g * (W[n - 1][i] + hist[i]);

        // g/tau * (u^n - u^{n-1}) - hist = 1/2 [Lambda u^n + Lambda u^{n-1}] + f(tm)
        const double* up = u.row(n - 1);
        for (std::size_t i = 1; i < nx; ++i) {
            const double A = am[i - 1] / (h * h), B = am[i] / (h * h);
            const double q = spec.coef.q(grid.x(i), tm);
            sys.sub[i] = -A / 2.0;
            sys.sup[i] = -B / 2.0;
            sys.diag[i] = g / tau + (A + B + q) / 2.0;
            sys.rhs[i] = spec.coef.f(grid.x(i), tm) + (g / tau) * up[i] + hist[i] +
                         (A * up[i - 1] - (A + B + q) * up[i] + B * up[i + 1]) / 2.0;
        }
        if (!robin) {
            sys.sub[0] = sys.sup[0] = 0.0;
            sys.diag[0] = 1.0;
            sys.rhs[0] = 0.0;
            sys.sub[nx] = sys.sup[nx] = 0.0;
            sys.diag[nx] = 1.0;
            sys.rhs[nx] = 0.0;
        } else {
            const double A0 = 2.0 * am[0] / (h * h);
            const double q0 = spec.coef.q(0.0, tm);
            const double r0 = (2.0 / h) * spec.bc.beta1(tm);
            sys.sub[0] = 0.0;
            sys.sup[0] = -A0 / 2.0;
            sys.diag[0] = g / tau + (A0 + r0 + q0) / 2.0;
            sys.rhs[0] = spec.coef.f(0.0, tm) + (2.0 / h) * spec.bc.mu1(tm) +
                         (g / tau) * up[0] + hist[0] +
                         (-(A0 + r0 + q0) * up[0] + A0 * up[1]) / 2.0;
            const double An = 2.0 * am[nx - 1] / (h * h);
            const double qn = spec.coef.q(spec.l, tm);
            const double rn = (2.0 / h) * spec.bc.beta2(tm);
            sys.sub[nx] = -An / 2.0;
            sys.sup[nx] = 0.0;
            sys.diag[nx] = g / tau + (An + rn + qn) / 2.0;
            sys.rhs[nx] = spec.coef.f(spec.l, tm) + (2.0 / h) * spec.bc.mu2(tm) +
                          (g / tau) * up[nx] + hist[nx] +
                          (-(An + rn + qn) * up[nx] + An * up[nx - 1]) / 2.0;
        }

        const std::vector<double> un = thomas_solve(sys);
        check_finite(un, n);
        for (std::size_t i = 0; i <= nx; ++i) {
            u.at(n, i) = un[i];
            W[n][i] = (un[i] - up[i]) / tau;
        }
    }
    return u;
}

}  // namespace fdw
