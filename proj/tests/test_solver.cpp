#include <doctest.h>

#include <cmath>

#include "fdwave/energy.hpp"
#include "fdwave/solver.hpp"
#include "fdwave/special.hpp"

using namespace fdw;

namespace {

double max_err_final(const SolutionField& u, const SpaceTimeFn& exact) {
    const UniformGrid& g = u.grid();
    double e = 0.0;
    for (std::size_t i = 0; i <= g.nx(); ++i)
        e = std::max(e, std::abs(u(g.nt(), i) - exact(g.x(i), g.T())));
    return e;
}

}  // namespace

TEST_CASE("thomas on the identity") {
    TridiagonalSystem s(5);
    for (std::size_t i = 0; i < 5; ++i) {
        s.diag[i] = 1.0;
        s.rhs[i] = static_cast<double>(i) - 2.0;
    }
    const auto x = thomas_solve(s);
    for (std::size_t i = 0; i < 5; ++i) CHECK(x[i] == s.rhs[i]);
}

TEST_CASE("thomas on a 3x3 system solved by hand") {
    // diag 2, sub = sup = -1, rhs (1,0,1): elimination gives (1,1,1)
    TridiagonalSystem s(3);
    s.diag = {2.0, 2.0, 2.0};
    s.sub = {0.0, -1.0, -1.0};
    s.sup = {-1.0, -1.0, 0.0};
    s.rhs = {1.0, 0.0, 1.0};
    const auto x = thomas_solve(s);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x[2] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("thomas reports the zero-pivot row") {
    TridiagonalSystem s(3);
    s.diag = {1.0, 0.0, 1.0};
    CHECK_THROWS_WITH_AS(thomas_solve(s), doctest::Contains("row 1"),
                         std::runtime_error);
}

TEST_CASE("zero data gives the zero solution") {
    ProblemSpec s;
    s.kind = EquationKind::Diffusion;
    s.alpha = 0.5;
    s.coef.k = [](double, double) { return 1.0; };
    s.coef.q = [](double, double) { return 0.0; };
    s.coef.f = [](double, double) { return 0.0; };
    s.coef.c1 = 1.0;
    s.bc.kind = BCKind::Dirichlet;
    s.init.u0 = [](double) { return 0.0; };
    const SolutionField u = solve_diffusion(s, s.make_grid(16, 16));
    for (double v : u.values()) CHECK(v == 0.0);

    ProblemSpec w = s;
    w.kind = EquationKind::Wave;
    w.coef.q = [](double, double) { return 1.0; };
    w.coef.m1 = w.coef.m2 = 1.0;
    w.coef.c2 = 1.0;
    w.init.u1 = [](double) { return 0.0; };
    const SolutionField uw = solve_wave(w, w.make_grid(16, 16));
    for (double v : uw.values()) CHECK(v == 0.0);
}

TEST_CASE("hypothesis violations refuse to run") {
    Manufactured m = manufactured("diffusion-dirichlet-poly", 0.5);
    m.spec.coef.k = [](double x, double) { return x - 0.5; };
    CHECK_THROWS_AS(solve_diffusion(m.spec, m.spec.make_grid(16, 16)),
                    HypothesisError);
}

TEST_CASE("D1 converges against the exact solution") {
    const Manufactured m = manufactured("diffusion-dirichlet-poly", 0.5);
    std::vector<double> errs;
    for (std::size_t N : {32u, 64u, 128u}) {
        const SolutionField u = solve_diffusion(m.spec, m.spec.make_grid(N, N));
        errs.push_back(max_err_final(u, m.exact));
    }
    // simultaneous halving: the tau^{2-alpha} component dominates
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
        const double o = std::log2(errs[i] / errs[i + 1]);
        CHECK(o >= 1.2);
        CHECK(o <= 2.4);
    }
}

TEST_CASE("D2 Robin boundary flux residual converges") {
    const Manufactured m = manufactured("diffusion-robin-poly", 0.5);
    std::vector<double> res;
    for (std::size_t N : {32u, 64u, 128u}) {
        const UniformGrid g = m.spec.make_grid(N, N);
        const SolutionField u = solve_diffusion(m.spec, g);
        // one-sided second-order u_x at x = 0, final time
        const std::size_t n = g.nt();
        const double ux0 =
            (-3.0 * u(n, 0) + 4.0 * u(n, 1) - u(n, 2)) / (2.0 * g.h());
        const double t = g.T();
        const double r =
            m.spec.coef.k(0.0, t) * ux0 -
            (m.spec.bc.beta1(t) * u(n, 0) - m.spec.bc.mu1(t));
        res.push_back(std::abs(r));
    }
    for (std::size_t i = 0; i + 1 < res.size(); ++i)
        CHECK(std::log2(res[i] / res[i + 1]) >= 1.0);
}

TEST_CASE("W1 converges against the exact solution") {
    const Manufactured m = manufactured("wave-dirichlet-poly", 0.5);
    std::vector<double> errs;
    for (std::size_t N : {32u, 64u, 128u}) {
        const SolutionField u = solve_wave(m.spec, m.spec.make_grid(N, N));
        errs.push_back(max_err_final(u, m.exact));
    }
    for (std::size_t i = 0; i + 1 < errs.size(); ++i)
        CHECK(std::log2(errs[i] / errs[i + 1]) >= 1.2);
}

TEST_CASE("W2 Robin wave converges and satisfies the flux residual") {
    const Manufactured m = manufactured("wave-robin-poly", 0.5);
    std::vector<double> errs, res;
    for (std::size_t N : {32u, 64u, 128u}) {
        const UniformGrid g = m.spec.make_grid(N, N);
        const SolutionField u = solve_wave(m.spec, g);
        errs.push_back(max_err_final(u, m.exact));
        const std::size_t n = g.nt();
        const double ux0 =
            (-3.0 * u(n, 0) + 4.0 * u(n, 1) - u(n, 2)) / (2.0 * g.h());
        res.push_back(std::abs(m.spec.coef.k(0.0, g.T()) * ux0 -
                               (m.spec.bc.beta1(g.T()) * u(n, 0) -
                                m.spec.bc.mu1(g.T()))));
    }
    for (std::size_t i = 0; i + 1 < errs.size(); ++i)
        CHECK(std::log2(errs[i] / errs[i + 1]) >= 0.9);
    for (std::size_t i = 0; i + 1 < res.size(); ++i)
        CHECK(std::log2(res[i] / res[i + 1]) >= 1.0);
}

TEST_CASE("cubic wave entry recovers the 2-alpha temporal rate") {
    const double a = 0.5;
    const Manufactured m = manufactured("wave-dirichlet-cubic", a);
    std::vector<double> errs;
    for (std::size_t nt : {32u, 64u, 128u}) {
        const SolutionField u = solve_wave(m.spec, m.spec.make_grid(1024, nt));
        errs.push_back(max_err_final(u, m.exact));
    }
    const double o = std::log2(errs[errs.size() - 2] / errs.back());
    CHECK(o >= 2.0 - a - 0.3);
    CHECK(o <= 2.0 - a + 0.3);
}

TEST_CASE("solves are deterministic") {
    const Manufactured m = manufactured("diffusion-varcoef", 0.7);
    const SolutionField a = solve_diffusion(m.spec, m.spec.make_grid(32, 32));
    const SolutionField b = solve_diffusion(m.spec, m.spec.make_grid(32, 32));
    CHECK(a.values() == b.values());
}

TEST_CASE("linearity in the data") {
    const Manufactured m = manufactured("diffusion-dirichlet-poly", 0.5);
    ProblemSpec s1 = m.spec;
    s1.init.u0 = [](double) { return 0.0; };
    ProblemSpec s2 = s1;
    s2.coef.f = [](double x, double t) { return std::cos(3.0 * x) * (1.0 + t); };
    ProblemSpec s12 = s1;
    const SpaceTimeFn f1 = s1.coef.f, f2 = s2.coef.f;
    s12.coef.f = [f1, f2](double x, double t) { return f1(x, t) + f2(x, t); };

    const UniformGrid g = m.spec.make_grid(32, 32);
    const SolutionField u1 = solve_diffusion(s1, g);
    const SolutionField u2 = solve_diffusion(s2, g);
    const SolutionField u12 = solve_diffusion(s12, g);
    double scale = 0.0;
    for (double v : u12.values()) scale = std::max(scale, std::abs(v));
    for (std::size_t idx = 0; idx < u12.values().size(); ++idx)
        CHECK(std::abs(u12.values()[idx] - (u1.values()[idx] + u2.values()[idx])) <=
              1e-10 * scale);
}

TEST_CASE("Dirichlet rows stay exactly zero at the boundary") {
    const Manufactured m = manufactured("wave-dirichlet-poly", 0.3);
    const UniformGrid g = m.spec.make_grid(16, 16);
    const SolutionField u = solve_wave(m.spec, g);
    for (std::size_t n = 0; n <= g.nt(); ++n) {
        CHECK(u(n, 0) == 0.0);
        CHECK(u(n, g.nx()) == 0.0);
    }
}

TEST_CASE("stability smoke: L2 norm decays for undriven diffusion") {
    ProblemSpec s;
    s.kind = EquationKind::Diffusion;
    s.alpha = 0.6;
    s.coef.k = [](double, double) { return 1.0; };
    s.coef.q = [](double, double) { return 0.0; };
    s.coef.f = [](double, double) { return 0.0; };
    s.coef.c1 = 1.0;
    s.bc.kind = BCKind::Dirichlet;
    s.init.u0 = [](double x) {
        return std::sin(M_PI * x) + 0.3 * std::sin(3.0 * M_PI * x);
    };
    const UniformGrid g = s.make_grid(64, 64);
    const SolutionField u = solve_diffusion(s, g);
    double prev = 1e300;
    for (std::size_t n = 0; n <= g.nt(); ++n) {
        const double norm = std::sqrt(row_l2_sq(u.row(n), g.nx(), g.h()));
        CHECK(norm <= prev + 1e-12);
        prev = norm;
    }
}

TEST_CASE("assembled diffusion systems are diagonally dominant") {
    // dominance margin >= g > 0 for k >= c1 > 0, q >= 0, Dirichlet rows
    const Manufactured m = manufactured("diffusion-varcoef", 0.5);
    const UniformGrid g = m.spec.make_grid(32, 32);
    // rebuild one interior row by hand and compare with the invariant
    const double gg = std::pow(g.tau(), -0.5) / gamma_fn(1.5);
    TridiagonalSystem sys(3);
    const double t = g.t(1);
    const double am = m.spec.coef.k(g.x(4) - g.h() / 2.0, t) / (g.h() * g.h());
    const double ap = m.spec.coef.k(g.x(4) + g.h() / 2.0, t) / (g.h() * g.h());
    sys.sub = {0.0, -am, 0.0};
    sys.sup = {0.0, -ap, 0.0};
    sys.diag = {1.0, gg + am + ap + m.spec.coef.q(g.x(4), t), 1.0};
    CHECK(sys.dominance_margin() >= std::min(1.0, gg));
}
