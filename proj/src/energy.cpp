#include "fdwave/energy.hpp"

#include <algorithm>
#include <cmath>

#include "fdwave/mittag_leffler.hpp"
#include "fdwave/special.hpp"

namespace fdw {

double row_l2_sq(const double* u, std::size_t nx, double h) {
    detail::KahanSum acc;
    acc.add(0.5 * u[0] * u[0]);
    for (std::size_t i = 1; i < nx; ++i) acc.add(u[i] * u[i]);
    acc.add(0.5 * u[nx] * u[nx]);
    return h * acc.value();
}

double row_grad_sq(const double* u, std::size_t nx, double h) {
    detail::KahanSum acc;
    const double d0 = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
    const double dn = (3.0 * u[nx] - 4.0 * u[nx - 1] + u[nx - 2]) / (2.0 * h);
    acc.add(0.5 * d0 * d0);
    for (std::size_t i = 1; i < nx; ++i) {
        const double d = (u[i + 1] - u[i - 1]) / (2.0 * h);
        acc.add(d * d);
    }
    acc.add(0.5 * dn * dn);
    return h * acc.value();
}

NormTrace norms(const SolutionField& field) {
    const UniformGrid& g = field.grid();
    TimeSeries l2 = TimeSeries::zeros(g), gr = TimeSeries::zeros(g),
               w = TimeSeries::zeros(g), b0 = TimeSeries::zeros(g),
               bl = TimeSeries::zeros(g);
    for (std::size_t n = 0; n <= g.nt(); ++n) {
        const double* row = field.row(n);
        l2[n] = row_l2_sq(row, g.nx(), g.h());
        gr[n] = row_grad_sq(row, g.nx(), g.h());
        w[n] = l2[n] + gr[n];
        b0[n] = row[0] * row[0];
        bl[n] = row[g.nx()] * row[g.nx()];
    }
    return NormTrace{std::move(l2), std::move(gr), std::move(w), std::move(b0),
                     std::move(bl)};
}

EstimateReport make_report(std::string name, TimeSeries lhs, TimeSeries rhs_data,
                           double constant_used) {
    EstimateReport r;
    r.name = std::move(name);
    r.constant_used = constant_used;
    const std::size_t nt = lhs.grid().nt();
    TimeSeries rhs = rhs_data;
    for (std::size_t n = 0; n <= nt; ++n) rhs[n] = constant_used * rhs_data[n];

    double min_margin = 1e300, emp = 0.0, rhs_max = 0.0;
    for (std::size_t n = 0; n <= nt; ++n) {
        min_margin = std::min(min_margin, rhs[n] - lhs[n]);
        rhs_max = std::max(rhs_max, rhs[n]);
        if (n >= 1 && rhs_data[n] > 0.0)
            emp = std::max(emp, lhs[n] / rhs_data[n]);
    }
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.min_margin = min_margin;
    r.empirical_constant = emp;
    r.tol_report = 1e-8 * std::max(rhs_max, 1.0);
    r.pass = min_margin >= -r.tol_report;
    return r;
}

EstimateReport check_lemma1(const TimeSeries& v, FracOrder alpha) {
    const UniformGrid& g = v.grid();
    TimeSeries v2 = v;
    for (std::size_t n = 0; n < v.size(); ++n) v2[n] = v[n] * v[n];
    const TimeSeries dv = caputo_l1(v, alpha);
    const TimeSeries dv2 = caputo_l1(v2, alpha);
    TimeSeries lhs = TimeSeries::zeros(g), rhs = TimeSeries::zeros(g);
    for (std::size_t n = 0; n <= g.nt(); ++n) {
        lhs[n] = 0.5 * dv2[n];
        rhs[n] = v[n] * dv[n];
    }
    EstimateReport r = make_report("lemma1", std::move(lhs), std::move(rhs), 1.0);
    // scale-aware roundoff tolerance for a sign inequality
    double scale = 1.0;
    for (std::size_t n = 0; n <= g.nt(); ++n)
        scale = std::max(scale, std::abs(r.rhs[n]));
    r.tol_report = 1e-10 * scale;
    r.pass = r.min_margin >= -r.tol_report;
    return r;
}

EstimateReport check_lemma2(const TimeSeries& y, double c1, const TimeSeries& c2,
                            FracOrder alpha) {
    require_same_time_axis(y, c2);
    if (!(c1 > 0.0)) throw std::invalid_argument("check_lemma2: c1 must be > 0");
    const UniformGrid& g = y.grid();
    const double a = alpha.value();

    // discrete hypothesis: d^alpha y <= c1 y + c2 (up to a scale-aware slack)
    const TimeSeries dy = caputo_l1(y, alpha);
    bool hyp = true;
    double scale = 1.0;
    for (std::size_t n = 0; n <= g.nt(); ++n)
        scale = std::max({scale, std::abs(y[n]), std::abs(c2[n])});
    for (std::size_t n = 1; n <= g.nt(); ++n)
        if (dy[n] > c1 * y[n] + c2[n] + 1e-10 * scale) hyp = false;
    for (std::size_t n = 0; n <= g.nt(); ++n)
        if (y[n] < -1e-12 * scale || c2[n] < -1e-12 * scale) hyp = false;

    const TimeSeries rc2 = rl_integral(c2, alpha);
    TimeSeries rhs = TimeSeries::zeros(g);
    for (std::size_t n = 0; n <= g.nt(); ++n) {
        const double z = c1 * std::pow(g.t(n), a);
        rhs[n] = y[0] * ml_one(a, z) +
                 gamma_fn(a) * ml_two(a, a, z) * rc2[n];
    }
    EstimateReport r = make_report("lemma2", y, std::move(rhs), 1.0);
    r.hypothesis_pass = hyp;
    if (!hyp) r.pass = false;
    return r;
}

double theorem1_constant(double l, double c1) {
    return std::max(l * l / (2.0 * c1), 1.0) / std::min(1.0, c1);
}

TimeSeries forcing_l2_sq(const ProblemSpec& spec, const UniformGrid& grid) {
    TimeSeries out = TimeSeries::zeros(grid);
    std::vector<double> row(grid.nx() + 1);
    for (std::size_t n = 0; n <= grid.nt(); ++n) {
        for (std::size_t i = 0; i <= grid.nx(); ++i)
            row[i] = spec.coef.f(grid.x(i), grid.t(n));
        out[n] = row_l2_sq(row.data(), grid.nx(), grid.h());
    }
    return out;
}

TimeSeries velocity_l2_sq(const SolutionField& field, const ProblemSpec& spec) {
    const UniformGrid& g = field.grid();
    TimeSeries out = TimeSeries::zeros(g);
    std::vector<double> row(g.nx() + 1);
    if (spec.init.u1) {
        for (std::size_t i = 0; i <= g.nx(); ++i) row[i] = (*spec.init.u1)(g.x(i));
        out[0] = row_l2_sq(row.data(), g.nx(), g.h());
    }
    for (std::size_t n = 1; n <= g.nt(); ++n) {
        const double* un = field.row(n);
        const double* up = field.row(n - 1);
        for (std::size_t i = 0; i <= g.nx(); ++i) row[i] = (un[i] - up[i]) / g.tau();
        out[n] = row_l2_sq(row.data(), g.nx(), g.h());
    }
    return out;
}

TimeSeries cumulative_integral(const TimeSeries& v) {
    const UniformGrid& g = v.grid();
    TimeSeries out = TimeSeries::zeros(g);
    double acc = 0.0;
    for (std::size_t n = 1; n <= g.nt(); ++n) {
        acc += 0.5 * (v[n] + v[n - 1]) * g.tau();
        out[n] = acc;
    }
    return out;
}

EstimateReport check_theorem1(const SolutionField& field, const ProblemSpec& spec) {
    if (field.kind() != EquationKind::Diffusion || field.bc_kind() != BCKind::Dirichlet)
        throw std::invalid_argument("check_theorem1: needs a Dirichlet diffusion field");
    const UniformGrid& g = field.grid();
    const FracOrder a(spec.alpha);
    const NormTrace nt = norms(field);
    const TimeSeries rgrad = rl_integral(nt.grad_sq, a);
    const TimeSeries rf = rl_integral(forcing_l2_sq(spec, g), a);

    TimeSeries lhs = TimeSeries::zeros(g), rhs = TimeSeries::zeros(g);
    for (std::size_t n = 0; n <= g.nt(); ++n) {
        lhs[n] = nt.l2_sq[n] + rgrad[n];
        rhs[n] = rf[n] + nt.l2_sq[0];
    }
    return make_report("theorem1", std::move(lhs), std::move(rhs),
                       theorem1_constant(spec.l, spec.coef.c1));
}

EstimateReport check_theorem2(const SolutionField& field, const ProblemSpec& spec,
                              double constant_used) {
    if (field.kind() != EquationKind::Diffusion || field.bc_kind() != BCKind::Robin)
        throw std::invalid_argument("check_theorem2: needs a Robin diffusion field");
    const UniformGrid& g = field.grid();
    const FracOrder a(spec.alpha);
    const NormTrace nt = norms(field);
    const TimeSeries rgrad = rl_integral(nt.grad_sq, a);
    const TimeSeries rf = rl_integral(forcing_l2_sq(spec, g), a);
    const TimeSeries rm1 = rl_integral(
        TimeSeries::sample(g, [&](double t) { const double m = spec.bc.mu1(t); return m * m; }), a);
    const TimeSeries rm2 = rl_integral(
        TimeSeries::sample(g, [&](double t) { const double m = spec.bc.mu2(t); return m * m; }), a);

    TimeSeries lhs = TimeSeries::zeros(g), rhs = TimeSeries::zeros(g);
    for (std::size_t n = 0; n <= g.nt(); ++n) {
        lhs[n] = nt.l2_sq[n] + rgrad[n];
        rhs[n] = rf[n] + rm1[n] + rm2[n] + nt.l2_sq[0];
    }
    return make_report("theorem2", std::move(lhs), std::move(rhs), constant_used);
}

EstimateReport check_theorem3(const SolutionField& field, const ProblemSpec& spec,
                              double constant_used) {
    if (field.kind() != EquationKind::Wave || field.bc_kind() != BCKind::Dirichlet)
        throw std::invalid_argument("check_theorem3: needs a Dirichlet wave field");
    const UniformGrid& g = field.grid();
    const double a = spec.alpha;
    const NormTrace nt = norms(field);
    const TimeSeries ut2 = velocity_l2_sq(field, spec);
    const TimeSeries dut = rl_integral_order(ut2, 1.0 - a);   // D^{alpha-1}||u_t||^2
    const TimeSeries du = rl_integral_order(nt.l2_sq, 1.0 - a);  // printed form
    const TimeSeries intf = cumulative_integral(forcing_l2_sq(spec, g));

    TimeSeries lhs = TimeSeries::zeros(g), rhs = TimeSeries::zeros(g),
               printed = TimeSeries::zeros(g);
    for (std::size_t n = 0; n <= g.nt(); ++n) {
        lhs[n] = dut[n] + nt.w21[n];
        printed[n] = du[n] + nt.w21[n];
        rhs[n] = intf[n] + ut2[0] + nt.w21[0];
    }
    EstimateReport r =
        make_report("theorem3", std::move(lhs), std::move(rhs), constant_used);
    double pm = 1e300;
    for (std::size_t n = 0; n <= g.nt(); ++n) pm = std::min(pm, r.rhs[n] - printed[n]);
    r.printed_lhs = std::move(printed);
    r.printed_min_margin = pm;
    return r;
}

EstimateReport check_theorem4(const SolutionField& field, const ProblemSpec& spec,
                              double constant_used) {
    if (field.kind() != EquationKind::Wave || field.bc_kind() != BCKind::Robin)
        throw std::invalid_argument("check_theorem4: needs a Robin wave field");
    const UniformGrid& g = field.grid();
    const double a = spec.alpha;
    const NormTrace nt = norms(field);
    const TimeSeries ut2 = velocity_l2_sq(field, spec);
    const TimeSeries dut = rl_integral_order(ut2, 1.0 - a);

    const TimeSeries mu1 = TimeSeries::sample(g, spec.bc.mu1);
    const TimeSeries mu2 = TimeSeries::sample(g, spec.bc.mu2);
    // mu_i' by centered differences (one-sided second order at the ends)
    auto deriv = [&](const TimeSeries& m) {
        TimeSeries d = TimeSeries::zeros(g);
        const double tau = g.tau();
        const std::size_t N = g.nt();
        d[0] = (-3.0 * m[0] + 4.0 * m[1] - m[2]) / (2.0 * tau);
        for (std::size_t n = 1; n < N; ++n) d[n] = (m[n + 1] - m[n - 1]) / (2.0 * tau);
        d[N] = (3.0 * m[N] - 4.0 * m[N - 1] + m[N - 2]) / (2.0 * tau);
        return d;
    };
    const TimeSeries d1 = deriv(mu1), d2 = deriv(mu2);
    double mu1c = 0.0, mu2c = 0.0;  // sup norms by grid max
    for (std::size_t n = 0; n <= g.nt(); ++n) {
        mu1c = std::max(mu1c, std::abs(mu1[n]));
        mu2c = std::max(mu2c, std::abs(mu2[n]));
    }
    TimeSeries integrand = forcing_l2_sq(spec, g);
    for (std::size_t n = 0; n <= g.nt(); ++n)
        integrand[n] += d1[n] * d1[n] + d2[n] * d2[n];
    const TimeSeries intdata = cumulative_integral(integrand);

    TimeSeries lhs = TimeSeries::zeros(g), rhs = TimeSeries::zeros(g);
    for (std::size_t n = 0; n <= g.nt(); ++n) {
        lhs[n] = dut[n] + nt.w21[n];
        rhs[n] = intdata[n] + mu1c * mu1c + mu2c * mu2c + ut2[0] + nt.w21[0];
    }
    return make_report("theorem4", std::move(lhs), std::move(rhs), constant_used);
}

double poincare_margin(const double* u, std::size_t nx, double h, double l) {
    if (std::abs(u[0]) > 1e-12 || std::abs(u[nx]) > 1e-12)
        throw std::invalid_argument("poincare_margin: row is not Dirichlet");
    return 0.5 * l * l * row_grad_sq(u, nx, h) - row_l2_sq(u, nx, h);
}

double trace_margin(const double* u, std::size_t nx, double h, double l, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("trace_margin: eps must be > 0");
    const double bound =
        eps * row_grad_sq(u, nx, h) + (1.0 / eps + 1.0 / l) * row_l2_sq(u, nx, h);
    return std::min(bound - u[0] * u[0], bound - u[nx] * u[nx]);
}

EstimateReport check_rl_ordering(const TimeSeries& h, FracOrder alpha) {
    const UniformGrid& g = h.grid();
    const double a = alpha.value();
    for (std::size_t n = 0; n <= g.nt(); ++n)
        if (h[n] < 0.0)
            throw std::invalid_argument("check_rl_ordering: series must be >= 0");
    const TimeSeries lo = rl_integral_iterated(h, alpha);  // D^{-2a}
    const TimeSeries hi = rl_integral(h, alpha);           // D^{-a}
    TimeSeries rhs = TimeSeries::zeros(g);
    const double c = gamma_fn(a) / gamma_fn(2.0 * a);
    for (std::size_t n = 0; n <= g.nt(); ++n)
        rhs[n] = c * std::pow(g.t(n), a) * hi[n];
    EstimateReport r = make_report("rl-ordering", lo, std::move(rhs), 1.0);
    double scale = 1.0;
    for (std::size_t n = 0; n <= g.nt(); ++n)
        scale = std::max(scale, std::abs(r.rhs[n]));
    r.tol_report = 1e-9 * scale;
    r.pass = r.min_margin >= -r.tol_report;
    return r;
}

}  // namespace fdw
