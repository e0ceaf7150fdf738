#include "fdwave/fractional.hpp"

#include <cmath>

#include "fdwave/special.hpp"

namespace fdw {

std::vector<double> l1_weights(std::size_t count, double alpha) {
    std::vector<double> b(count);
    const double e = 1.0 - alpha;
    double prev = 0.0;
    for (std::size_t m = 0; m < count; ++m) {
        const double next = std::pow(static_cast<double>(m + 1), e);
        b[m] = next - prev;
        prev = next;
    }
    return b;
}

TimeSeries caputo_l1(const TimeSeries& v, FracOrder alpha) {
    const UniformGrid& grid = v.grid();
    const std::size_t nt = grid.nt();
    if (v.size() < 2) throw std::invalid_argument("caputo_l1: need >= 2 samples");
    const double a = alpha.value();
    const double g = std::pow(grid.tau(), -a) / gamma_fn(2.0 - a);
    const std::vector<double> b = l1_weights(nt, a);

    std::vector<double> dv(nt);
    for (std::size_t j = 0; j < nt; ++j) dv[j] = v[j + 1] - v[j];

    TimeSeries out = TimeSeries::zeros(grid);
    for (std::size_t n = 1; n <= nt; ++n) {
        detail::KahanSum acc;
        for (std::size_t j = 0; j < n; ++j) acc.add(b[n - 1 - j] * dv[j]);
        out[n] = g * acc.value();
    }
    return out;
}

TimeSeries caputo_l1_wave(const TimeSeries& v, FracOrder alpha, double v1) {
    const UniformGrid& grid = v.grid();
    if (v.size() < 3) throw std::invalid_argument("caputo_l1_wave: need >= 3 samples");
    const double tau = grid.tau();
    // velocity chain: W[0] = v1 (the half-step velocity w^{-1/2}),
    // W[j] = (v^j - v^{j-1})/tau for j >= 1; then apply the order-alpha L1.
    std::vector<double> w(grid.nt() + 1);
    w[0] = v1;
    for (std::size_t j = 1; j < w.size(); ++j) w[j] = (v[j] - v[j - 1]) / tau;
    return caputo_l1(TimeSeries(grid, std::move(w)), alpha);
}

TimeSeries rl_integral_order(const TimeSeries& v, double order) {
    if (!(order > 0.0) || !(order < 2.0))
        throw std::invalid_argument("rl_integral: order must lie in (0,2)");
    const UniformGrid& grid = v.grid();
    const std::size_t nt = grid.nt();
    const double a = order;
    const double scale = std::pow(grid.tau(), a) / gamma_fn(a);

    // per-cell weights from the exact kernel moments
    // B_m = (m+1)^a - m^a, C_m = (m+1)^{a+1} - m^{a+1}
    std::vector<double> wl(nt), wr(nt);
    {
        double pb = 0.0, pc = 0.0;
        for (std::size_t m = 0; m < nt; ++m) {
            const double md = static_cast<double>(m);
            const double nb = std::pow(md + 1.0, a);
            const double nc = std::pow(md + 1.0, a + 1.0);
            const double B = nb - pb, C = nc - pc;
            wl[m] = C / (a + 1.0) - md * B / a;
            wr[m] = (md + 1.0) * B / a - C / (a + 1.0);
            pb = nb;
            pc = nc;
        }
    }

    TimeSeries out = TimeSeries::zeros(grid);
    for (std::size_t n = 1; n <= nt; ++n) {
        detail::KahanSum acc;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t m = n - 1 - j;
            acc.add(wl[m] * v[j] + wr[m] * v[j + 1]);
        }
        out[n] = scale * acc.value();
    }
    return out;
}

TimeSeries rl_integral(const TimeSeries& v, FracOrder alpha) {
    return rl_integral_order(v, alpha.value());
}

TimeSeries rl_integral_iterated(const TimeSeries& v, FracOrder alpha) {
    return rl_integral_order(v, 2.0 * alpha.value());
}

}  // namespace fdw
