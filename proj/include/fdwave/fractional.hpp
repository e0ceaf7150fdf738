#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fdwave/grid.hpp"

namespace fdw {

// Fractional order alpha, restricted to the open interval (0,1).
class FracOrder {
public:
    explicit FracOrder(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0) || !(alpha < 1.0))
            throw std::invalid_argument("FracOrder: alpha must lie in (0,1)");
    }
    double value() const { return alpha_; }

private:
    double alpha_;
};

// L1 weights b_m = (m+1)^{1-alpha} - m^{1-alpha}, m = 0..count-1.
std::vector<double> l1_weights(std::size_t count, double alpha);

// L1 approximation of the Caputo derivative of order alpha.  Entry 0 is 0.
TimeSeries caputo_l1(const TimeSeries& v, FracOrder alpha);

// L1-type approximation of the Caputo derivative of order 1+alpha: the
// order-alpha L1 convolution applied to the backward-difference velocity
// chain, with w^{-1/2} := v1 (the initial velocity).  Entry 0 is 0.
TimeSeries caputo_l1_wave(const TimeSeries& v, FracOrder alpha, double v1);

// Riemann-Liouville integral of order alpha via piecewise-linear product
// integration (exact on linear samples).  Entry 0 is 0.
TimeSeries rl_integral(const TimeSeries& v, FracOrder alpha);

// Same product-integration kernel with exponent 2*alpha (order in (0,2)).
TimeSeries rl_integral_iterated(const TimeSeries& v, FracOrder alpha);

// Internal: product integration at arbitrary order in (0,2); shared by
// rl_integral, rl_integral_iterated and the monitor's D^{alpha-1} traces.
TimeSeries rl_integral_order(const TimeSeries& v, double order);

namespace detail {

// Compensated (Kahan) accumulator; summation order is fixed ascending.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

}  // namespace detail

}  // namespace fdw
