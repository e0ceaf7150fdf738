#pragma once

// Test-side oracles, independent of the library's evaluation paths.

#include <functional>

namespace oracles {

// Mittag-Leffler E_{alpha,mu}(z) by Taylor summation in MPFR with the
// working precision scaled to the cancellation |z|^{1/alpha}; arguments of
// Gamma are formed in extended precision.
double ml(double alpha, double mu, double z);

// ln E_{alpha,mu}(z) for z > 0 (finite even where E overflows binary64)
double log_ml_pos(double alpha, double mu, double z);

// Caputo derivative of order a in (0,1) at time t by quadrature: the kernel
// singularity is removed with the substitution s = t - w^{1/(1-a)} and the
// smooth integrand handled by adaptive Simpson.  dv is the classical first
// derivative of the sampled function.
double caputo_quadrature(const std::function<double(double)>& dv, double a, double t);

// Riemann-Liouville integral of order a in (0,2) by the same substitution
// (s = t - w^{1/a}).
double rl_quadrature(const std::function<double(double)>& v, double a, double t);

}  // namespace oracles
