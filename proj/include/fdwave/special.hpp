#pragma once

namespace fdw {

// Gamma function for x > 0.
// Throws std::domain_error for x <= 0 and std::overflow_error for x > 171.6
// (where the result exceeds the double range).  Relative error <= 1e-13 on
// (0, 170].
double gamma_fn(double x);

namespace detail {

// 1/Gamma(x) for any real x; returns 0 at the poles x = 0, -1, -2, ...
double rgamma(double x);

// Digamma, a few digits only; used to correct gamma arguments that carry a
// rounding residual.
double digamma_crude(double x);

}  // namespace detail

}  // namespace fdw
