#pragma once

#include <stdexcept>

namespace fdw {

// Parameter pair for the Mittag-Leffler bound of the fractional Gronwall
// lemma; alpha = 1 is admitted for the exponential cross-checks.
struct MLParams {
    double alpha;
    double mu;
    MLParams(double alpha_, double mu_) : alpha(alpha_), mu(mu_) {
        if (!(alpha > 0.0) || !(alpha <= 1.0))
            throw std::invalid_argument("MLParams: alpha must lie in (0,1]");
        if (!(mu > 0.0))
            throw std::invalid_argument("MLParams: mu must be > 0");
    }
};

// One- and two-parameter Mittag-Leffler functions E_alpha(z), E_{alpha,mu}(z).
//
// Supported region: alpha in (0,2] (alpha in (1,2] series-only, for the
// classical cross-checks), mu in (0,5], |z| <= 200, result representable in
// binary64.  Throws std::domain_error outside the region and
// std::overflow_error when the result exceeds the double range.
//
// Accuracy: <= ~1e-13 relative for z >= 0 and for z < 0 wherever either the
// series (small |z|^{1/alpha}) or the algebraic asymptotic (large
// |z|^{1/alpha}) attains machine accuracy; in the narrow crossover band
// |z|^{1/alpha} in roughly (9, 28) with alpha in (0.55, 1), binary64
// cancellation limits the result to the branch floor (~1e-5..1e-9 relative).
// That band is outside every use the estimates need (their arguments are
// nonnegative).
double ml_one(double alpha, double z);
double ml_two(double alpha, double mu, double z);

namespace ml_detail {

// One branch evaluation plus an a-priori absolute error estimate.
struct BranchResult {
    double value;
    double err_abs;
};

// Taylor series with compensated double-double accumulation; valid for any
// z, limited by cancellation for z < 0.
BranchResult series_sum(double alpha, double mu, double z);

// Exponential asymptotic for z > 0 large:
//   (1/alpha) z^{(1-mu)/alpha} exp(z^{1/alpha}) - sum_k z^{-k}/Gamma(mu-alpha k).
BranchResult asymptotic_pos(double alpha, double mu, double z);

// Algebraic asymptotic for z < 0 large, optimally truncated:
//   -sum_{k>=1} z^{-k}/Gamma(mu-alpha k).
BranchResult asymptotic_neg(double alpha, double mu, double z);

// log E for z > 0 via the scaled series / the exponential asymptotic; these
// stay finite where E itself overflows binary64 and drive the seam checks.
double log_series_sum(double alpha, double mu, double z);
double log_asymptotic_pos(double alpha, double mu, double z);

}  // namespace ml_detail

}  // namespace fdw
