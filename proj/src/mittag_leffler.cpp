#include "fdwave/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fdwave/special.hpp"

namespace fdw {
namespace ml_detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogDblMax = 709.0;

// ---- minimal double-double arithmetic (Dekker/Knuth) ----
struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return two_sum(s.hi, s.lo);
}

inline DD dd_mul_d(DD a, double b) {
    const double p = a.hi * b;
    const double e = std::fma(a.hi, b, -p);
    return two_sum(p, e + a.lo * b);
}

inline DD dd_div_d(DD a, double b) {
    const double q0 = a.hi / b;
    const double r0 = std::fma(-q0, b, a.hi) + a.lo;
    return two_sum(q0, r0 / b);
}

// Gamma(alpha*n + mu) with the argument's rounding residual corrected to
// first order: alpha*n is formed exactly with fma, the residual enters via
// Gamma(x+e) ~ Gamma(x)(1 + e*psi(x)).
inline double gamma_at(double alpha, double n, double mu, double* rel_corr) {
    const double p = alpha * n;
    const double e1 = std::fma(alpha, n, -p);
    const DD arg = two_sum(p, mu);
    const double g = gamma_fn(arg.hi);
    *rel_corr = (arg.lo + e1) * detail::digamma_crude(arg.hi);
    return g;
}

// z >= 0: all terms positive, no cancellation; terms formed in log space so
// neither z^n nor Gamma can overflow mid-sum.  Accuracy ~ a few lgamma ulps.
BranchResult series_sum_pos(double alpha, double mu, double z) {
    const double lz = std::log(z);
    double acc = 0.0, c = 0.0;
    double scale = 0.0;  // running log-offset, terms accumulated as exp(lt-scale)
    double prev_lt = -kInf;
    for (int n = 0; n < 2000000; ++n) {
        const double arg = alpha * static_cast<double>(n) + mu;
        const double lt = static_cast<double>(n) * lz - std::lgamma(arg);
        if (lt > scale + 200.0) {
            const double shift = std::exp(scale - lt);
            acc *= shift;
            c *= shift;
            scale = lt;
        }
        const double y = std::exp(lt - scale) - c;
        const double t = acc + y;
        c = (t - acc) - y;
        acc = t;
        if (n > 4 && lt < prev_lt && lt - scale < std::log(acc) - 40.0) break;
        prev_lt = lt;
    }
    const double value = acc * std::exp(scale);
    return {value, 2e-13 * value};
}

// z  < 0: compensated double-double summation with corrected Gamma
// arguments.  The floor is set by the ~2 ulp accuracy of the double Gamma
// values, amplified by the cancellation Sum|T| / |E|.
BranchResult series_sum_neg(double alpha, double mu, double z) {
    DD sum{0.0, 0.0};
    DD zk{1.0, 0.0};
    double abs_sum = 0.0;
    for (int n = 0; n < 200000; ++n) {
        double corr;
        const double arg = alpha * static_cast<double>(n) + mu;
        if (arg > 170.5) break;  // remaining terms are below any floor here
        const double g = gamma_at(alpha, static_cast<double>(n), mu, &corr);
        DD term = dd_div_d(zk, g);
        term = dd_mul_d(term, 1.0 - corr);
        sum = dd_add(sum, term);
        abs_sum += std::abs(term.hi);
        if (!std::isfinite(sum.hi) || !std::isfinite(abs_sum)) return {sum.hi, kInf};
        zk = dd_mul_d(zk, z);
        if (n >= 4) {
            const double next = std::abs(zk.hi) / g;
            if (std::abs(term.hi) < 1e-17 * std::abs(sum.hi) &&
                next < 1e-17 * std::abs(sum.hi))
                break;
        }
    }
    const double err = 5e-16 * abs_sum;
    return {sum.hi + sum.lo, err};
}

}  // namespace

BranchResult series_sum(double alpha, double mu, double z) {
    if (z >= 0.0) return series_sum_pos(alpha, mu, z);
    return series_sum_neg(alpha, mu, z);
}

BranchResult asymptotic_neg(double alpha, double mu, double z) {
    double s = 0.0, c = 0.0;
    double zk = 1.0 / z;
    double prev = kInf;
    double min_term = kInf;
    for (int k = 1; k <= 400; ++k) {
        const double t = -zk * detail::rgamma(mu - alpha * static_cast<double>(k));
        const double at = std::abs(t);
        if (at != 0.0) {
            if (at > prev && k > 3) break;  // optimal truncation
            prev = at;
            min_term = std::min(min_term, at);
        }
        const double y = t - c;
        const double tt = s + y;
        c = (tt - s) - y;
        s = tt;
        zk /= z;
    }
    // truncation floor ~ the smallest retained term, plus the exponentially
    // small residual exp(-|z|^{1/alpha}) invisible to the algebraic series
    const double sreal = std::pow(std::abs(z), 1.0 / alpha);
    double err = 2.0 * (std::isfinite(min_term) ? min_term : 0.0);
    err += 4.0 * std::exp(-std::min(sreal, 700.0));
    err += 4e-16 * std::abs(s);
    return {s, err};
}

BranchResult asymptotic_pos(double alpha, double mu, double z) {
    const double sreal = std::pow(z, 1.0 / alpha);
    const double log_main =
        -std::log(alpha) + (1.0 - mu) / alpha * std::log(z) + sreal;
    if (log_main > kLogDblMax) return {kInf, kInf};
    const double main = std::exp(log_main);
    double corr = 0.0;
    double zk = 1.0 / z;
    double prev = kInf;
    double min_term = kInf;
    for (int k = 1; k <= 400; ++k) {
        const double t = zk * detail::rgamma(mu - alpha * static_cast<double>(k));
        const double at = std::abs(t);
        if (at != 0.0) {
            if (at > prev && k > 3) break;
            prev = at;
            min_term = std::min(min_term, at);
        }
        corr += t;
        zk /= z;
    }
    const double value = main - corr;
    double err = std::abs(main) * (sreal + 4.0) * 2.2e-16;
    err += 2.0 * (std::isfinite(min_term) ? min_term : 0.0);
    return {value, err};
}

double log_series_sum(double alpha, double mu, double z) {
    const double lz = std::log(z);
    double m = -kInf;
    std::vector<double> lt;
    lt.reserve(4096);
    double prev_lt = -kInf;
    for (int n = 0; n < 2000000; ++n) {
        const double arg = alpha * static_cast<double>(n) + mu;
        const double v = static_cast<double>(n) * lz - std::lgamma(arg);
        lt.push_back(v);
        m = std::max(m, v);
        if (n > 4 && v < prev_lt && v < m - 45.0) break;
        prev_lt = v;
    }
    double acc = 0.0, c = 0.0;
    for (double v : lt) {
        const double y = std::exp(v - m) - c;
        const double t = acc + y;
        c = (t - acc) - y;
        acc = t;
    }
    return m + std::log(acc);
}

double log_asymptotic_pos(double alpha, double mu, double z) {
    const double sreal = std::pow(z, 1.0 / alpha);
    const double log_main =
        -std::log(alpha) + (1.0 - mu) / alpha * std::log(z) + sreal;
    double corr = 0.0;
    double zk = 1.0 / z;
    double prev = kInf;
    for (int k = 1; k <= 400; ++k) {
        const double t = zk * detail::rgamma(mu - alpha * static_cast<double>(k));
        const double at = std::abs(t);
        if (at != 0.0) {
            if (at > prev && k > 3) break;
            prev = at;
        }
        corr += t;
        zk /= z;
    }
    if (log_main > 600.0) return log_main;  // corrections are O(1) at most
    return std::log(std::exp(log_main) - corr);
}

}  // namespace ml_detail

namespace {

[[noreturn]] void region_error(const std::string& what) {
    throw std::domain_error(
        "mittag_leffler: " + what +
        " (supported region: alpha in (0,2] ((1,2] series-only), mu in (0,5], |z| <= 200)");
}

double ml_eval(double alpha, double mu, double z) {
    using namespace ml_detail;
    if (!(alpha > 0.0) || !(alpha <= 2.0)) region_error("alpha out of range");
    if (!(mu > 0.0) || !(mu <= 5.0)) region_error("mu out of range");
    if (!(std::abs(z) <= 200.0)) region_error("|z| too large");
    if (z == 0.0) return 1.0 / gamma_fn(mu);

    if (alpha > 1.0) {
        if (std::abs(z) > 10.0) region_error("alpha in (1,2] supports |z| <= 10 only");
        return series_sum(alpha, mu, z).value;
    }

    if (z > 0.0) {
        const double log_main = -std::log(alpha) +
                                (1.0 - mu) / alpha * std::log(z) +
                                std::pow(z, 1.0 / alpha);
        if (z >= 1.0 && log_main > kLogDblMax)
            throw std::overflow_error("mittag_leffler: result exceeds double range");
        if (z <= 10.0) return series_sum(alpha, mu, z).value;
        const BranchResult r = asymptotic_pos(alpha, mu, z);
        if (!std::isfinite(r.value))
            throw std::overflow_error("mittag_leffler: result exceeds double range");
        return r.value;
    }

    // z < 0: pick the branch with the smaller predicted error
    const BranchResult a = asymptotic_neg(alpha, mu, z);
    const double sreal = std::pow(-z, 1.0 / alpha);
    if (sreal > 25.0) return a.value;  // series floor is worse from here on
    const BranchResult t = series_sum(alpha, mu, z);
    return (a.err_abs < t.err_abs) ? a.value : t.value;
}

}  // namespace

double ml_one(double alpha, double z) { return ml_eval(alpha, 1.0, z); }

double ml_two(double alpha, double mu, double z) { return ml_eval(alpha, mu, z); }

}  // namespace fdw
