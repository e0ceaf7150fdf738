#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "fdwave/special.hpp"

using fdw::gamma_fn;

TEST_CASE("gamma at exact points") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    // factorials up the range
    double f = 1.0;
    for (int n = 1; n <= 20; ++n) {
        f *= n;
        CHECK(gamma_fn(n + 1.0) == doctest::Approx(f).epsilon(1e-13));
    }
}

TEST_CASE("gamma against the C library on (0, 170]") {
    double worst = 0.0;
    for (double x = 1e-3; x <= 170.0; x += 0.0703125) {
        const double ref = std::tgamma(x);
        worst = std::max(worst, std::abs(gamma_fn(x) - ref) / ref);
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("gamma functional equation") {
    for (double x : {0.1, 0.37, 1.9, 7.3, 55.5, 140.25}) {
        const double lhs = gamma_fn(x + 1.0);
        const double rhs = x * gamma_fn(x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(5e-15));
    }
}

TEST_CASE("gamma domain and overflow errors") {
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.5), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(172.0), std::overflow_error);
    CHECK(std::isfinite(gamma_fn(171.5)));
}

TEST_CASE("reciprocal gamma at poles and via reflection") {
    using fdw::detail::rgamma;
    CHECK(rgamma(0.0) == 0.0);
    CHECK(rgamma(-1.0) == 0.0);
    CHECK(rgamma(-7.0) == 0.0);
    CHECK(rgamma(2.5) == doctest::Approx(1.0 / gamma_fn(2.5)).epsilon(1e-14));
    // Gamma(-0.5) = -2 sqrt(pi)
    CHECK(rgamma(-0.5) ==
          doctest::Approx(-1.0 / (2.0 * std::sqrt(M_PI))).epsilon(1e-13));
    // Gamma(-1.5) = 4 sqrt(pi) / 3
    CHECK(rgamma(-1.5) ==
          doctest::Approx(3.0 / (4.0 * std::sqrt(M_PI))).epsilon(1e-13));
}
