#include <doctest.h>

#include <cmath>
#include <random>

#include "fdwave/mittag_leffler.hpp"
#include "fdwave/special.hpp"
#include "oracles.hpp"

using fdw::ml_one;
using fdw::ml_two;

TEST_CASE("classical identities") {
    const double e = std::exp(1.0);
    CHECK(ml_one(1.0, 1.0) == doctest::Approx(e).epsilon(1e-12));
    CHECK(ml_one(1.0, -2.5) == doctest::Approx(std::exp(-2.5)).epsilon(1e-11));
    CHECK(ml_one(2.0, 1.0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
    CHECK(ml_two(1.0, 2.0, 1.0) == doctest::Approx(e - 1.0).epsilon(1e-12));
    // z = 0 is the n = 0 term
    CHECK(ml_two(0.7, 0.5, 0.0) ==
          doctest::Approx(1.0 / std::tgamma(0.5)).epsilon(1e-13));
    CHECK(ml_one(0.3, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("E_{1/2} dual-method check against exp(z^2) erfc(-z)") {
    for (double z : {-3.0, -1.0, -0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double ref = std::exp(z * z) * std::erfc(-z);
        CHECK(ml_one(0.5, z) == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("recurrence E_{a,mu}(z) - z E_{a,mu+a}(z) = 1/Gamma(mu)") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(0.15, 1.0), um(0.3, 3.0), uz(-4.0, 6.0);
    for (int trial = 0; trial < 60; ++trial) {
        const double a = ua(rng), mu = um(rng), z = uz(rng);
        const double lhs = ml_two(a, mu, z) - z * ml_two(a, mu + a, z);
        const double want = 1.0 / std::tgamma(mu);
        CHECK(lhs == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("example from the oracle: E_{0.5,0.5}(-1) via recurrence") {
    const double direct = ml_two(0.5, 0.5, -1.0);
    const double via = -(ml_two(0.5, 1.0, -1.0) - 1.0 / std::tgamma(0.5));
    CHECK(direct == doctest::Approx(via).epsilon(1e-10));
    CHECK(direct == doctest::Approx(oracles::ml(0.5, 0.5, -1.0)).epsilon(1e-12));
}

TEST_CASE("positivity and monotone growth on the nonnegative axis") {
    for (double a : {0.3, 0.5, 0.8, 1.0}) {
        double prev1 = 0.0, prev2 = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double x = 40.0 * i / 1000.0;
            const double v1 = ml_one(a, x);
            const double v2 = ml_two(a, a, x);
            CHECK(v1 > 0.0);
            CHECK(v2 > 0.0);
            CHECK(v1 >= prev1);
            CHECK(v2 >= prev2 * (1.0 - 1e-14));
            prev1 = v1;
            prev2 = v2;
        }
    }
}

TEST_CASE("accuracy against the extended-precision oracle") {
    // positive axis and the mild negative region: 1e-10 contract
    for (double a : {0.2, 0.5, 0.85, 1.0}) {
        for (double z : {-4.0, -1.0, 0.5, 3.0, 9.0, 20.0, 50.0}) {
            if (std::pow(std::abs(z), 1.0 / a) > 700.0 && z > 0) continue;
            const double ref = oracles::ml(a, 1.0, z);
            CHECK(ml_one(a, z) == doctest::Approx(ref).epsilon(1e-10));
        }
    }
    // deep negative axis: asymptotic-dominated region
    for (double a : {0.2, 0.4, 0.6}) {
        for (double z : {-30.0, -80.0, -150.0}) {
            const double ref = oracles::ml(a, 1.0, z);
            CHECK(ml_one(a, z) == doctest::Approx(ref).epsilon(1e-9));
        }
    }
    // two-parameter spots
    for (double mu : {0.5, 1.5, 3.0}) {
        const double ref = oracles::ml(0.6, mu, 4.2);
        CHECK(ml_two(0.6, mu, 4.2) == doctest::Approx(ref).epsilon(1e-11));
    }
}

TEST_CASE("binary64 crossover band: floor-limited but self-consistent") {
    // inside the documented band the best branch carries the value; check the
    // result stays within the (disclosed) branch floor of the truth
    for (double z : {-9.0, -12.0, -16.0}) {
        const double a = 0.8;
        const double ref = oracles::ml(a, 1.0, z);
        const double got = ml_one(a, z);
        CHECK(std::abs(got - ref) / std::abs(ref) <= 1e-4);
    }
}

TEST_CASE("domain errors name the supported region") {
    CHECK_THROWS_WITH_AS(ml_one(2.5, 1.0), doctest::Contains("supported region"),
                         std::domain_error);
    CHECK_THROWS_AS(ml_one(0.5, 300.0), std::domain_error);
    CHECK_THROWS_AS(ml_two(0.5, 7.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ml_two(0.5, -1.0, 1.0), std::domain_error);
    // representable-range overflow
    CHECK_THROWS_AS(ml_one(0.3, 9.0), std::overflow_error);
    CHECK_THROWS_AS(ml_one(0.5, 40.0), std::overflow_error);
}

TEST_CASE("MLParams validation") {
    CHECK_THROWS_AS(fdw::MLParams(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fdw::MLParams(1.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fdw::MLParams(0.5, 0.0), std::invalid_argument);
    CHECK(fdw::MLParams(1.0, 2.0).alpha == 1.0);
}

TEST_CASE("log-scaled series matches the oracle where E overflows") {
    // alpha = 0.3 at z = 10: E ~ exp(10^{10/3}), far beyond binary64
    for (double z : {8.0, 10.0, 12.0}) {
        const double ls = fdw::ml_detail::log_series_sum(0.3, 1.0, z);
        const double ref = oracles::log_ml_pos(0.3, 1.0, z);
        CHECK(ls == doctest::Approx(ref).epsilon(1e-9));
        const double la = fdw::ml_detail::log_asymptotic_pos(0.3, 1.0, z);
        CHECK(std::abs(std::expm1(ls - la)) <= 1e-7);
    }
}
