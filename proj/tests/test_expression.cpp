#include <doctest.h>

#include <cmath>

#include "fdwave/expression.hpp"

using fdw::Expression;
using fdw::ParseError;

TEST_CASE("arithmetic and precedence") {
    const Expression e = Expression::parse("1 + 2*3 - 4/2", 1.0);
    CHECK(e.eval(0, 0) == doctest::Approx(5.0));
    CHECK(Expression::parse("2^3^2", 1.0).eval(0, 0) == doctest::Approx(512.0));
    CHECK(Expression::parse("-2^2", 1.0).eval(0, 0) == doctest::Approx(-4.0));
    CHECK(Expression::parse("(1+2)*(3-5)", 1.0).eval(0, 0) == doctest::Approx(-6.0));
}

TEST_CASE("variables and constants") {
    const Expression e = Expression::parse("sin(pi*x/l)*(1 + t^2)", 2.0);
    CHECK(e.eval(1.0, 0.0) == doctest::Approx(1.0));
    CHECK(e.eval(1.0, 2.0) == doctest::Approx(5.0));
    CHECK(e.uses_x());
    CHECK(e.uses_t());
    const Expression c = Expression::parse("exp(-t)*cos(0)", 1.0);
    CHECK_FALSE(c.uses_x());
    CHECK(c.eval(0.0, 1.0) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("scientific notation") {
    CHECK(Expression::parse("1.5e-3 + 2E2", 1.0).eval(0, 0) ==
          doctest::Approx(200.0015));
}

TEST_CASE("errors carry line and column") {
    try {
        Expression::parse("1 + &", 1.0, 3, 1);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.col == 5);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(Expression::parse("sin 3", 1.0), ParseError);
    CHECK_THROWS_AS(Expression::parse("(1+2", 1.0), ParseError);
    CHECK_THROWS_AS(Expression::parse("foo(3)", 1.0), ParseError);
    CHECK_THROWS_AS(Expression::parse("1 2", 1.0), ParseError);
    CHECK_THROWS_AS(Expression::parse("", 1.0), ParseError);
}

TEST_CASE("unary minus chains") {
    CHECK(Expression::parse("--3", 1.0).eval(0, 0) == doctest::Approx(3.0));
    CHECK(Expression::parse("2*-3", 1.0).eval(0, 0) == doctest::Approx(-6.0));
}
