#include "vekua/expression.hpp"

#include "vekua/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

using namespace vekua;

namespace {

double eval(const std::string& text, double x, const std::map<std::string, double>& c = {}) {
    return Expression::parse(text, "x", c)(x);
}

std::string error_of(const std::string& text) {
    try {
        Expression::parse(text, "x");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("arithmetic and precedence") {
    CHECK(eval("1 + 2*3", 0.0) == 7.0);
    CHECK(eval("(1 + 2)*3", 0.0) == 9.0);
    CHECK(eval("8/4/2", 0.0) == 1.0);
    CHECK(eval("2^3^2", 0.0) == 512.0);
    CHECK(eval("-x^2", 3.0) == -9.0);
    CHECK(eval("2^-1", 0.0) == 0.5);
    CHECK(eval("x - -x", 2.0) == 4.0);
    CHECK(eval("1.5e1 + .5", 0.0) == 15.5);
}

TEST_CASE("permittivity profiles") {
    for (double x : {0.0, 0.5, 3.0, 6.0}) {
        CHECK(eval("(2*x + 1)^(-2)", x) == doctest::Approx(std::pow(2 * x + 1, -2.0)));
        CHECK(eval("(5*x + 1)^(-1.6)", x) == doctest::Approx(std::pow(5 * x + 1, -1.6)));
    }
}

TEST_CASE("named constants and functions") {
    CHECK(eval("a*x + b", 2.0, {{"a", 3.0}, {"b", -1.0}}) == 5.0);
    CHECK(eval("pi", 0.0) == doctest::Approx(std::numbers::pi));
    CHECK(eval("exp(x) + log(e)", 1.0) == doctest::Approx(std::exp(1.0) + 1.0));
    CHECK(eval("sqrt(x)*sin(x) + cos(x)", 2.0) ==
          doctest::Approx(std::sqrt(2.0) * std::sin(2.0) + std::cos(2.0)));
}

TEST_CASE("other variable names") {
    CHECK(Expression::parse("4*cos(2*t)", "t")(0.0) == 4.0);
    CHECK_THROWS_AS(Expression::parse("4*cos(2*t)", "x"), ConfigError);
}

TEST_CASE("diagnostics name the column") {
    CHECK(error_of("1 + * 2").find("column 5") != std::string::npos);
    CHECK(error_of("(x + 1").find("expected ')'") != std::string::npos);
    CHECK(error_of("foo(x)").find("unknown function 'foo'") != std::string::npos);
    CHECK(error_of("x + y").find("unknown name 'y'") != std::string::npos);
    CHECK_FALSE(error_of("").empty());
    CHECK_FALSE(error_of("1 2").empty());
}

TEST_CASE("text is kept") {
    CHECK(Expression::parse("x + 1", "x").text() == "x + 1");
}
