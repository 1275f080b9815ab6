#include "vekua/special_functions.hpp"

#include "vekua/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

using namespace vekua;

TEST_CASE("legendre_eval agrees with std::legendre") {
    for (int n = 0; n <= 40; ++n)
        for (double x = -1.0; x <= 1.0; x += 0.05)
            CHECK(legendre_eval(n, x) == doctest::Approx(std::legendre(n, x)).epsilon(1e-12));
}

TEST_CASE("legendre_sequence matches pointwise evaluation") {
    std::vector<double> out(31);
    legendre_sequence(30, 0.37, out);
    for (int n = 0; n <= 30; ++n) CHECK(out[n] == doctest::Approx(legendre_eval(n, 0.37)));
}

TEST_CASE("monomial coefficients reproduce P_n") {
    for (int n = 0; n <= 20; ++n) {
        const auto lc = legendre_coefficients(n);
        REQUIRE(lc.coeffs.size() == static_cast<std::size_t>(n + 1));
        for (double x : {-1.0, -0.4, 0.0, 0.3, 0.9, 1.0}) {
            double acc = 0.0;
            for (int k = n; k >= 0; --k) acc = acc * x + lc.coeffs[k];
            // monomial evaluation loses digits in proportion to sum_k |l_{k,n}|
            const double tol = 1e-15 * legendre_abs_coefficient_sum(n);
            CHECK(std::abs(acc - legendre_eval(n, x)) <= std::max(tol, 1e-15));
        }
    }
    CHECK(legendre_coefficients(2).coeffs == std::vector<double>{-0.5, 0.0, 1.5});
}

TEST_CASE("absolute coefficient sum equals |P_n(i)|") {
    for (int n = 0; n <= 25; ++n) {
        const auto lc = legendre_coefficients(n);
        std::complex<double> acc = 0.0;
        for (int k = n; k >= 0; --k) acc = acc * std::complex<double>(0.0, 1.0) + lc.coeffs[k];
        CHECK(legendre_abs_coefficient_sum(n) == doctest::Approx(std::abs(acc)).epsilon(1e-12));
    }
}

TEST_CASE("orders beyond the cap are rejected") {
    CHECK_THROWS_AS(legendre_coefficients(kLegendreCap + 1), ConfigError);
    CHECK_NOTHROW(legendre_coefficients(kLegendreCap));
}

TEST_CASE("spherical Bessel agrees with std::sph_bessel") {
    for (int n = 0; n <= 30; ++n)
        for (double x : {0.0, 1e-6, 1e-3, 0.1, 0.5, 1.0, 2.5, 7.0, 15.0, 31.0, 50.0, 120.0, 300.0}) {
            const double ref = std::sph_bessel(n, x);
            CHECK(spherical_bessel(n, x) == doctest::Approx(ref).epsilon(1e-11).scale(1e-3));
        }
}

TEST_CASE("spherical Bessel three-term recurrence residual") {
    for (int n = 1; n <= 25; ++n)
        for (double x : {0.3, 1.0, 4.0, 12.0, 40.0}) {
            const double r = spherical_bessel(n - 1, x) + spherical_bessel(n + 1, x) -
                             (2.0 * n + 1.0) / x * spherical_bessel(n, x);
            CHECK(std::abs(r) < 1e-12);
        }
}

TEST_CASE("spherical Bessel sequence parity for negative argument") {
    std::vector<double> pos(16), neg(16);
    spherical_bessel_sequence(15, 3.7, pos);
    spherical_bessel_sequence(15, -3.7, neg);
    for (int n = 0; n <= 15; ++n) {
        CHECK(neg[n] == doctest::Approx((n % 2 ? -1.0 : 1.0) * pos[n]));
        CHECK(pos[n] == doctest::Approx(std::sph_bessel(n, 3.7)).epsilon(1e-12));
    }
    spherical_bessel_sequence(15, 0.0, pos);
    CHECK(pos[0] == 1.0);
    for (int n = 1; n <= 15; ++n) CHECK(pos[n] == 0.0);
}

TEST_CASE("quarter_phase cycles through 1, i, -1, -i") {
    CHECK(quarter_phase(0) == std::complex<double>(1, 0));
    CHECK(quarter_phase(1) == std::complex<double>(0, 1));
    CHECK(quarter_phase(2) == std::complex<double>(-1, 0));
    CHECK(quarter_phase(3) == std::complex<double>(0, -1));
    CHECK(quarter_phase(17) == std::complex<double>(0, 1));
}

TEST_CASE("Gauss-Legendre is exact to degree 2p - 1") {
    for (int p : {2, 5, 16, 64}) {
        const GaussRule g = gauss_legendre(p);
        for (int d = 0; d <= 2 * p - 1; d += std::max(1, p / 4)) {
            double acc = 0.0;
            for (int k = 0; k < p; ++k) acc += g.weights[k] * std::pow(g.nodes[k], d);
            const double ref = d % 2 ? 0.0 : 2.0 / (d + 1);
            CHECK(acc == doctest::Approx(ref).epsilon(1e-13).scale(1.0));
        }
    }
}
