#pragma once

#include <complex>
#include <span>
#include <vector>

namespace vekua {

/// Highest Legendre order whose monomial coefficients are supported in
/// double precision.
inline constexpr int kLegendreCap = 60;

/// Monomial coefficients of P_n: P_n(x) = sum_k coeffs[k] x^k.
struct LegendreCoefficients {
    int n = 0;
    std::vector<double> coeffs;
};

/// P_n(x) by the three-term recurrence.
double legendre_eval(int n, double x);

/// Fills out[0..nmax] with P_0(x)..P_nmax(x).
void legendre_sequence(int nmax, double x, std::span<double> out);

/// Throws ConfigError for n > kLegendreCap.
LegendreCoefficients legendre_coefficients(int n);

/// Row-major l_{k,n} table for n = 0..nmax, shared and built once per process.
/// Entry (n, k) lives at table[n][k].
const std::vector<std::vector<double>>& legendre_coefficient_table(int nmax);

/// Sum_k |l_{k,n}|, i.e. |P_n(i)|.
double legendre_abs_coefficient_sum(int n);

/// Spherical Bessel function j_n(x), x >= 0.
double spherical_bessel(int n, double x);

/// j_0(x)..j_nmax(x) for real x of either sign (j_n(-x) = (-1)^n j_n(x)).
void spherical_bessel_sequence(int nmax, double x, std::span<double> out);

/// e^{n pi i / 2}, read from a table.
std::complex<double> quarter_phase(int n);

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int points);

} // namespace vekua
