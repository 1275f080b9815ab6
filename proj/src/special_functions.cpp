#include "vekua/special_functions.hpp"

#include "vekua/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace vekua {

double legendre_eval(int n, double x) {
    if (n < 0) throw ConfigError("legendre_eval: negative order");
    if (n == 0) return 1.0;
    double p0 = 1.0;
    double p1 = x;
    for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

void legendre_sequence(int nmax, double x, std::span<double> out) {
    out[0] = 1.0;
    if (nmax == 0) return;
    out[1] = x;
    for (int k = 1; k < nmax; ++k)
        out[k + 1] = ((2.0 * k + 1.0) * x * out[k] - k * out[k - 1]) / (k + 1.0);
}

namespace {

std::vector<std::vector<double>> build_table() {
    // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}; the two contributions to each
    // coefficient share a sign, so long double keeps every entry to ~1 ulp.
    std::vector<std::vector<long double>> wide(kLegendreCap + 1);
    wide[0] = {1.0L};
    wide[1] = {0.0L, 1.0L};
    for (int n = 1; n < kLegendreCap; ++n) {
        auto& next = wide[n + 1];
        next.assign(n + 2, 0.0L);
        for (int k = 0; k <= n; ++k) next[k + 1] += (2.0L * n + 1.0L) * wide[n][k];
        for (int k = 0; k <= n - 1; ++k) next[k] -= n * wide[n - 1][k];
        for (auto& c : next) c /= (n + 1.0L);
    }
    std::vector<std::vector<double>> table(kLegendreCap + 1);
    for (int n = 0; n <= kLegendreCap; ++n)
        table[n].assign(wide[n].begin(), wide[n].end());
    return table;
}

} // namespace

const std::vector<std::vector<double>>& legendre_coefficient_table(int nmax) {
    if (nmax > kLegendreCap)
        throw ConfigError("Legendre order " + std::to_string(nmax) + " exceeds cap " +
                          std::to_string(kLegendreCap));
    static const auto table = build_table();
    return table;
}

LegendreCoefficients legendre_coefficients(int n) {
    if (n < 0) throw ConfigError("legendre_coefficients: negative order");
    return {n, legendre_coefficient_table(n)[n]};
}

double legendre_abs_coefficient_sum(int n) {
    const auto& row = legendre_coefficient_table(n)[n];
    double s = 0.0;
    for (double c : row) s += std::abs(c);
    return s;
}

namespace {

double bessel_series(int n, double x) {
    // x^n / (2n+1)!! * sum_k (-x^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1))
    double lead = 1.0;
    for (int k = 1; k <= n; ++k) lead *= x / (2.0 * k + 1.0);
    const double h = -0.5 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= h / (k * (2.0 * n + 2.0 * k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return lead * sum;
}

// Miller's downward recurrence, scaled to the closed form of j0 or j1.
void bessel_downward(int nmax, double x, std::span<double> out) {
    const int start = static_cast<int>(std::max<double>(nmax, std::ceil(x))) + 40 +
                      static_cast<int>(6.0 * std::cbrt(x));
    std::vector<double> f(start + 2, 0.0);
    f[start + 1] = 0.0;
    f[start] = 1e-30;
    for (int k = start; k >= 1; --k) {
        f[k - 1] = (2.0 * k + 1.0) / x * f[k] - f[k + 1];
        if (std::abs(f[k - 1]) > 1e100) {
            for (int m = k - 1; m <= start; ++m) f[m] *= 1e-100;
        }
    }
    // Normalize against whichever of the closed forms j0, j1 is larger.
    const double j0 = std::sin(x) / x;
    const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
    const double scale = std::abs(j0) >= std::abs(j1) ? j0 / f[0] : j1 / f[1];
    for (int k = 0; k <= nmax; ++k) out[k] = f[k] * scale;
}

} // namespace

void spherical_bessel_sequence(int nmax, double x, std::span<double> out) {
    if (nmax < 0) throw ConfigError("spherical_bessel_sequence: negative order");
    const double ax = std::abs(x);
    if (ax == 0.0) {
        std::fill(out.begin(), out.begin() + nmax + 1, 0.0);
        out[0] = 1.0;
        return;
    }
    if (ax < 1.0) {
        for (int k = 0; k <= nmax; ++k) out[k] = bessel_series(k, ax);
    } else {
        bessel_downward(nmax, ax, out);
    }
    if (x < 0.0)
        for (int k = 1; k <= nmax; k += 2) out[k] = -out[k];
}

double spherical_bessel(int n, double x) {
    if (n < 0) throw ConfigError("spherical_bessel: negative order");
    if (x < 0.0) throw ConfigError("spherical_bessel: negative argument");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x < 1.0) return bessel_series(n, x);
    std::vector<double> seq(n + 1);
    bessel_downward(n, x, seq);
    return seq[n];
}

std::complex<double> quarter_phase(int n) {
    static constexpr std::array<std::complex<double>, 4> phases{
        std::complex<double>{1.0, 0.0}, std::complex<double>{0.0, 1.0},
        std::complex<double>{-1.0, 0.0}, std::complex<double>{0.0, -1.0}};
    return phases[static_cast<std::size_t>(((n % 4) + 4) % 4)];
}

GaussRule gauss_legendre(int points) {
    if (points < 1) throw ConfigError("gauss_legendre: need at least one point");
    GaussRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    const int half = (points + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = z;
            for (int k = 1; k < points; ++k) {
                const double p2 = ((2.0 * k + 1.0) * z * p1 - k * p0) / (k + 1.0);
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_points(z), p0 = P_{points-1}(z)
            dp = points * (z * p1 - p0) / (z * z - 1.0);
            if (points == 1) dp = 1.0;
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[points - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.weights[i] = w;
        rule.weights[points - 1 - i] = w;
    }
    return rule;
}

} // namespace vekua
