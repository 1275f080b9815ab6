#include "vekua/oracles.hpp"

#include "vekua/errors.hpp"

#include <cmath>
#include <string>

namespace vekua {

namespace {
constexpr Complex kI{0.0, 1.0};
}

ExponentialProfileOracle::ExponentialProfileOracle(double alpha, double beta, double mu,
                                                   std::vector<ExponentialMode> modes)
    : alpha_(alpha), beta_(beta), mu_(mu), c_(alpha / (2.0 * std::sqrt(mu))),
      modes_(std::move(modes)) {
    if (!(mu > 0.0)) throw ConfigError("exponential oracle: mu must be positive");
    if (!(beta > 0.0)) throw ConfigError("exponential oracle: alpha x + beta must be positive at x = 0");
    if (alpha == 0.0) throw ConfigError("exponential oracle: alpha must be nonzero");
    for (const auto& m : modes_)
        if (std::abs(std::abs(m.omega) - std::abs(c_)) <= 1e-12 * std::max(1.0, std::abs(c_)))
            throw ConfigError("exponential oracle: degenerate mode Omega = " +
                              std::to_string(m.omega) + " = +-C");
}

ExponentialProfileOracle ExponentialProfileOracle::reference() {
    const double alpha = 2.0, beta = 1.0, mu = 1.0;
    const double c = alpha / (2.0 * std::sqrt(mu));
    std::vector<ExponentialMode> modes;
    for (double w : {c + 1.0, -(c + 1.0), c + 2.0, -(c + 2.0)}) {
        const Complex d = kI * std::sqrt(w * w - c * c);
        modes.push_back({w, (d - c) / d});
    }
    return {alpha, beta, mu, std::move(modes)};
}

ExponentialProfileOracle ExponentialProfileOracle::from_modulated(double alpha, double beta,
                                                                  double mu,
                                                                  const ModulatedSignal& signal) {
    signal.validate();
    const double c = alpha / (2.0 * std::sqrt(mu));
    std::vector<ExponentialMode> modes;
    for (int m = -signal.M; m <= signal.M; ++m) {
        if (signal.beta[m + signal.M] != Complex{})
            throw ConfigError("exponential oracle: only H0 = 0 data is supported");
        const Complex am = signal.alpha[m + signal.M];
        if (am == Complex{}) continue;
        const double w = signal.frequency(m);
        const Complex d = kI * std::sqrt(Complex(w * w - c * c));
        // E(0, t) = 2 A D / (D - C) mu^{1/4} sqrt(beta) e^{i Omega t}.
        modes.push_back({w, am * (d - c) / (2.0 * d * std::pow(mu, 0.25) * std::sqrt(beta))});
    }
    return {alpha, beta, mu, std::move(modes)};
}

Complex ExponentialProfileOracle::D(double omega) const {
    return kI * std::sqrt(Complex(omega * omega - c_ * c_));
}

Permittivity ExponentialProfileOracle::permittivity() const {
    return [a = alpha_, b = beta_](double x) {
        const double s = a * x + b;
        return 1.0 / (s * s);
    };
}

double ExponentialProfileOracle::xi_of_x(double x) const {
    return std::sqrt(mu_) / alpha_ * std::log((alpha_ * x + beta_) / beta_);
}

double ExponentialProfileOracle::x_of_xi(double xi) const {
    return beta_ / alpha_ * (std::exp(alpha_ * xi / std::sqrt(mu_)) - 1.0);
}

Bicomplex ExponentialProfileOracle::W(double xi, double t) const {
    Bicomplex w;
    for (const auto& m : modes_) {
        const Complex d = D(m.omega);
        const Complex pre = m.amplitude * std::exp(kI * (m.omega * t));
        const Complex u = std::exp(d * xi) + (d + c_) / (d - c_) * std::exp(-d * xi);
        const Complex v = 2.0 * kI * m.omega / (d - c_) * std::sinh(d * xi);
        w += Bicomplex(pre * u, pre * v);
    }
    return w;
}

Complex ExponentialProfileOracle::E(double x, double t) const {
    const double s = alpha_ * x + beta_;
    const double r = s / beta_;
    Complex e{};
    for (const auto& m : modes_) {
        const Complex d = D(m.omega);
        const Complex p = d * std::sqrt(mu_) / alpha_;
        e += m.amplitude * std::pow(mu_, 0.25) * std::sqrt(s) * std::exp(kI * (m.omega * t)) *
             (std::pow(r, p) + (d + c_) / (d - c_) * std::pow(r, -p));
    }
    return e;
}

Complex ExponentialProfileOracle::H(double x, double t) const {
    const double s = alpha_ * x + beta_;
    const double r = s / beta_;
    Complex h{};
    for (const auto& m : modes_) {
        const Complex d = D(m.omega);
        const Complex p = d * std::sqrt(mu_) / alpha_;
        h += m.amplitude / (d - c_) * m.omega * std::exp(kI * (m.omega * t)) /
             (std::pow(mu_, 0.25) * std::sqrt(s)) * (std::pow(r, p) - std::pow(r, -p));
    }
    return h;
}

RationalCoefficients oracle_rational_coeffs(double xi) {
    if (xi < 0.0) throw DomainError("rational coefficients: xi must be nonnegative");
    const double q = xi + 1.0;
    const double q2 = q * q;
    RationalCoefficients r;
    r.a[0] = -xi * (xi + 2.0) / (2.0 * q2);
    r.a[1] = 3.0 * xi * xi * (xi * xi + 5.0 * xi + 5.0) / (10.0 * q2);
    r.a[2] = xi * xi * xi / (2.0 * q2);
    r.a[3] = -3.0 * std::pow(xi, 4) / (10.0 * q2);
    r.b[0] = xi * (xi + 2.0) / 2.0;
    r.b[1] = xi * xi / (2.0 * q);
    r.b[2] = -xi * xi * xi / (2.0 * q);
    return r;
}

double rational_kernel_f(double xi, double tau) {
    const double q2 = (xi + 1.0) * (xi + 1.0);
    return ((3.0 * tau - 1.0) * q2 - 3.0 * (tau - 1.0) * (tau - 1.0) * (tau + 1.0)) / (4.0 * q2);
}

double rational_kernel_inv_f(double xi, double tau) {
    return (3.0 * xi * xi + 6.0 * xi + 4.0 - 3.0 * tau * tau + 2.0 * tau) / (4.0 * (xi + 1.0));
}

Permittivity rational_permittivity() {
    return [](double x) { return std::pow(5.0 * x + 1.0, -1.6); };
}

Bicomplex oracle_dalembert(const GeneralSignal::Function& w0, double xi, double t) {
    return Bicomplex::from_pair({w0(t + xi).to_pair().plus, w0(t - xi).to_pair().minus});
}

} // namespace vekua
