#pragma once

// Closed-form reference solutions: the exponential-profile medium
// eps = (alpha x + beta)^{-2}, the rational kernel family f = 1/(1 + xi)^2,
// and the d'Alembert solution of the homogeneous medium.

#include "vekua/bicomplex.hpp"
#include "vekua/medium.hpp"
#include "vekua/signal.hpp"

#include <array>
#include <vector>

namespace vekua {

struct ExponentialMode {
    double omega = 0.0;
    Complex amplitude{1.0};
};

class ExponentialProfileOracle {
public:
    /// Throws ConfigError for alpha x + beta not positive at x = 0, mu <= 0,
    /// or a degenerate mode omega = +-C.
    ExponentialProfileOracle(double alpha, double beta, double mu, std::vector<ExponentialMode> modes);

    /// alpha = 2, beta = 1, mu = 1; Omega = +-(C+1), +-(C+2) with
    /// A = (D - C)/D, so that W0+-(t) = 4 cos 2t + 4 cos 3t.
    static ExponentialProfileOracle reference();

    /// Superposition reproducing E0 = sum alpha_m e^{i Omega_m t}, H0 = 0.
    /// Throws ConfigError if any beta_m is nonzero.
    static ExponentialProfileOracle from_modulated(double alpha, double beta, double mu,
                                                   const ModulatedSignal& signal);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double mu() const { return mu_; }
    double C() const { return c_; }
    /// Coefficient of the constant-coefficient Vekua equation.
    double gamma() const { return 0.5 * c_; }
    Complex D(double omega) const;
    const std::vector<ExponentialMode>& modes() const { return modes_; }

    Permittivity permittivity() const;
    double xi_of_x(double x) const;
    double x_of_xi(double xi) const;

    Bicomplex W(double xi, double t) const;
    Bicomplex W0(double t) const { return W(0.0, t); }
    Complex E(double x, double t) const;
    Complex H(double x, double t) const;

private:
    double alpha_, beta_, mu_, c_;
    std::vector<ExponentialMode> modes_;
};

/// Closed-form coefficients of the family f = 1/(1 + xi)^2.
struct RationalCoefficients {
    std::array<double, 4> a{};
    std::array<double, 3> b{};
};

RationalCoefficients oracle_rational_coeffs(double xi);
double rational_kernel_f(double xi, double tau);
double rational_kernel_inv_f(double xi, double tau);
/// eps = (5x + 1)^{-8/5}, whose f is 1/(1 + xi)^2 for mu = 1.
Permittivity rational_permittivity();

/// P+ W0+(t + xi) + P- W0-(t - xi).
Bicomplex oracle_dalembert(const GeneralSignal::Function& w0, double xi, double t);

} // namespace vekua
