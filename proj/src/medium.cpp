#include "vekua/medium.hpp"

#include "vekua/errors.hpp"
#include "vekua/special_functions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

namespace vekua {

namespace {

const GaussRule& panel_rule() {
    static const GaussRule rule = gauss_legendre(10);
    return rule;
}

double panel_integral(const Permittivity& eps, double mu, double a, double b) {
    const auto& g = panel_rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t q = 0; q < g.nodes.size(); ++q)
        acc += g.weights[q] * std::sqrt(mu * eps(mid + half * g.nodes[q]));
    return half * acc;
}

void check_inputs(const Permittivity& eps, double mu) {
    if (!eps) throw ConfigError("medium: permittivity not set");
    if (!(mu > 0.0)) throw ConfigError("medium: mu must be positive");
}

} // namespace

Permittivity epsilon_from_table(std::vector<double> x, std::vector<double> eps) {
    for (std::size_t k = 0; k < eps.size(); ++k)
        if (!(eps[k] > 0.0))
            throw ConfigError("permittivity table: nonpositive value at row " + std::to_string(k));
    CubicSpline<double> spline(std::move(x), std::move(eps));
    return [spline = std::move(spline)](double z) { return spline(z); };
}

MediumProfile MediumProfile::on_x_mesh(Permittivity epsilon, double mu, const UniformMesh& x_mesh) {
    check_inputs(epsilon, mu);
    if (x_mesh.start != 0.0) throw ConfigError("medium: x mesh must start at 0");
    detail::require_stencil(x_mesh.count);
    MediumProfile p;
    p.eps_fn_ = std::move(epsilon);
    p.mu_ = mu;
    p.variable_ = MeshVariable::x;
    p.mesh_ = x_mesh;
    p.x_ = x_mesh.nodes();
    p.eps_.resize(x_mesh.count);
    p.jac_.resize(x_mesh.count);
    for (int k = 0; k < x_mesh.count; ++k) {
        const double e = p.eps_fn_(p.x_[k]);
        if (!(e > 0.0) || !std::isfinite(e))
            throw ConfigError("medium: nonpositive permittivity " + std::to_string(e) +
                              " at x = " + std::to_string(p.x_[k]));
        p.eps_[k] = e;
        p.jac_[k] = std::sqrt(mu * e);
    }
    auto xi = cumulative_integral(x_mesh, p.jac_);
    auto v = xi.node_values();
    p.xi_.assign(v.begin(), v.end());
    for (int k = 0; k + 1 < x_mesh.count; ++k)
        if (!(p.xi_[k + 1] > p.xi_[k]))
            throw NumericalError("medium: travel time not strictly increasing between x = " +
                                 std::to_string(p.x_[k]) + " and " + std::to_string(p.x_[k + 1]));
    p.derive_from_nodes();
    return p;
}

MediumProfile MediumProfile::on_xi_mesh(Permittivity epsilon, double mu, double xi_max, int nodes) {
    check_inputs(epsilon, mu);
    if (!(xi_max > 0.0)) throw ConfigError("medium: xi_max must be positive");
    detail::require_stencil(nodes);
    MediumProfile p;
    p.eps_fn_ = std::move(epsilon);
    p.mu_ = mu;
    p.variable_ = MeshVariable::xi;
    p.mesh_ = UniformMesh::spanning(0.0, xi_max, nodes);
    p.xi_ = p.mesh_.nodes();
    p.x_.assign(nodes, 0.0);
    p.eps_.resize(nodes);
    p.jac_.assign(nodes, 1.0);

    auto speed = [&](double x) {
        const double e = p.eps_fn_(x);
        if (!(e > 0.0) || !std::isfinite(e))
            throw ConfigError("medium: nonpositive permittivity " + std::to_string(e) +
                              " at x = " + std::to_string(x));
        return std::sqrt(mu * e);
    };
    for (int k = 1; k < nodes; ++k) {
        const double a = p.x_[k - 1];
        const double target = p.xi_[k] - p.xi_[k - 1];
        double x = a + target / speed(a);
        for (int it = 0; it < 50; ++it) {
            const double g = panel_integral(p.eps_fn_, mu, a, x) - target;
            const double dx = g / speed(x);
            x -= dx;
            if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) break;
        }
        if (!(x > a)) throw NumericalError("medium: inverse travel-time map failed to advance");
        p.x_[k] = x;
    }
    for (int k = 0; k < nodes; ++k) p.eps_[k] = p.eps_fn_(p.x_[k]);
    p.derive_from_nodes();
    return p;
}

MediumProfile MediumProfile::on_xi_mesh_to(Permittivity epsilon, double mu, double x_max, int nodes) {
    check_inputs(epsilon, mu);
    if (!(x_max > 0.0)) throw ConfigError("medium: x_max must be positive");
    auto integrand = [&](double x) { return std::sqrt(mu * epsilon(x)); };
    double err = 0.0;
    const double xi_max = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, x_max, 20, 1e-15, &err);
    auto p = on_xi_mesh(std::move(epsilon), mu, xi_max, nodes);
    if (std::abs(p.x_.back() - x_max) <= 1e-9 * std::max(1.0, x_max)) p.x_.back() = x_max;
    return p;
}

void MediumProfile::derive_from_nodes() {
    const int n = static_cast<int>(x_.size());
    c_.resize(n);
    f_.resize(n);
    for (int k = 0; k < n; ++k) {
        c_[k] = 1.0 / std::sqrt(eps_[k] * mu_);
        f_[k] = std::sqrt(std::sqrt(eps_[k] / eps_[0]));
    }
    f_[0] = 1.0;
    xi_uniform_ = detail::is_uniform(xi_);
    x_guess_ = CubicSpline<double>(xi_, x_);
}

double MediumProfile::epsilon(double x) const { return eps_fn_(x); }

double MediumProfile::c(double x) const { return 1.0 / std::sqrt(eps_fn_(x) * mu_); }

double MediumProfile::f_tilde(double xi) const {
    return std::sqrt(std::sqrt(epsilon_tilde(xi) / eps_[0]));
}

double MediumProfile::xi_of_x(double x) const {
    const double slack = 1e-12 * std::max(1.0, x_.back());
    if (!(x >= -slack && x <= x_.back() + slack))
        throw DomainError("xi_of_x: x = " + std::to_string(x) + " outside [0, " +
                          std::to_string(x_.back()) + "]");
    const int k = detail::locate(x_, variable_ == MeshVariable::x, x);
    if (x == x_[k]) return xi_[k];
    return xi_[k] + panel_integral(eps_fn_, mu_, x_[k], x);
}

double MediumProfile::x_of_xi(double xi) const {
    double x = x_guess_(xi);
    x = std::clamp(x, 0.0, x_.back());
    for (int it = 0; it < 4; ++it) {
        const double dx = (xi_of_x(x) - xi) / std::sqrt(mu_ * eps_fn_(x));
        x = std::clamp(x - dx, 0.0, x_.back());
        if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

} // namespace vekua
