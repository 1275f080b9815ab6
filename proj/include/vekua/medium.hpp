#pragma once

// Inhomogeneous medium eps(x), constant mu, and the travel-time variable
// xi(x) = sqrt(mu) int_0^x sqrt(eps(s)) ds with its derived maps.

#include "vekua/interpolation.hpp"
#include "vekua/quadrature.hpp"

#include <functional>
#include <span>
#include <vector>

namespace vekua {

/// Which variable the profile mesh is uniform in.
enum class MeshVariable { x, xi };

/// Permittivity closure over x. Sampled tables are turned into closures by
/// epsilon_from_table.
using Permittivity = std::function<double(double)>;

/// Cubic-spline permittivity through a sampled table. Throws ConfigError for
/// nonpositive samples or non-increasing abscissae.
Permittivity epsilon_from_table(std::vector<double> x, std::vector<double> eps);

class MediumProfile {
public:
    /// Mesh uniform in x on [0, x_max]; xi by six-point cumulative integration of
    /// sqrt(mu eps). Throws ConfigError (bad input) or NumericalError (xi not
    /// strictly increasing).
    static MediumProfile on_x_mesh(Permittivity epsilon, double mu, const UniformMesh& x_mesh);

    /// Mesh uniform in xi on [0, xi_max]; node abscissae x_k solve
    /// xi(x_k) = k h by Newton iteration on Gauss-Legendre panel integrals.
    static MediumProfile on_xi_mesh(Permittivity epsilon, double mu, double xi_max, int nodes);

    /// Same, with xi_max = xi(x_max) from adaptive Gauss-Kronrod quadrature.
    static MediumProfile on_xi_mesh_to(Permittivity epsilon, double mu, double x_max, int nodes);

    MeshVariable variable() const { return variable_; }
    /// The uniform mesh, in whichever variable `variable()` names.
    const UniformMesh& mesh() const { return mesh_; }
    int size() const { return mesh_.count; }

    double mu() const { return mu_; }
    double x_max() const { return x_.back(); }
    double xi_max() const { return xi_.back(); }

    std::span<const double> x_nodes() const { return x_; }
    std::span<const double> xi_nodes() const { return xi_; }
    std::span<const double> epsilon_nodes() const { return eps_; }
    std::span<const double> c_nodes() const { return c_; }
    std::span<const double> f_nodes() const { return f_; }
    /// d xi / d(mesh variable) at each node.
    std::span<const double> jacobian_nodes() const { return jac_; }
    bool xi_nodes_uniform() const { return xi_uniform_; }

    double epsilon(double x) const;
    double c(double x) const;
    double xi_of_x(double x) const;
    double x_of_xi(double xi) const;
    double epsilon_tilde(double xi) const { return epsilon(x_of_xi(xi)); }
    double c_tilde(double xi) const { return c(x_of_xi(xi)); }
    double f_tilde(double xi) const;

    /// Node values of int_0^{xi_k} g(xi) d xi for samples g at the profile nodes.
    template <class T>
    std::vector<T> cumulative_xi(std::span<const T> g) const {
        auto anti = integrate_with_weight<T>(mesh_, g, jac_);
        auto v = anti.node_values();
        return {v.begin(), v.end()};
    }

private:
    MediumProfile() = default;
    void derive_from_nodes();

    Permittivity eps_fn_;
    double mu_ = 1.0;
    MeshVariable variable_ = MeshVariable::x;
    UniformMesh mesh_;
    std::vector<double> x_, xi_, eps_, c_, f_, jac_;
    bool xi_uniform_ = false;
    CubicSpline<double> x_guess_;
};

} // namespace vekua
