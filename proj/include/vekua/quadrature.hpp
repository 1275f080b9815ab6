#pragma once

// Sixth-order cumulative integration on uniform meshes.
//
// Each subinterval [x_i, x_{i+1}] is integrated exactly against the degree-5
// interpolant through a window of six consecutive nodes. Interior intervals
// use the centered window {i-2, ..., i+3}; the first two and last two
// intervals use one-sided windows, so any count >= 6 works without padding.
// Off-node antiderivative values integrate the same interpolant partially,
// which keeps the antiderivative continuous and exact for quintics.

#include "vekua/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace vekua {

struct UniformMesh {
    double start = 0.0;
    double step = 1.0;
    int count = 2;

    UniformMesh() = default;
    UniformMesh(double start_, double step_, int count_);

    /// Mesh with `count` nodes spanning [a, b].
    static UniformMesh spanning(double a, double b, int count);

    double node(int k) const { return start + k * step; }
    double end() const { return start + (count - 1) * step; }
    std::vector<double> nodes() const;

    friend bool operator==(const UniformMesh&, const UniformMesh&) = default;
};

namespace detail {

inline constexpr int kStencil = 6;

struct StencilTables {
    /// Antiderivative coefficients of the Lagrange basis on nodes 0..5:
    /// A_m(u) = sum_p poly[m][p] u^p with A_m(0) = 0.
    std::array<std::array<double, kStencil + 1>, kStencil> poly{};
    /// whole[r][m] = A_m(r + 1) - A_m(r), r = 0..4.
    std::array<std::array<double, kStencil>, kStencil - 1> whole{};

    double antiderivative(int m, double u) const {
        double acc = 0.0;
        for (int p = kStencil; p >= 0; --p) acc = acc * u + poly[m][p];
        return acc;
    }
};

const StencilTables& stencil_tables();

inline int stencil_start(int interval, int count) {
    return std::clamp(interval - 2, 0, count - kStencil);
}

void require_stencil(int count);

} // namespace detail

/// Cumulative integral F(x) = int_{start}^{x} g with piecewise-quintic
/// off-node evaluation.
template <class T>
class BasicAntiderivative {
public:
    BasicAntiderivative() = default;
    BasicAntiderivative(UniformMesh mesh, std::vector<T> samples, std::vector<T> cumulative)
        : mesh_(mesh), samples_(std::move(samples)), cumulative_(std::move(cumulative)) {}

    const UniformMesh& mesh() const { return mesh_; }
    std::span<const T> node_values() const { return cumulative_; }
    std::span<const T> samples() const { return samples_; }
    T at_node(int k) const { return cumulative_[k]; }

    T operator()(double z) const {
        const double span = mesh_.end() - mesh_.start;
        const double slack = 1e-12 * std::max(1.0, std::abs(span));
        if (z < mesh_.start - slack || z > mesh_.end() + slack)
            throw DomainError("antiderivative evaluated at " + std::to_string(z) +
                              " outside [" + std::to_string(mesh_.start) + ", " +
                              std::to_string(mesh_.end()) + "]");
        const double u = (z - mesh_.start) / mesh_.step;
        int i = static_cast<int>(std::floor(u));
        i = std::clamp(i, 0, mesh_.count - 2);
        const double theta = u - i;
        if (theta == 0.0) return cumulative_[i];
        const auto& tab = detail::stencil_tables();
        const int s = detail::stencil_start(i, mesh_.count);
        const double r = i - s;
        T acc{};
        for (int m = 0; m < detail::kStencil; ++m)
            acc += (tab.antiderivative(m, r + theta) - tab.antiderivative(m, r)) * samples_[s + m];
        return cumulative_[i] + mesh_.step * acc;
    }

private:
    UniformMesh mesh_;
    std::vector<T> samples_;
    std::vector<T> cumulative_;
};

using Antiderivative = BasicAntiderivative<double>;
using ComplexAntiderivative = BasicAntiderivative<std::complex<double>>;

/// Throws ConfigError when samples.size() != mesh.count or count < 6.
template <class T>
BasicAntiderivative<T> cumulative_integral(const UniformMesh& mesh, std::vector<T> samples) {
    detail::require_stencil(mesh.count);
    if (static_cast<int>(samples.size()) != mesh.count)
        throw ConfigError("cumulative_integral: " + std::to_string(samples.size()) +
                          " samples for a mesh of " + std::to_string(mesh.count) + " nodes");
    const auto& tab = detail::stencil_tables();
    std::vector<T> cum(mesh.count);
    cum[0] = T{};
    for (int i = 0; i + 1 < mesh.count; ++i) {
        const int s = detail::stencil_start(i, mesh.count);
        const auto& w = tab.whole[i - s];
        T acc{};
        for (int m = 0; m < detail::kStencil; ++m) acc += w[m] * samples[s + m];
        cum[i + 1] = cum[i] + mesh.step * acc;
    }
    return {mesh, std::move(samples), std::move(cum)};
}

/// anti(b) - anti(a).
template <class T>
T definite_integral(const BasicAntiderivative<T>& anti, double a, double b) {
    if (a == b) return T{};
    return anti(b) - anti(a);
}

/// Cumulative integral in a transformed variable s(x) with ds/dx = weight,
/// computed on the x-mesh: node k holds int_0^{s(x_k)} g ds = int_0^{x_k} g weight dx.
/// Throws ConfigError for a nonpositive weight node.
template <class T>
BasicAntiderivative<T> integrate_with_weight(const UniformMesh& mesh, std::span<const T> g,
                                             std::span<const double> weight) {
    if (g.size() != weight.size())
        throw ConfigError("integrate_with_weight: sample/weight size mismatch");
    std::vector<T> prod(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!(weight[k] > 0.0))
            throw ConfigError("integrate_with_weight: nonpositive weight at node " +
                              std::to_string(k));
        prod[k] = g[k] * weight[k];
    }
    return cumulative_integral(mesh, std::move(prod));
}

/// Weights of the composite rule on `count` unit-spaced nodes: the integral
/// over the whole mesh is step * sum_k w[k] g[k].
std::vector<double> composite_weights(int count);

} // namespace vekua
