#pragma once

#include "vekua/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace vekua {

namespace detail {

/// Interval index i with nodes[i] <= z <= nodes[i+1]; uniform meshes skip the search.
inline int locate(std::span<const double> nodes, bool uniform, double z) {
    const int n = static_cast<int>(nodes.size());
    int i;
    if (uniform) {
        const double h = (nodes[n - 1] - nodes[0]) / (n - 1);
        i = static_cast<int>(std::floor((z - nodes[0]) / h));
        i = std::clamp(i, 0, n - 2);
        // Guard against rounding at interval boundaries.
        if (z < nodes[i] && i > 0) --i;
        else if (z > nodes[i + 1] && i < n - 2) ++i;
    } else {
        auto it = std::upper_bound(nodes.begin(), nodes.end(), z);
        i = static_cast<int>(it - nodes.begin()) - 1;
        i = std::clamp(i, 0, n - 2);
    }
    return i;
}

bool is_uniform(std::span<const double> nodes);

void check_increasing(std::span<const double> nodes, const char* who);

} // namespace detail

/// Not-a-knot cubic spline on strictly increasing nodes.
template <class T>
class CubicSpline {
public:
    CubicSpline() = default;

    CubicSpline(std::vector<double> nodes, std::vector<T> values)
        : x_(std::move(nodes)), y_(std::move(values)) {
        if (x_.size() != y_.size()) throw ConfigError("CubicSpline: size mismatch");
        if (x_.size() < 2) throw ConfigError("CubicSpline: need at least two nodes");
        detail::check_increasing(x_, "CubicSpline");
        uniform_ = detail::is_uniform(x_);
        solve_moments();
    }

    double front() const { return x_.front(); }
    double back() const { return x_.back(); }
    std::span<const double> nodes() const { return x_; }
    std::span<const T> values() const { return y_; }
    bool empty() const { return x_.empty(); }

    T operator()(double z) const {
        const int i = index_checked(z);
        const double h = x_[i + 1] - x_[i];
        const double a = (x_[i + 1] - z) / h;
        const double b = (z - x_[i]) / h;
        return a * y_[i] + b * y_[i + 1] +
               ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * (h * h / 6.0);
    }

    T derivative(double z) const {
        const int i = index_checked(z);
        const double h = x_[i + 1] - x_[i];
        const double a = (x_[i + 1] - z) / h;
        const double b = (z - x_[i]) / h;
        return (y_[i + 1] - y_[i]) / h +
               ((1.0 - 3.0 * a * a) * m_[i] + (3.0 * b * b - 1.0) * m_[i + 1]) * (h / 6.0);
    }

private:
    int index_checked(double z) const {
        const double slack = 1e-12 * std::max(1.0, x_.back() - x_.front());
        if (!(z >= x_.front() - slack && z <= x_.back() + slack))
            throw DomainError("spline evaluated at " + std::to_string(z) + " outside [" +
                              std::to_string(x_.front()) + ", " + std::to_string(x_.back()) +
                              "]");
        return detail::locate(x_, uniform_, z);
    }

    void solve_moments() {
        const int n = static_cast<int>(x_.size());
        m_.assign(n, T{});
        if (n == 2) return;
        std::vector<double> h(n - 1);
        std::vector<T> d(n - 1);
        for (int i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            d[i] = (y_[i + 1] - y_[i]) / h[i];
        }
        if (n == 3) {
            // Not-a-knot on three nodes is the interpolating parabola.
            const T second = 2.0 * (d[1] - d[0]) / (h[0] + h[1]);
            m_[0] = m_[1] = m_[2] = second;
            return;
        }
        // Tridiagonal system for M_1..M_{n-2}; M_0 and M_{n-1} eliminated by
        // the not-a-knot conditions.
        const int k = n - 2;
        std::vector<double> lower(k, 0.0), diag(k, 0.0), upper(k, 0.0);
        std::vector<T> rhs(k);
        for (int r = 0; r < k; ++r) {
            const int i = r + 1;
            lower[r] = h[i - 1];
            diag[r] = 2.0 * (h[i - 1] + h[i]);
            upper[r] = h[i];
            rhs[r] = 6.0 * (d[i] - d[i - 1]);
        }
        diag[0] = (h[0] + h[1]) * (h[0] + 2.0 * h[1]) / h[1];
        upper[0] = (h[1] * h[1] - h[0] * h[0]) / h[1];
        const double hl = h[n - 3];
        const double hr = h[n - 2];
        diag[k - 1] = (hl + hr) * (2.0 * hl + hr) / hl;
        lower[k - 1] = (hl * hl - hr * hr) / hl;
        // Thomas algorithm.
        for (int r = 1; r < k; ++r) {
            const double w = lower[r] / diag[r - 1];
            diag[r] -= w * upper[r - 1];
            rhs[r] -= w * rhs[r - 1];
        }
        std::vector<T> mid(k);
        mid[k - 1] = rhs[k - 1] / diag[k - 1];
        for (int r = k - 2; r >= 0; --r) mid[r] = (rhs[r] - upper[r] * mid[r + 1]) / diag[r];
        for (int r = 0; r < k; ++r) m_[r + 1] = mid[r];
        m_[0] = ((h[0] + h[1]) * m_[1] - h[0] * m_[2]) / h[1];
        m_[n - 1] = ((hl + hr) * m_[n - 2] - hr * m_[n - 3]) / hl;
    }

    std::vector<double> x_;
    std::vector<T> y_;
    std::vector<T> m_;
    bool uniform_ = false;
};

/// Six-point Lagrange interpolation weights on arbitrary increasing nodes,
/// centered on the interval containing z where the mesh allows.
struct LagrangeStencil {
    int start = 0;
    std::array<double, 6> weights{};
};

LagrangeStencil lagrange_stencil(std::span<const double> nodes, bool uniform, double z);

} // namespace vekua
