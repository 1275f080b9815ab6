#include "vekua/transmutation.hpp"

#include "vekua/errors.hpp"
#include "vekua/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace vekua {

namespace {

struct NearPoint {
    LagrangeStencil stencil;
    double weight = 0.0; // Gauss weight on [0, 1]
    double sigma = 0.0;
    double f2 = 1.0;     // f(xi_j sigma)^2
};

// Gauss points of the scaled recursion for one near node.
std::vector<NearPoint> near_points(const MediumProfile& p, int j, const GaussRule& rule) {
    const auto xi = p.xi_nodes();
    const auto f = p.f_nodes();
    std::vector<NearPoint> pts(rule.nodes.size());
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        NearPoint& np = pts[q];
        np.sigma = 0.5 * (1.0 + rule.nodes[q]);
        np.weight = 0.5 * rule.weights[q];
        np.stencil = lagrange_stencil(xi, p.xi_nodes_uniform(), xi[j] * np.sigma);
        double fs = 0.0;
        for (int m = 0; m < 6; ++m) fs += np.stencil.weights[m] * f[np.stencil.start + m];
        np.f2 = fs * fs;
    }
    return pts;
}

// One level of either family: Y^(n) from Y^(n-1) with weight f^{2 sign}.
void advance_level(const MediumProfile& p, int n, int sign,
                   const std::vector<std::vector<NearPoint>>& near,
                   const std::vector<double>& prev_y, std::vector<double>& y,
                   std::vector<double>& x, Execution exec) {
    const int count = p.size();
    const int band = static_cast<int>(near.size());
    const auto xi = p.xi_nodes();
    const auto f = p.f_nodes();

    auto near_value = [&](int j) {
        double acc = 0.0;
        for (const NearPoint& np : near[j]) {
            double yq = 0.0;
            for (int m = 0; m < 6; ++m) yq += np.stencil.weights[m] * prev_y[np.stencil.start + m];
            const double w = sign > 0 ? np.f2 : 1.0 / np.f2;
            acc += np.weight * std::pow(np.sigma, n - 1) * yq * w;
        }
        return n * acc;
    };

    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < band; ++j) y[j] = near_value(j);
    } else {
        for (int j = 0; j < band; ++j) y[j] = near_value(j);
    }
    for (int j = 0; j < band; ++j) x[j] = y[j] * std::pow(xi[j], n);

    if (band >= count) return;

    // Cumulative continuation from the last near node.
    std::vector<double> integrand(count);
    for (int j = 0; j < count; ++j) {
        const double prev_x = prev_y[j] * std::pow(xi[j], n - 1);
        const double f2 = f[j] * f[j];
        integrand[j] = prev_x * (sign > 0 ? f2 : 1.0 / f2);
    }
    const auto cum = p.cumulative_xi<double>(integrand);
    const int anchor = band - 1;
    for (int j = band; j < count; ++j) {
        x[j] = x[anchor] + n * (cum[j] - cum[anchor]);
        y[j] = x[j] / std::pow(xi[j], n);
    }
}

} // namespace

RecursiveIntegrals compute_recursive_integrals(const MediumProfile& profile, int max_order,
                                               const RecursionOptions& options) {
    if (max_order < 0) throw ConfigError("recursive integrals: negative order");
    const int count = profile.size();
    RecursiveIntegrals r;
    r.order = max_order;
    r.X.assign(max_order + 1, std::vector<double>(count, 1.0));
    r.Xt = r.X;
    r.Y = r.X;
    r.Yt = r.X;
    if (max_order == 0) return r;

    const int band = std::clamp(options.near_nodes, 1, count);
    const GaussRule rule = gauss_legendre(options.gauss_points);
    std::vector<std::vector<NearPoint>> near(band);
    for (int j = 0; j < band; ++j) near[j] = near_points(profile, j, rule);

    for (int n = 1; n <= max_order; ++n) {
        // X^(n) integrates (f^2)^{(-1)^n}; X~^(n) the opposite power.
        const int sign = (n % 2 == 0) ? 1 : -1;
        advance_level(profile, n, sign, near, r.Y[n - 1], r.Y[n], r.X[n], options.execution);
        advance_level(profile, n, -sign, near, r.Yt[n - 1], r.Yt[n], r.Xt[n], options.execution);
    }
    return r;
}

Families compute_phi_psi(const RecursiveIntegrals& r, const MediumProfile& profile) {
    const int count = profile.size();
    const auto f = profile.f_nodes();
    const auto xi = profile.xi_nodes();
    Families fam;
    fam.order = r.order;
    fam.phi.assign(r.order + 1, std::vector<double>(count));
    fam.psi = fam.phi;
    fam.phi_scaled = fam.phi;
    fam.psi_scaled = fam.phi;
    for (int k = 0; k <= r.order; ++k) {
        const bool odd = (k % 2) != 0;
        const auto& for_phi = odd ? r.Y[k] : r.Yt[k];
        const auto& for_psi = odd ? r.Yt[k] : r.Y[k];
        for (int j = 0; j < count; ++j) {
            fam.phi_scaled[k][j] = f[j] * for_phi[j];
            fam.psi_scaled[k][j] = for_psi[j] / f[j];
            const double scale = std::pow(xi[j], k);
            fam.phi[k][j] = fam.phi_scaled[k][j] * scale;
            fam.psi[k][j] = fam.psi_scaled[k][j] * scale;
        }
    }
    return fam;
}

CoefficientTable::CoefficientTable(std::vector<double> xi, std::vector<std::vector<double>> a,
                                   std::vector<std::vector<double>> b, std::vector<double> noise)
    : xi_(std::move(xi)), a_(std::move(a)), b_(std::move(b)), noise_(std::move(noise)) {
    if (a_.empty() || a_.size() != b_.size()) throw ConfigError("coefficient table: bad shape");
    a_spline_.reserve(a_.size());
    b_spline_.reserve(b_.size());
    for (std::size_t n = 0; n < a_.size(); ++n) {
        a_spline_.emplace_back(xi_, a_[n]);
        b_spline_.emplace_back(xi_, b_[n]);
    }
    if (noise_.size() != a_.size()) noise_.assign(a_.size(), 0.0);
    order_ = computed_order();
}

void CoefficientTable::truncate(int n) {
    if (n < 0 || n > computed_order())
        throw ConfigError("truncation order " + std::to_string(n) + " outside [0, " +
                          std::to_string(computed_order()) + "]");
    order_ = n;
}

CoefficientTable CoefficientTable::zeros(std::vector<double> xi, int order) {
    std::vector<std::vector<double>> z(order + 1, std::vector<double>(xi.size(), 0.0));
    return {std::move(xi), z, z, std::vector<double>(order + 1, 0.0)};
}

CoefficientTable compute_coefficients(const Families& families, const MediumProfile& profile,
                                      int max_order) {
    if (max_order > families.order)
        throw ConfigError("coefficients: families only reach order " +
                          std::to_string(families.order));
    const auto& l = legendre_coefficient_table(max_order);
    const int count = profile.size();
    std::vector<std::vector<double>> a(max_order + 1, std::vector<double>(count));
    std::vector<std::vector<double>> b = a;
    std::vector<double> noise(max_order + 1, 0.0);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int n = 0; n <= max_order; ++n) {
        const double pref = 0.5 * (2.0 * n + 1.0);
        double floor = 0.0;
        for (int j = 0; j < count; ++j) {
            long double sa = 0.0L, sb = 0.0L;
            double mag = 0.0;
            for (int k = 0; k <= n; ++k) {
                if (l[n][k] == 0.0) continue;
                sa += static_cast<long double>(l[n][k]) * families.phi_scaled[k][j];
                sb += static_cast<long double>(l[n][k]) * families.psi_scaled[k][j];
                mag += std::abs(l[n][k]) *
                       (std::abs(families.phi_scaled[k][j]) + std::abs(families.psi_scaled[k][j])) *
                       (k + 1);
            }
            a[n][j] = pref * static_cast<double>(sa - 1.0L);
            b[n][j] = pref * static_cast<double>(sb - 1.0L);
            floor = std::max(floor, pref * mag);
        }
        // Each recursion level contributes a few ulps of relative error to
        // Y^(k), hence the (k + 1) weighting above.
        noise[n] = 8.0 * eps * floor;
        // Direct formulas are exact at xi = 0 (phi_k / xi^k -> 1, sum_k l_{k,n} = 1).
        a[n][0] = 0.0;
        b[n][0] = 0.0;
    }
    auto xi = profile.xi_nodes();
    return {std::vector<double>(xi.begin(), xi.end()), std::move(a), std::move(b),
            std::move(noise)};
}

std::pair<double, double> kernel_eval(const CoefficientTable& table, double xi, double tau) {
    if (!(xi > 0.0) || xi > table.xi_max() * (1.0 + 1e-12))
        throw DomainError("kernel_eval: xi = " + std::to_string(xi) + " outside (0, " +
                          std::to_string(table.xi_max()) + "]");
    if (std::abs(tau) > xi * (1.0 + 1e-12))
        throw DomainError("kernel_eval: tau = " + std::to_string(tau) + " outside [-xi, xi]");
    const int order = table.order();
    std::vector<double> p(order + 1);
    legendre_sequence(order, std::clamp(tau / xi, -1.0, 1.0), p);
    double kf = 0.0, kg = 0.0;
    for (int n = 0; n <= order; ++n) {
        kf += table.a_at(n, xi) * p[n];
        kg += table.b_at(n, xi) * p[n];
    }
    return {kf / xi, kg / xi};
}

TruncationChoice select_truncation(const CoefficientTable& table) {
    const int top = table.computed_order();
    TruncationChoice c;
    c.magnitude.assign(top + 1, 0.0);
    c.noise.assign(top + 1, 0.0);
    const auto nodes = table.xi_nodes();
    for (int n = 0; n <= top; ++n) {
        const auto a = table.a(n);
        const auto b = table.b(n);
        double m = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) m = std::max(m, std::abs(a[j]) + std::abs(b[j]));
        c.magnitude[n] = m;
        c.noise[n] = table.noise(n);
    }
    int first_noise = -1;
    for (int n = 0; n <= top; ++n) {
        if (!(c.magnitude[n] > c.noise[n])) {
            first_noise = n;
            break;
        }
    }
    if (first_noise < 0) {
        c.order = top;
        c.plateau_found = false;
    } else {
        c.order = std::max(first_noise - 1, 0);
    }
    c.tail.assign(nodes.size(), 0.0);
    const int last = std::min(top, c.order + kTailWindow);
    for (int n = c.order + 1; n <= last; ++n) {
        const auto a = table.a(n);
        const auto b = table.b(n);
        for (std::size_t j = 0; j < nodes.size(); ++j) c.tail[j] += std::abs(a[j]) + std::abs(b[j]);
    }
    return c;
}

BuiltTable build_coefficient_table(const MediumProfile& profile, const TableOptions& options) {
    const int top = options.order ? std::max(*options.order, 0) : options.max_order;
    if (top > kLegendreCap)
        throw ConfigError("truncation order " + std::to_string(top) + " exceeds cap " +
                          std::to_string(kLegendreCap));
    const int computed = options.order ? std::min(top + kTailWindow, kLegendreCap) : top;
    const auto r = compute_recursive_integrals(profile, computed, options.recursion);
    const auto fam = compute_phi_psi(r, profile);
    BuiltTable built{compute_coefficients(fam, profile, computed), {}};
    built.choice = select_truncation(built.table);
    if (options.order) {
        built.choice.order = *options.order;
        built.choice.tail.assign(profile.size(), 0.0);
        for (int n = *options.order + 1; n <= computed; ++n)
            for (int j = 0; j < profile.size(); ++j)
                built.choice.tail[j] += std::abs(built.table.a(n)[j]) + std::abs(built.table.b(n)[j]);
    }
    built.table.truncate(built.choice.order);
    return built;
}

} // namespace vekua
