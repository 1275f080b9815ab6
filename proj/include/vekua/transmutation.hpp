#pragma once

// Fourier-Legendre coefficients a_n, b_n of the transmutation kernels
//   K_f(xi, tau)   = sum_n a_n(xi)/xi P_n(tau/xi)
//   K_1/f(xi, tau) = sum_n b_n(xi)/xi P_n(tau/xi)
// built from the recursive integrals X^(n), X~^(n) of f^{+-2}.

#include "vekua/execution.hpp"
#include "vekua/interpolation.hpp"
#include "vekua/medium.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace vekua {

/// X^(n) and X~^(n) at the profile nodes, together with their scaled forms
/// Y^(n) = X^(n) / xi^n, which stay O(1) as xi -> 0 (Y^(n)(0) = 1).
struct RecursiveIntegrals {
    int order = 0;
    std::vector<std::vector<double>> X, Xt;
    std::vector<std::vector<double>> Y, Yt;
};

struct RecursionOptions {
    /// Nodes next to xi = 0 evaluated through the scaled recursion
    ///   Y^(n)(xi) = n int_0^1 s^{n-1} Y^(n-1)(xi s) w(xi s) ds
    /// instead of cumulative integration, where a cumulative rule loses
    /// relative accuracy on integrands behaving like s^{n-1}.
    int near_nodes = 1000;
    int gauss_points = 64;
    Execution execution = Execution::parallel;
};

RecursiveIntegrals compute_recursive_integrals(const MediumProfile& profile, int max_order,
                                               const RecursionOptions& options = {});

/// phi_k, psi_k and their scaled forms phi_k / xi^k, psi_k / xi^k.
struct Families {
    int order = 0;
    std::vector<std::vector<double>> phi, psi;
    std::vector<std::vector<double>> phi_scaled, psi_scaled;
};

Families compute_phi_psi(const RecursiveIntegrals& r, const MediumProfile& profile);

class CoefficientTable {
public:
    CoefficientTable() = default;
    CoefficientTable(std::vector<double> xi, std::vector<std::vector<double>> a,
                     std::vector<std::vector<double>> b, std::vector<double> noise);

    /// Truncation order in use.
    int order() const { return order_; }
    /// Highest order available.
    int computed_order() const { return static_cast<int>(a_.size()) - 1; }
    /// Restricts evaluation to orders 0..n (n <= computed_order()).
    void truncate(int n);

    std::span<const double> xi_nodes() const { return xi_; }
    std::span<const double> a(int n) const { return a_[n]; }
    std::span<const double> b(int n) const { return b_[n]; }
    /// Estimated rounding floor of max_xi |a_n| + |b_n|.
    double noise(int n) const { return noise_[n]; }

    double a_at(int n, double xi) const { return a_spline_[n](xi); }
    double b_at(int n, double xi) const { return b_spline_[n](xi); }
    double xi_max() const { return xi_.back(); }

    /// Zero table (homogeneous medium) over the given nodes.
    static CoefficientTable zeros(std::vector<double> xi, int order);

private:
    std::vector<double> xi_;
    std::vector<std::vector<double>> a_, b_;
    std::vector<double> noise_;
    std::vector<CubicSpline<double>> a_spline_, b_spline_;
    int order_ = 0;
};

/// a_n = (2n+1)/2 (sum_k l_{k,n} phi_k / xi^k - 1), b_n likewise with psi_k,
/// for n = 0..max_order. Throws ConfigError beyond the Legendre cap.
CoefficientTable compute_coefficients(const Families& families, const MediumProfile& profile,
                                      int max_order);

/// (K_f(xi, tau), K_1/f(xi, tau)) truncated at table.order().
std::pair<double, double> kernel_eval(const CoefficientTable& table, double xi, double tau);

struct TruncationChoice {
    int order = 0;
    bool plateau_found = true;
    /// max_xi |a_n| + |b_n| and its noise floor, per computed order.
    std::vector<double> magnitude;
    std::vector<double> noise;
    /// Tail indicator sum_{N < n <= N + kTailWindow} |a_n(xi)| + |b_n(xi)| per node.
    std::vector<double> tail;
};

inline constexpr int kTailWindow = 3;

/// Largest N such that orders 0..N all stand above their noise floor.
TruncationChoice select_truncation(const CoefficientTable& table);

struct TableOptions {
    /// Fixed truncation order; empty selects it automatically.
    std::optional<int> order;
    int max_order = 60;
    RecursionOptions recursion;
};

struct BuiltTable {
    CoefficientTable table;
    TruncationChoice choice;
};

/// Recursive integrals, families, coefficients to max_order and truncation.
BuiltTable build_coefficient_table(const MediumProfile& profile, const TableOptions& options = {});

} // namespace vekua
