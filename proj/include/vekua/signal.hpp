#pragma once

// Initial data W0(t) = sqrt(c(0) eps(0)) E0(t) + i j sqrt(c(0) mu) H0(t) on the
// line x = 0, either as a general signal on [alpha, beta] or as a finite
// Fourier (carrier plus sidebands) sum.

#include "vekua/bicomplex.hpp"
#include "vekua/interpolation.hpp"
#include "vekua/medium.hpp"
#include "vekua/quadrature.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace vekua {

struct SamplingOptions {
    /// Target cubic-interpolation error, relative to max(1, max |W0|).
    double tolerance = 1e-9;
    int min_count = 65;
    int max_count = 1 << 21;
};

class GeneralSignal {
public:
    using Function = std::function<Bicomplex(double)>;

    GeneralSignal() = default;

    /// Samples a callable on [alpha, beta], halving the step until the cubic
    /// spline through the samples meets the tolerance at the midpoints.
    /// Point values keep using the callable itself.
    static GeneralSignal sample(Function w0, double alpha, double beta,
                                const SamplingOptions& options = {});

    /// Tabulated data on a uniform mesh. A fourth-difference estimate of the
    /// spline error beyond the tolerance is reported as a warning.
    static GeneralSignal from_samples(const UniformMesh& mesh, std::vector<Bicomplex> w0,
                                      const SamplingOptions& options = {});

    double alpha() const { return mesh_.start; }
    double beta() const { return mesh_.end(); }
    const UniformMesh& mesh() const { return mesh_; }
    bool has_function() const { return static_cast<bool>(fn_); }

    std::span<const Complex> plus_samples() const { return plus_; }
    std::span<const Complex> minus_samples() const { return minus_; }

    /// W0(t), exact when built from a callable.
    Bicomplex operator()(double t) const;
    /// Interpolated idempotent components, used inside quadratures.
    Complex plus_interp(double t) const { return plus_spline_(t); }
    Complex minus_interp(double t) const { return minus_spline_(t); }

    /// Estimated max interpolation error of the sampled representation.
    double interpolation_error() const { return interp_error_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    void build_splines();

    UniformMesh mesh_;
    Function fn_;
    std::vector<Complex> plus_, minus_;
    CubicSpline<Complex> plus_spline_, minus_spline_;
    double interp_error_ = 0.0;
    std::vector<std::string> warnings_;
};

/// W0 from E0, H0 callables on the profile's left boundary.
GeneralSignal::Function w0_from_eh(std::function<Complex(double)> e0,
                                   std::function<Complex(double)> h0, const MediumProfile& p);

/// W0 from E0, H0 tables; both meshes must coincide (ConfigError otherwise).
GeneralSignal w0_from_eh(const UniformMesh& e_mesh, std::span<const Complex> e0,
                         const UniformMesh& h_mesh, std::span<const Complex> h0,
                         const MediumProfile& p);

/// E0(t) = sum_m alpha_m e^{i(omega0 + m omega) t}, H0 likewise with beta_m,
/// m = -M..M (index m + M).
struct ModulatedSignal {
    double omega0 = 0.0;
    double omega = 0.0;
    int M = 0;
    std::vector<Complex> alpha;
    std::vector<Complex> beta;

    double frequency(int m) const { return omega0 + m * omega; }
    /// Throws ConfigError unless both amplitude lists hold 2M + 1 entries.
    void validate() const;
    /// c_m = sqrt(c(0)) (sqrt(eps(0)) alpha_m + i j sqrt(mu) beta_m).
    std::vector<Bicomplex> amplitudes(const MediumProfile& p) const;
    /// sum_m (|c_m+| + |c_m-|).
    double amplitude_norm(const MediumProfile& p) const;
    GeneralSignal::Function as_function(const MediumProfile& p) const;
};

} // namespace vekua
