#include "vekua/signal.hpp"

#include "vekua/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vekua {

namespace {

constexpr Complex kI{0.0, 1.0};

double scale_of(std::span<const Complex> a, std::span<const Complex> b) {
    double s = 1.0;
    for (const auto& z : a) s = std::max(s, std::abs(z));
    for (const auto& z : b) s = std::max(s, std::abs(z));
    return s;
}

// Max fourth difference; (5/384) of it bounds the cubic interpolation error
// of a smooth function on a uniform mesh.
double fourth_difference(std::span<const Complex> y) {
    double m = 0.0;
    for (std::size_t k = 0; k + 4 < y.size(); ++k) {
        const Complex d = y[k] - 4.0 * y[k + 1] + 6.0 * y[k + 2] - 4.0 * y[k + 3] + y[k + 4];
        m = std::max(m, std::abs(d));
    }
    return m;
}

} // namespace

void GeneralSignal::build_splines() {
    auto t = mesh_.nodes();
    plus_spline_ = CubicSpline<Complex>(t, plus_);
    minus_spline_ = CubicSpline<Complex>(std::move(t), minus_);
}

GeneralSignal GeneralSignal::sample(Function w0, double alpha, double beta,
                                    const SamplingOptions& options) {
    if (!w0) throw ConfigError("signal: no function given");
    if (!(beta > alpha)) throw ConfigError("signal: empty interval [alpha, beta]");
    if (options.min_count < 6) throw ConfigError("signal: at least 6 samples required");

    GeneralSignal s;
    s.fn_ = std::move(w0);
    int count = options.min_count;
    auto fill = [&](int n) {
        s.mesh_ = UniformMesh::spanning(alpha, beta, n);
        s.plus_.resize(n);
        s.minus_.resize(n);
        for (int k = 0; k < n; ++k) {
            const IdempotentPair p = s.fn_(s.mesh_.node(k)).to_pair();
            s.plus_[k] = p.plus;
            s.minus_[k] = p.minus;
        }
        s.build_splines();
    };
    fill(count);
    for (;;) {
        const double scale = scale_of(s.plus_, s.minus_);
        double err = 0.0;
        for (int k = 0; k + 1 < count; ++k) {
            const double tm = s.mesh_.node(k) + 0.5 * s.mesh_.step;
            const IdempotentPair p = s.fn_(tm).to_pair();
            err = std::max({err, std::abs(s.plus_spline_(tm) - p.plus),
                            std::abs(s.minus_spline_(tm) - p.minus)});
        }
        s.interp_error_ = err;
        if (err <= options.tolerance * scale) break;
        if (2 * count - 1 > options.max_count)
            throw NumericalError("signal: not resolved to " + std::to_string(options.tolerance) +
                                 " with " + std::to_string(count) + " samples");
        count = 2 * count - 1;
        fill(count);
    }
    return s;
}

GeneralSignal GeneralSignal::from_samples(const UniformMesh& mesh, std::vector<Bicomplex> w0,
                                          const SamplingOptions& options) {
    if (static_cast<int>(w0.size()) != mesh.count)
        throw ConfigError("signal: " + std::to_string(w0.size()) + " samples for " +
                          std::to_string(mesh.count) + " mesh nodes");
    detail::require_stencil(mesh.count);
    GeneralSignal s;
    s.mesh_ = mesh;
    s.plus_.resize(w0.size());
    s.minus_.resize(w0.size());
    for (std::size_t k = 0; k < w0.size(); ++k) {
        const IdempotentPair p = w0[k].to_pair();
        s.plus_[k] = p.plus;
        s.minus_[k] = p.minus;
    }
    s.build_splines();
    s.interp_error_ =
        5.0 / 384.0 * std::max(fourth_difference(s.plus_), fourth_difference(s.minus_));
    const double scale = scale_of(s.plus_, s.minus_);
    if (s.interp_error_ > options.tolerance * scale)
        s.warnings_.push_back("signal table looks under-resolved or not smooth: estimated "
                              "interpolation error " + std::to_string(s.interp_error_));
    return s;
}

Bicomplex GeneralSignal::operator()(double t) const {
    if (fn_) {
        const double slack = 1e-12 * std::max(1.0, beta() - alpha());
        if (t < alpha() - slack || t > beta() + slack)
            throw DomainError("signal evaluated at t = " + std::to_string(t) + " outside [" +
                              std::to_string(alpha()) + ", " + std::to_string(beta()) + "]");
        return fn_(t);
    }
    return Bicomplex::from_pair({plus_spline_(t), minus_spline_(t)});
}

GeneralSignal::Function w0_from_eh(std::function<Complex(double)> e0,
                                   std::function<Complex(double)> h0, const MediumProfile& p) {
    if (!e0 || !h0) throw ConfigError("w0_from_eh: E0 and H0 are both required");
    const double eps0 = p.epsilon_nodes()[0];
    const double c0 = p.c_nodes()[0];
    const double ue = std::sqrt(c0 * eps0);
    const double vh = std::sqrt(c0 * p.mu());
    return [e0 = std::move(e0), h0 = std::move(h0), ue, vh](double t) {
        return Bicomplex(ue * e0(t), kI * vh * h0(t));
    };
}

GeneralSignal w0_from_eh(const UniformMesh& e_mesh, std::span<const Complex> e0,
                         const UniformMesh& h_mesh, std::span<const Complex> h0,
                         const MediumProfile& p) {
    const double tol = 1e-12 * std::max(1.0, std::abs(e_mesh.end()));
    if (std::abs(e_mesh.start - h_mesh.start) > tol || std::abs(e_mesh.end() - h_mesh.end()) > tol ||
        e_mesh.count != h_mesh.count)
        throw ConfigError("w0_from_eh: E0 and H0 are given on different meshes");
    if (static_cast<int>(e0.size()) != e_mesh.count || static_cast<int>(h0.size()) != h_mesh.count)
        throw ConfigError("w0_from_eh: sample count does not match the mesh");
    const double ue = std::sqrt(p.c_nodes()[0] * p.epsilon_nodes()[0]);
    const double vh = std::sqrt(p.c_nodes()[0] * p.mu());
    std::vector<Bicomplex> w(e0.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = Bicomplex(ue * e0[k], kI * vh * h0[k]);
    return GeneralSignal::from_samples(e_mesh, std::move(w));
}

void ModulatedSignal::validate() const {
    if (M < 0) throw ConfigError("modulated signal: M must be nonnegative");
    const std::size_t n = 2 * static_cast<std::size_t>(M) + 1;
    if (alpha.size() != n || beta.size() != n)
        throw ConfigError("modulated signal: expected " + std::to_string(n) +
                          " amplitudes for M = " + std::to_string(M));
}

std::vector<Bicomplex> ModulatedSignal::amplitudes(const MediumProfile& p) const {
    validate();
    const double c0 = p.c_nodes()[0];
    const double se = std::sqrt(p.epsilon_nodes()[0]);
    const double sm = std::sqrt(p.mu());
    const double root = std::sqrt(c0);
    std::vector<Bicomplex> c(alpha.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = Bicomplex(root * se * alpha[k], kI * root * sm * beta[k]);
    return c;
}

double ModulatedSignal::amplitude_norm(const MediumProfile& p) const {
    double s = 0.0;
    for (const Bicomplex& c : amplitudes(p)) {
        const IdempotentPair q = c.to_pair();
        s += std::abs(q.plus) + std::abs(q.minus);
    }
    return s;
}

GeneralSignal::Function ModulatedSignal::as_function(const MediumProfile& p) const {
    auto c = amplitudes(p);
    std::vector<double> freq(c.size());
    for (int m = -M; m <= M; ++m) freq[m + M] = frequency(m);
    return [c = std::move(c), freq = std::move(freq)](double t) {
        Bicomplex w;
        for (std::size_t k = 0; k < c.size(); ++k) w += c[k] * std::exp(kI * (freq[k] * t));
        return w;
    };
}

} // namespace vekua
