#include "vekua/solver.hpp"

#include "vekua/errors.hpp"
#include "vekua/quadrature.hpp"
#include "vekua/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>

namespace vekua {

namespace {

constexpr Complex kI{0.0, 1.0};

double signal_slack(const GeneralSignal& s) { return 1e-12 * std::max(1.0, s.beta() - s.alpha()); }

bool in_domain(const GeneralSignal& s, double t, double xi, double slack) {
    return t - xi >= s.alpha() - slack && t + xi <= s.beta() + slack;
}

double clamp_to(const GeneralSignal& s, double z) { return std::clamp(z, s.alpha(), s.beta()); }

/// d'Alembert part P+ W0+(t + xi) + P- W0-(t - xi).
Bicomplex travelling(const GeneralSignal& s, double t, double xi) {
    if (xi == 0.0) return s(t);
    const Complex plus = s(clamp_to(s, t + xi)).to_pair().plus;
    const Complex minus = s(clamp_to(s, t - xi)).to_pair().minus;
    return Bicomplex::from_pair({plus, minus});
}

SolutionField make_field(const MediumProfile& p, const XtMesh& mesh, Method method, int order) {
    if (mesh.x.empty() || mesh.t.empty()) throw ConfigError("evaluation mesh is empty");
    SolutionField f;
    f.x = mesh.x;
    f.t = mesh.t;
    f.method = method;
    f.order = order;
    f.xi.resize(f.x.size());
    for (std::size_t i = 0; i < f.x.size(); ++i) f.xi[i] = p.xi_of_x(f.x[i]);
    f.W.assign(mesh.size(), Bicomplex{});
    f.valid.assign(mesh.size(), 1);
    return f;
}

// Runs row(ix) for every x row; the first exception thrown by any row is
// rethrown after the loop.
template <class Row>
void for_rows(std::size_t nx, Execution exec, Row&& row) {
    std::exception_ptr failure;
    std::mutex guard;
    const long n = static_cast<long>(nx);
    auto body = [&](long ix) {
        try {
            row(static_cast<std::size_t>(ix));
        } catch (...) {
            std::lock_guard<std::mutex> lock(guard);
            if (!failure) failure = std::current_exception();
        }
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long ix = 0; ix < n; ++ix) body(ix);
    } else {
        for (long ix = 0; ix < n; ++ix) body(ix);
    }
    if (failure) std::rethrow_exception(failure);
}

void finish(SolutionField& f, const MediumProfile& p, const SolveOptions& options) {
    to_physical(f, p);
    if (options.strict) {
        const MissingReport r = f.missing();
        if (r.count > 0)
            throw NumericalError(std::to_string(r.count) +
                                 " points outside the domain of dependence, x in [" +
                                 std::to_string(r.x_min) + ", " + std::to_string(r.x_max) +
                                 "], t in [" + std::to_string(r.t_min) + ", " +
                                 std::to_string(r.t_max) + "]");
    }
}

void check_order(const CoefficientTable& table, int order) {
    if (order < 0 || order > table.computed_order())
        throw ConfigError("truncation order " + std::to_string(order) + " outside [0, " +
                          std::to_string(table.computed_order()) + "]");
}

void coefficients_at(const CoefficientTable& table, int order, double xi, std::vector<double>& a,
                     std::vector<double>& b) {
    a.resize(order + 1);
    b.resize(order + 1);
    for (int n = 0; n <= order; ++n) {
        a[n] = xi == 0.0 ? 0.0 : table.a_at(n, xi);
        b[n] = xi == 0.0 ? 0.0 : table.b_at(n, xi);
    }
}

void direct_row(const CoefficientTable& table, int order, const GeneralSignal& sig,
                SolutionField& f, std::size_t ix) {
    const double xi = f.xi[ix];
    const double slack = signal_slack(sig);
    const std::size_t nt = f.t.size();
    if (xi == 0.0) {
        for (std::size_t it = 0; it < nt; ++it) {
            const double t = f.t[it];
            if (!in_domain(sig, t, 0.0, slack)) {
                f.valid[f.index(ix, it)] = 0;
                continue;
            }
            f.W[f.index(ix, it)] = sig(clamp_to(sig, t));
        }
        return;
    }
    std::vector<double> a, b;
    coefficients_at(table, order, xi, a, b);
    const int terms = order + 1;

    // Uniform tau-mesh no coarser than the signal's, with enough nodes for
    // the degree-N Legendre factor.
    const int count = std::max({static_cast<int>(std::ceil(2.0 * xi / sig.mesh().step)) + 1,
                                2 * order + 12, 7});
    const double h = 2.0 * xi / (count - 1);
    const auto w = composite_weights(count);
    std::vector<double> tau(count), pw(static_cast<std::size_t>(count) * terms);
    std::vector<double> pn(terms);
    for (int k = 0; k < count; ++k) {
        tau[k] = -xi + k * h;
        legendre_sequence(order, std::clamp(tau[k] / xi, -1.0, 1.0), pn);
        for (int n = 0; n < terms; ++n) pw[k * terms + n] = w[k] * h * pn[n] / (2.0 * xi);
    }
    tau[count - 1] = xi;

    std::vector<Complex> sp(terms), sm(terms);
    for (std::size_t it = 0; it < nt; ++it) {
        const double t = f.t[it];
        const std::size_t id = f.index(ix, it);
        if (!in_domain(sig, t, xi, slack)) {
            f.valid[id] = 0;
            continue;
        }
        std::fill(sp.begin(), sp.end(), Complex{});
        std::fill(sm.begin(), sm.end(), Complex{});
        for (int k = 0; k < count; ++k) {
            const Complex zp = sig.plus_interp(clamp_to(sig, t + tau[k]));
            const Complex zm = sig.minus_interp(clamp_to(sig, t - tau[k]));
            const double* row = &pw[k * terms];
            for (int n = 0; n < terms; ++n) {
                sp[n] += row[n] * zp;
                sm[n] += row[n] * zm;
            }
        }
        Complex u{}, v{};
        for (int n = 0; n < terms; ++n) {
            u += a[n] * (sp[n] + sm[n]);
            v += b[n] * (sp[n] - sm[n]);
        }
        f.W[id] = travelling(sig, t, xi) + Bicomplex(u, v);
    }
}

// Antiderivatives of (z - c)^l W0+-(z), l = 0..order, for a row of centers c
// placed on signal nodes. Each center keeps only the window of nodes its
// evaluations reach and is integrated outward from c, so stored values are of
// the size of the integral over [c, z], not over the whole signal.
class MomentBank {
public:
    MomentBank(const GeneralSignal& sig, int order, double spacing, double reach)
        : mesh_(sig.mesh()), terms_(order + 1) {
        const int n = mesh_.count;
        const double h = mesh_.step;
        int stride = std::clamp(static_cast<int>(std::lround(spacing / h)), 1, n - 1);
        // Keep the bank below ~2^24 stored values per branch.
        auto window_nodes = [&](int st) {
            return std::min(n, 2 * (static_cast<int>(std::ceil((st * h + reach) / h)) + 3) + 1);
        };
        while (static_cast<double>(n / stride + 2) * window_nodes(stride) * terms_ > 16777216.0 &&
               stride < n - 1)
            stride *= 2;
        for (int k = 0; k < n; k += stride) anchors_.push_back(k);
        if (anchors_.back() != n - 1) anchors_.push_back(n - 1);
        for (int k : anchors_) centers_.push_back(mesh_.node(k));

        const int half = static_cast<int>(std::ceil((stride * h + reach) / h)) + 3;
        const auto ps = sig.plus_samples();
        const auto ms = sig.minus_samples();
        const auto& tab = detail::stencil_tables();
        windows_.resize(anchors_.size());
        for (std::size_t c = 0; c < anchors_.size(); ++c) {
            Window& w = windows_[c];
            const int anchor = anchors_[c];
            int first = std::max(0, anchor - half);
            int last = std::min(n - 1, anchor + half);
            if (last - first + 1 < detail::kStencil) {
                first = std::clamp(anchor - 2, 0, n - detail::kStencil);
                last = first + detail::kStencil - 1;
            }
            w.first = first;
            w.count = last - first + 1;
            const std::size_t size = static_cast<std::size_t>(w.count) * terms_;
            for (int br = 0; br < 2; ++br) {
                w.samples[br].resize(size);
                w.cum[br].assign(size, Complex{});
            }
            for (int k = 0; k < w.count; ++k) {
                const double zeta = mesh_.node(first + k) - centers_[c];
                double pw = 1.0;
                for (int l = 0; l < terms_; ++l) {
                    w.samples[0][k * terms_ + l] = pw * ps[first + k];
                    w.samples[1][k * terms_ + l] = pw * ms[first + k];
                    pw *= zeta;
                }
            }
            auto panel = [&](int br, int i, int l) {
                const int s = detail::stencil_start(i, w.count);
                const auto& wt = tab.whole[i - s];
                Complex acc{};
                for (int m = 0; m < detail::kStencil; ++m)
                    acc += wt[m] * w.samples[br][(s + m) * terms_ + l];
                return h * acc;
            };
            const int a = anchor - first;
            for (int br = 0; br < 2; ++br)
                for (int l = 0; l < terms_; ++l) {
                    for (int i = a; i + 1 < w.count; ++i)
                        w.cum[br][(i + 1) * terms_ + l] = w.cum[br][i * terms_ + l] + panel(br, i, l);
                    for (int i = a - 1; i >= 0; --i)
                        w.cum[br][i * terms_ + l] = w.cum[br][(i + 1) * terms_ + l] - panel(br, i, l);
                }
        }
    }

    /// One center at an arbitrary abscissa, moments integrated from the first
    /// signal node: the plain form of the rearranged formula.
    MomentBank(const GeneralSignal& sig, int order, double center)
        : mesh_(sig.mesh()), terms_(order + 1) {
        anchors_ = {0};
        centers_ = {center};
        windows_.resize(1);
        Window& w = windows_[0];
        w.first = 0;
        w.count = mesh_.count;
        const std::size_t size = static_cast<std::size_t>(w.count) * terms_;
        const auto ps = sig.plus_samples();
        const auto ms = sig.minus_samples();
        for (int br = 0; br < 2; ++br) {
            w.samples[br].resize(size);
            w.cum[br].assign(size, Complex{});
        }
        for (int k = 0; k < w.count; ++k) {
            const double zeta = mesh_.node(k) - center;
            double pw = 1.0;
            for (int l = 0; l < terms_; ++l) {
                w.samples[0][k * terms_ + l] = pw * ps[k];
                w.samples[1][k * terms_ + l] = pw * ms[k];
                pw *= zeta;
            }
        }
        const auto& tab = detail::stencil_tables();
        for (int br = 0; br < 2; ++br)
            for (int i = 0; i + 1 < w.count; ++i) {
                const int s = detail::stencil_start(i, w.count);
                const auto& wt = tab.whole[i - s];
                for (int l = 0; l < terms_; ++l) {
                    Complex acc{};
                    for (int m = 0; m < detail::kStencil; ++m)
                        acc += wt[m] * w.samples[br][(s + m) * terms_ + l];
                    w.cum[br][(i + 1) * terms_ + l] = w.cum[br][i * terms_ + l] + mesh_.step * acc;
                }
            }
    }

    int nearest(double t) const {
        auto it = std::lower_bound(centers_.begin(), centers_.end(), t);
        if (it == centers_.end()) return static_cast<int>(centers_.size()) - 1;
        if (it == centers_.begin()) return 0;
        const int hi = static_cast<int>(it - centers_.begin());
        return (t - centers_[hi - 1] <= centers_[hi] - t) ? hi - 1 : hi;
    }

    double center(int c) const { return centers_[c]; }

    /// plus[l], minus[l] = int_c^z (zeta - c)^l W0+-(zeta) d zeta.
    void eval(int c, double z, Complex* plus, Complex* minus) const {
        const Window& w = windows_[c];
        const double z0 = mesh_.node(w.first);
        const double z1 = mesh_.node(w.first + w.count - 1);
        const double u = (std::clamp(z, z0, z1) - z0) / mesh_.step;
        const int i = std::clamp(static_cast<int>(std::floor(u)), 0, w.count - 2);
        const double theta = u - i;
        for (int l = 0; l < terms_; ++l) {
            plus[l] = w.cum[0][i * terms_ + l];
            minus[l] = w.cum[1][i * terms_ + l];
        }
        if (theta == 0.0) return;
        const auto& tab = detail::stencil_tables();
        const int s = detail::stencil_start(i, w.count);
        const double r = i - s;
        double wt[detail::kStencil];
        for (int m = 0; m < detail::kStencil; ++m)
            wt[m] = mesh_.step * (tab.antiderivative(m, r + theta) - tab.antiderivative(m, r));
        for (int m = 0; m < detail::kStencil; ++m) {
            const Complex* p = &w.samples[0][(s + m) * terms_];
            const Complex* q = &w.samples[1][(s + m) * terms_];
            for (int l = 0; l < terms_; ++l) {
                plus[l] += wt[m] * p[l];
                minus[l] += wt[m] * q[l];
            }
        }
    }

    /// Distance between neighbouring centers.
    double spacing() const {
        return centers_.size() > 1 ? centers_[1] - centers_[0] : mesh_.end() - mesh_.start;
    }

private:
    struct Window {
        int first = 0;
        int count = 0;
        std::vector<Complex> samples[2];
        std::vector<Complex> cum[2];
    };
    UniformMesh mesh_;
    int terms_;
    std::vector<int> anchors_;
    std::vector<double> centers_;
    std::vector<Window> windows_;
};

const std::vector<std::vector<double>>& binomials() {
    static const std::vector<std::vector<double>> table = [] {
        std::vector<std::vector<double>> c(kLegendreCap + 1);
        for (int k = 0; k <= kLegendreCap; ++k) {
            c[k].assign(k + 1, 1.0);
            for (int l = 1; l < k; ++l) c[k][l] = c[k - 1][l - 1] + c[k - 1][l];
        }
        return c;
    }();
    return table;
}

/// c_k = sum_{n >= k} l_{k,n} (a_n, b_n) / (2 xi^{k+1}).
void rearranged_coefficients(int order, double xi, const std::vector<double>& a,
                             const std::vector<double>& b, std::vector<double>& ca,
                             std::vector<double>& cb) {
    const auto& l = legendre_coefficient_table(order);
    ca.assign(order + 1, 0.0);
    cb.assign(order + 1, 0.0);
    for (int k = 0; k <= order; ++k) {
        long double sa = 0.0L, sb = 0.0L;
        for (int n = k; n <= order; ++n) {
            sa += static_cast<long double>(l[n][k]) * a[n];
            sb += static_cast<long double>(l[n][k]) * b[n];
        }
        const double scale = 0.5 / std::pow(xi, k + 1);
        ca[k] = static_cast<double>(sa) * scale;
        cb[k] = static_cast<double>(sb) * scale;
    }
}

void rearranged_row(const CoefficientTable& table, int order, const GeneralSignal& sig,
                    const MomentBank& bank, SolutionField& f, std::size_t ix) {
    const double xi = f.xi[ix];
    const double slack = signal_slack(sig);
    const std::size_t nt = f.t.size();
    const int terms = order + 1;
    std::vector<double> a, b, ca, cb;
    coefficients_at(table, order, xi, a, b);
    rearranged_coefficients(order, xi, a, b, ca, cb);
    const auto& binom = binomials();

    std::vector<Complex> hi_p(terms), hi_m(terms), lo_p(terms), lo_m(terms);
    std::vector<double> pos(terms), neg(terms);
    for (std::size_t it = 0; it < nt; ++it) {
        const double t = f.t[it];
        const std::size_t id = f.index(ix, it);
        if (!in_domain(sig, t, xi, slack)) {
            f.valid[id] = 0;
            continue;
        }
        const int c = bank.nearest(t);
        bank.eval(c, t + xi, hi_p.data(), hi_m.data());
        bank.eval(c, t - xi, lo_p.data(), lo_m.data());
        const double s = t - bank.center(c);
        pos[0] = neg[0] = 1.0;
        for (int k = 1; k < terms; ++k) {
            pos[k] = pos[k - 1] * s;
            neg[k] = neg[k - 1] * -s;
        }
        Complex u{}, v{};
        for (int l = 0; l < terms; ++l) {
            double gp = 0.0, hp = 0.0, gm = 0.0, hm = 0.0;
            for (int k = l; k < terms; ++k) {
                const double c = binom[k][l];
                gp += ca[k] * c * neg[k - l];
                hp += cb[k] * c * neg[k - l];
                gm += ca[k] * c * pos[k - l];
                hm += cb[k] * c * pos[k - l];
            }
            const Complex mp = hi_p[l] - lo_p[l];
            const Complex mm = (l % 2 == 0 ? 1.0 : -1.0) * (hi_m[l] - lo_m[l]);
            u += mp * gp + mm * gm;
            v += mp * hp - mm * hm;
        }
        f.W[id] = travelling(sig, t, xi) + Bicomplex(u, v);
    }
}

} // namespace

std::string_view method_name(Method m) {
    switch (m) {
    case Method::direct: return "direct";
    case Method::rearranged: return "rearranged";
    case Method::modulated: return "modulated";
    }
    return "unknown";
}

XtMesh XtMesh::uniform(double x0, double x1, int nx, double t0, double t1, int nt) {
    if (nx < 1 || nt < 1) throw ConfigError("evaluation mesh needs at least one point per axis");
    if (nx > 1 && !(x1 > x0)) throw ConfigError("evaluation mesh: x range is empty");
    if (nt > 1 && !(t1 > t0)) throw ConfigError("evaluation mesh: t range is empty");
    XtMesh m;
    m.x.resize(nx);
    m.t.resize(nt);
    for (int i = 0; i < nx; ++i) m.x[i] = nx == 1 ? x0 : x0 + (x1 - x0) * i / (nx - 1);
    for (int i = 0; i < nt; ++i) m.t[i] = nt == 1 ? t0 : t0 + (t1 - t0) * i / (nt - 1);
    if (nx > 1) m.x.back() = x1;
    if (nt > 1) m.t.back() = t1;
    return m;
}

MissingReport SolutionField::missing() const {
    MissingReport r;
    r.x_min = r.t_min = std::numeric_limits<double>::infinity();
    r.x_max = r.t_max = -std::numeric_limits<double>::infinity();
    for (std::size_t ix = 0; ix < x.size(); ++ix)
        for (std::size_t it = 0; it < t.size(); ++it) {
            if (valid[index(ix, it)]) continue;
            ++r.count;
            r.x_min = std::min(r.x_min, x[ix]);
            r.x_max = std::max(r.x_max, x[ix]);
            r.t_min = std::min(r.t_min, t[it]);
            r.t_max = std::max(r.t_max, t[it]);
        }
    if (r.count == 0) r.x_min = r.x_max = r.t_min = r.t_max = 0.0;
    return r;
}

double auto_xi_switch(const CoefficientTable& table, int order, double limit, double spacing) {
    check_order(table, order);
    const auto xi = table.xi_nodes();
    const auto& binom = binomials();
    const double r = 0.5 * spacing;
    std::vector<double> a(order + 1), b(order + 1), ca, cb, rp(order + 1), zp(order + 2);
    rp[0] = 1.0;
    for (int k = 1; k <= order; ++k) rp[k] = rp[k - 1] * r;
    for (std::size_t j = xi.size(); j-- > 1;) {
        for (int n = 0; n <= order; ++n) {
            a[n] = table.a(n)[j];
            b[n] = table.b(n)[j];
        }
        rearranged_coefficients(order, xi[j], a, b, ca, cb);
        // Size of the largest terms combined for one point: |c_k| times the
        // bound on sum_l binom(k, l) |s|^{k-l} |moment_l| with |s| <= r.
        const double big = r + xi[j];
        zp[0] = 1.0;
        for (int l = 1; l <= order + 1; ++l) zp[l] = zp[l - 1] * big;
        double amp = 0.0;
        for (int k = 0; k <= order; ++k) {
            double m = 0.0;
            for (int l = 0; l <= k; ++l) m += binom[k][l] * rp[k - l] * zp[l + 1] / (l + 1);
            amp += (std::abs(ca[k]) + std::abs(cb[k])) * m;
        }
        if (!(amp < limit)) return j + 1 < xi.size() ? xi[j + 1] : xi[j];
    }
    return 0.0;
}

SolutionField solve_general(const MediumProfile& profile, const CoefficientTable& table,
                            const GeneralSignal& signal, const XtMesh& mesh,
                            const SolveOptions& options) {
    const int order = table.order();
    SolutionField f = make_field(profile, mesh, Method::direct, order);
    for_rows(f.x.size(), options.execution,
             [&](std::size_t ix) { direct_row(table, order, signal, f, ix); });
    finish(f, profile, options);
    return f;
}

SolutionField solve_rearranged(const MediumProfile& profile, const CoefficientTable& table,
                               const GeneralSignal& signal, const XtMesh& mesh,
                               const HybridOptions& hybrid, const SolveOptions& options) {
    const int order = table.order();
    SolutionField f = make_field(profile, mesh, Method::rearranged, order);
    int near = order;
    if (hybrid.near_order) {
        if (*hybrid.near_order < 0) throw ConfigError("near-band order must be nonnegative");
        near = std::min(order, *hybrid.near_order);
    }
    const double reach = *std::max_element(f.xi.begin(), f.xi.end());
    const double spacing = hybrid.center_spacing > 0.0
                               ? hybrid.center_spacing
                               : std::max(reach / 8.0, 8.0 * signal.mesh().step);
    const MomentBank bank = hybrid.centering == MomentCentering::local
                                ? MomentBank(signal, order, spacing, reach)
                                : MomentBank(signal, order, 0.0);
    double xi_switch = 0.0;
    if (hybrid.enabled)
        xi_switch = hybrid.xi_switch
                        ? *hybrid.xi_switch
                        : auto_xi_switch(table, order, hybrid.growth_limit,
                                         hybrid.centering == MomentCentering::local
                                             ? bank.spacing()
                                             : 2.0 * std::max(std::abs(signal.alpha()),
                                                              std::abs(signal.beta())));
    for_rows(f.x.size(), options.execution, [&](std::size_t ix) {
        if (f.xi[ix] == 0.0 || f.xi[ix] < xi_switch)
            direct_row(table, hybrid.enabled ? near : order, signal, f, ix);
        else
            rearranged_row(table, order, signal, bank, f, ix);
    });
    finish(f, profile, options);
    return f;
}

SolutionField solve_modulated(const MediumProfile& profile, const CoefficientTable& table,
                              const ModulatedSignal& signal, const XtMesh& mesh, int order,
                              const SolveOptions& options) {
    if (order < 0) order = table.order();
    check_order(table, order);
    const auto c = signal.amplitudes(profile);
    const int modes = static_cast<int>(c.size());
    std::vector<double> freq(modes);
    std::vector<IdempotentPair> cp(modes);
    for (int m = 0; m < modes; ++m) {
        freq[m] = signal.frequency(m - signal.M);
        cp[m] = c[m].to_pair();
    }
    SolutionField f = make_field(profile, mesh, Method::modulated, order);
    const std::size_t nt = f.t.size();
    // e^{i Omega_m t}, shared by every row.
    std::vector<Complex> carrier(nt * modes);
    for (std::size_t it = 0; it < nt; ++it)
        for (int m = 0; m < modes; ++m) carrier[it * modes + m] = std::exp(kI * (freq[m] * f.t[it]));

    for_rows(f.x.size(), options.execution, [&](std::size_t ix) {
        const double xi = f.xi[ix];
        std::vector<double> a, b, jn(order + 1);
        coefficients_at(table, order, xi, a, b);
        // Per mode: the j-free and j parts of the bracket multiplying e^{i Omega t}.
        std::vector<Complex> ru(modes), rv(modes);
        for (int m = 0; m < modes; ++m) {
            spherical_bessel_sequence(order, freq[m] * xi, jn);
            Complex sap{}, sam{}, sbp{}, sbm{};
            for (int n = 0; n <= order; ++n) {
                const Complex ph = quarter_phase(n) * jn[n];
                const double alt = n % 2 == 0 ? 1.0 : -1.0;
                sap += a[n] * ph;
                sam += alt * a[n] * ph;
                sbp += b[n] * ph;
                sbm += alt * b[n] * ph;
            }
            const Complex fw = cp[m].plus * std::exp(kI * (freq[m] * xi));
            const Complex bw = cp[m].minus * std::exp(-kI * (freq[m] * xi));
            ru[m] = 0.5 * (fw + bw) + cp[m].plus * sap + cp[m].minus * sam;
            rv[m] = 0.5 * (fw - bw) + cp[m].plus * sbp - cp[m].minus * sbm;
        }
        for (std::size_t it = 0; it < nt; ++it) {
            Complex u{}, v{};
            const Complex* e = &carrier[it * modes];
            for (int m = 0; m < modes; ++m) {
                u += ru[m] * e[m];
                v += rv[m] * e[m];
            }
            f.W[f.index(ix, it)] = Bicomplex(u, v);
        }
    });
    finish(f, profile, options);
    return f;
}

std::pair<Complex, Complex> to_physical(const Bicomplex& w, double x, const MediumProfile& p) {
    const double eps = p.epsilon(x);
    const double c = 1.0 / std::sqrt(eps * p.mu());
    return {w.real_part() / std::sqrt(c * eps), -kI * w.j_part() / std::sqrt(c * p.mu())};
}

Bicomplex from_physical(Complex e, Complex h, double x, const MediumProfile& p) {
    const double eps = p.epsilon(x);
    const double c = 1.0 / std::sqrt(eps * p.mu());
    return {std::sqrt(c * eps) * e, kI * std::sqrt(c * p.mu()) * h};
}

void to_physical(SolutionField& field, const MediumProfile& p) {
    const std::size_t nt = field.t.size();
    field.E.assign(field.W.size(), Complex{});
    field.H.assign(field.W.size(), Complex{});
    for (std::size_t ix = 0; ix < field.x.size(); ++ix) {
        const double eps = p.epsilon(field.x[ix]);
        const double c = 1.0 / std::sqrt(eps * p.mu());
        const double pe = 1.0 / std::sqrt(c * eps);
        const double ph = 1.0 / std::sqrt(c * p.mu());
        for (std::size_t it = 0; it < nt; ++it) {
            const std::size_t id = field.index(ix, it);
            if (!field.valid[id]) continue;
            field.E[id] = field.W[id].real_part() * pe;
            field.H[id] = -kI * field.W[id].j_part() * ph;
        }
    }
}

} // namespace vekua
