#include "vekua/pipeline.hpp"

#include "vekua/csv.hpp"
#include "vekua/errors.hpp"
#include "vekua/expression.hpp"
#include "vekua/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace vekua {

namespace {

Permittivity permittivity_of(const RunConfig& c) {
    if (c.medium.epsilon)
        return Expression::parse(*c.medium.epsilon, "x", c.medium.constants).as_function();
    const CsvTable t = read_csv(c.resolve(*c.medium.table));
    if (t.rows.size() < 2) throw ConfigError("medium.table: need at least two rows");
    return epsilon_from_table(t.column(0), t.column(1));
}

std::function<Complex(double)> complex_expression(const std::string& re, const std::string& im,
                                                  const std::map<std::string, double>& constants) {
    auto r = Expression::parse(re, "t", constants);
    auto i = Expression::parse(im, "t", constants);
    return [r, i](double t) { return Complex(r(t), i(t)); };
}

void check_exponential_medium(const RunConfig& c, const MediumProfile& p) {
    const auto x = p.x_nodes();
    const auto eps = p.epsilon_nodes();
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double s = c.validate.alpha * x[k] + c.validate.beta;
        const double ref = 1.0 / (s * s);
        if (!(std::abs(eps[k] - ref) <= 1e-10 * ref))
            throw ConfigError("oracle/medium mismatch: exponential oracle with alpha = " +
                              std::to_string(c.validate.alpha) + ", beta = " +
                              std::to_string(c.validate.beta) + " does not match eps at x = " +
                              std::to_string(x[k]));
    }
}

} // namespace

MediumProfile build_profile(const RunConfig& c) {
    Permittivity eps = permittivity_of(c);
    if (c.medium.mesh == MeshVariable::x) {
        const double x_max = c.medium.x_max.value_or(6.0);
        return MediumProfile::on_x_mesh(std::move(eps), c.medium.mu,
                                        UniformMesh::spanning(0.0, x_max, c.medium.nodes));
    }
    if (c.medium.xi_max)
        return MediumProfile::on_xi_mesh(std::move(eps), c.medium.mu, *c.medium.xi_max,
                                         c.medium.nodes);
    return MediumProfile::on_xi_mesh_to(std::move(eps), c.medium.mu, c.medium.x_max.value_or(6.0),
                                        c.medium.nodes);
}

BuiltTable build_table(const MediumProfile& profile, const RunConfig& c, Execution execution) {
    TableOptions opt;
    opt.order = c.solver.order;
    opt.max_order = c.solver.max_order;
    opt.recursion.execution = execution;
    return build_coefficient_table(profile, opt);
}

XtMesh evaluation_mesh(const RunConfig& c) {
    const auto& o = c.output;
    return XtMesh::uniform(o.x.from, o.x.to, o.x.count, o.t.from, o.t.to, o.t.count);
}

ModulatedSignal modulated_signal(const RunConfig& c) {
    if (c.signal.kind != SignalKind::modulated)
        throw ConfigError("signal: a modulated signal is required here");
    ModulatedSignal s;
    s.omega0 = c.signal.omega0;
    s.omega = c.signal.omega;
    s.M = c.signal.M;
    s.alpha = c.signal.alpha;
    s.beta = c.signal.beta;
    s.validate();
    return s;
}

GeneralSignal::Function signal_function(const RunConfig& c, const MediumProfile& profile) {
    switch (c.signal.kind) {
    case SignalKind::modulated:
        return modulated_signal(c).as_function(profile);
    case SignalKind::expression:
        return w0_from_eh(complex_expression(c.signal.e0_re, c.signal.e0_im, c.medium.constants),
                          complex_expression(c.signal.h0_re, c.signal.h0_im, c.medium.constants),
                          profile);
    case SignalKind::table: {
        auto s = std::make_shared<GeneralSignal>(general_signal(c, profile, XtMesh{}));
        return [s](double t) { return (*s)(t); };
    }
    }
    throw ConfigError("signal: unknown kind");
}

GeneralSignal general_signal(const RunConfig& c, const MediumProfile& profile, const XtMesh& mesh) {
    SamplingOptions opt;
    opt.tolerance = c.signal.tolerance;
    if (c.signal.kind == SignalKind::table) {
        const CsvTable t = read_csv(c.resolve(*c.signal.path));
        if (t.rows.size() < 6) throw ConfigError("signal table: need at least 6 rows");
        if (t.rows.front().size() < 5)
            throw ConfigError("signal table: expected columns t, re_E0, im_E0, re_H0, im_H0");
        const auto tt = t.column(0);
        if (!detail::is_uniform(tt)) throw ConfigError("signal table: t must be uniformly spaced");
        const UniformMesh m = UniformMesh::spanning(tt.front(), tt.back(), static_cast<int>(tt.size()));
        std::vector<Complex> e(tt.size()), h(tt.size());
        for (std::size_t k = 0; k < tt.size(); ++k) {
            e[k] = {t.rows[k][1], t.rows[k][2]};
            h[k] = {t.rows[k][3], t.rows[k][4]};
        }
        return w0_from_eh(m, e, m, h, profile);
    }
    std::array<double, 2> iv{};
    if (c.signal.interval) {
        iv = *c.signal.interval;
    } else {
        double reach = 0.0;
        for (double x : mesh.x) reach = std::max(reach, profile.xi_of_x(x));
        const double t0 = mesh.t.empty() ? 0.0 : *std::min_element(mesh.t.begin(), mesh.t.end());
        const double t1 = mesh.t.empty() ? 1.0 : *std::max_element(mesh.t.begin(), mesh.t.end());
        const double pad = 0.05 * (1.0 + reach);
        iv = {t0 - reach - pad, t1 + reach + pad};
    }
    return GeneralSignal::sample(signal_function(c, profile), iv[0], iv[1], opt);
}

Method resolve_method(const RunConfig& c) {
    switch (c.solver.method) {
    case MethodChoice::direct: return Method::direct;
    case MethodChoice::rearranged: return Method::rearranged;
    case MethodChoice::modulated: return Method::modulated;
    case MethodChoice::automatic:
        return c.signal.kind == SignalKind::modulated ? Method::modulated : Method::rearranged;
    }
    return Method::rearranged;
}

SolutionField run_solver(const RunConfig& c, const MediumProfile& profile,
                         const CoefficientTable& table, Method method, const XtMesh& mesh,
                         Execution execution) {
    SolveOptions so;
    so.execution = execution;
    so.strict = c.solver.strict;
    switch (method) {
    case Method::modulated:
        return solve_modulated(profile, table, modulated_signal(c), mesh, -1, so);
    case Method::direct:
        return solve_general(profile, table, general_signal(c, profile, mesh), mesh, so);
    case Method::rearranged: {
        HybridOptions h;
        h.enabled = c.solver.hybrid;
        h.xi_switch = c.solver.xi_switch;
        h.near_order = c.solver.near_order;
        h.growth_limit = c.solver.growth_limit;
        h.centering = c.solver.centering;
        return solve_rearranged(profile, table, general_signal(c, profile, mesh), mesh, h, so);
    }
    }
    throw ConfigError("unknown method");
}

ReferenceFields oracle_fields(const RunConfig& c, const MediumProfile& profile,
                              const SolutionField& field) {
    ReferenceFields ref;
    ref.E.assign(field.W.size(), Complex{});
    ref.H.assign(field.W.size(), Complex{});
    switch (c.validate.oracle) {
    case OracleKind::none:
        throw ConfigError("validate.oracle: no oracle configured");
    case OracleKind::exponential: {
        check_exponential_medium(c, profile);
        const auto oracle = ExponentialProfileOracle::from_modulated(
            c.validate.alpha, c.validate.beta, c.medium.mu, modulated_signal(c));
        for (std::size_t ix = 0; ix < field.x.size(); ++ix)
            for (std::size_t it = 0; it < field.t.size(); ++it) {
                const std::size_t id = field.index(ix, it);
                ref.E[id] = oracle.E(field.x[ix], field.t[it]);
                ref.H[id] = oracle.H(field.x[ix], field.t[it]);
            }
        return ref;
    }
    case OracleKind::homogeneous: {
        const auto eps = profile.epsilon_nodes();
        for (double e : eps)
            if (!(std::abs(e - eps[0]) <= 1e-12 * eps[0]))
                throw ConfigError("oracle/medium mismatch: homogeneous oracle needs constant eps");
        const auto w0 = signal_function(c, profile);
        const double speed = std::sqrt(profile.mu() * eps[0]);
        for (std::size_t ix = 0; ix < field.x.size(); ++ix)
            for (std::size_t it = 0; it < field.t.size(); ++it) {
                const std::size_t id = field.index(ix, it);
                if (!field.valid[id]) continue;
                const Bicomplex w = oracle_dalembert(w0, speed * field.x[ix], field.t[it]);
                const auto [e, h] = to_physical(w, field.x[ix], profile);
                ref.E[id] = e;
                ref.H[id] = h;
            }
        return ref;
    }
    }
    return ref;
}

} // namespace vekua
