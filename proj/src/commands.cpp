#include "vekua/commands.hpp"

#include "vekua/csv.hpp"
#include "vekua/errors.hpp"
#include "vekua/pipeline.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <yaml-cpp/exceptions.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

namespace vekua {

namespace {

std::ofstream open_output(const CommandOptions& o, const std::string& name) {
    std::filesystem::create_directories(o.out_dir);
    const auto path = o.out_dir / name;
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    return out;
}

void report_truncation(const BuiltTable& built, const RunConfig& c, std::ostream& log) {
    const auto& ch = built.choice;
    fmt::print(log, "truncation order N = {}{}\n", ch.order,
               c.solver.order ? " (fixed)" : (ch.plateau_found ? " (auto)" : " (auto, no plateau)"));
    if (!ch.tail.empty()) {
        double tail = 0.0;
        for (double v : ch.tail) tail = std::max(tail, v);
        fmt::print(log, "max tail indicator over the next {} orders: {:.3e}\n", kTailWindow, tail);
    }
}

void report_missing(const SolutionField& f, std::ostream& log) {
    const MissingReport m = f.missing();
    if (m.count == 0) return;
    fmt::print(log,
               "{} points outside the signal's domain of dependence left empty, "
               "x in [{:g}, {:g}], t in [{:g}, {:g}]\n",
               m.count, m.x_min, m.x_max, m.t_min, m.t_max);
}

// Which parts of the complex E and H carry data on this run.
void report_physical_parts(const SolutionField& f, std::ostream& log) {
    double re_e = 0, im_e = 0, re_h = 0, im_h = 0;
    for (std::size_t k = 0; k < f.W.size(); ++k) {
        if (!f.valid[k]) continue;
        re_e = std::max(re_e, std::abs(f.E[k].real()));
        im_e = std::max(im_e, std::abs(f.E[k].imag()));
        re_h = std::max(re_h, std::abs(f.H[k].real()));
        im_h = std::max(im_h, std::abs(f.H[k].imag()));
    }
    auto part = [](double re, double im, const char* name) {
        const double tol = 1e-12 * std::max({re, im, 1e-300});
        if (im <= tol) return fmt::format("{} is real", name);
        if (re <= tol) return fmt::format("{} is imaginary", name);
        return fmt::format("{} is complex", name);
    };
    fmt::print(log, "{}, {}; both parts of each are reported\n", part(re_e, im_e, "E"),
               part(re_h, im_h, "H"));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int cmd_coeffs(const RunConfig& c, const CommandOptions& o, std::ostream& log) {
    const MediumProfile profile = build_profile(c);
    const BuiltTable built = build_table(profile, c, o.execution);
    report_truncation(built, c, log);
    auto out = open_output(o, c.output.coefficients);
    write_coefficients_csv(out, built.table, built.choice.order);
    fmt::print(log, "wrote {}\n", (o.out_dir / c.output.coefficients).string());
    return kExitOk;
}

int cmd_solve(const RunConfig& c, const CommandOptions& o, std::ostream& log) {
    const MediumProfile profile = build_profile(c);
    const BuiltTable built = build_table(profile, c, o.execution);
    report_truncation(built, c, log);
    const Method method = resolve_method(c);
    const SolutionField field =
        run_solver(c, profile, built.table, method, evaluation_mesh(c), o.execution);
    fmt::print(log, "method {}, {} points\n", method_name(method), field.W.size());
    report_missing(field, log);
    report_physical_parts(field, log);
    auto out = open_output(o, c.output.solution);
    write_solution_csv(out, field);
    fmt::print(log, "wrote {}\n", (o.out_dir / c.output.solution).string());
    return kExitOk;
}

int cmd_validate(const RunConfig& c, const CommandOptions& o, std::ostream& log) {
    if (c.validate.oracle == OracleKind::none)
        throw ConfigError("validate.oracle: set to exponential or homogeneous");
    const MediumProfile profile = build_profile(c);
    const BuiltTable built = build_table(profile, c, o.execution);
    report_truncation(built, c, log);
    const Method method = resolve_method(c);
    const SolutionField field =
        run_solver(c, profile, built.table, method, evaluation_mesh(c), o.execution);
    const ReferenceFields ref = oracle_fields(c, profile, field);
    report_missing(field, log);

    double max_e = 0.0, max_h = 0.0, sum_e = 0.0, sum_h = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < field.W.size(); ++k) {
        if (!field.valid[k]) continue;
        const double de = std::abs(field.E[k] - ref.E[k]);
        const double dh = std::abs(field.H[k] - ref.H[k]);
        if (!std::isfinite(de) || !std::isfinite(dh)) {
            max_e = max_h = INFINITY;
            continue;
        }
        max_e = std::max(max_e, de);
        max_h = std::max(max_h, dh);
        sum_e += de;
        sum_h += dh;
        ++count;
    }
    {
        auto out = open_output(o, c.output.errors);
        write_errors_csv(out, field, ref.E, ref.H);
        auto sol = open_output(o, c.output.solution);
        write_solution_csv(sol, field, ref.E, ref.H);
    }
    const double n = count ? static_cast<double>(count) : 1.0;
    fmt::print(log, "oracle {}, method {}, {} points compared\n", to_string(c.validate.oracle),
               method_name(method), count);
    fmt::print(log, "max |dE| = {:.3e}, mean |dE| = {:.3e}\n", max_e, sum_e / n);
    fmt::print(log, "max |dH| = {:.3e}, mean |dH| = {:.3e}\n", max_h, sum_h / n);
    const bool pass = count > 0 && max_e <= c.validate.tolerance && max_h <= c.validate.tolerance;
    fmt::print(log, "{} (tolerance {:.1e})\n", pass ? "PASS" : "FAIL", c.validate.tolerance);
    return pass ? kExitOk : kExitValidation;
}

int cmd_bench(const RunConfig& c, const CommandOptions& o, std::ostream& log) {
    const MediumProfile profile = build_profile(c);
    auto t0 = std::chrono::steady_clock::now();
    const BuiltTable built = build_table(profile, c, o.execution);
    fmt::print(log, "coefficient table: {} nodes, N = {}, {:.3f} s\n", profile.size(),
               built.choice.order, seconds_since(t0));
    const XtMesh mesh = evaluation_mesh(c);
    const double points = static_cast<double>(mesh.size());
    fmt::print(log, "{} threads, {} x {} points\n",
               o.execution == Execution::parallel ? max_threads() : 1, mesh.x.size(), mesh.t.size());

    std::vector<Method> methods{Method::direct, Method::rearranged};
    if (c.signal.kind == SignalKind::modulated) methods.push_back(Method::modulated);
    double direct_time = 0.0;
    const int repeats = std::max(1, o.repeats);
    for (Method m : methods) {
        double best = INFINITY;
        for (int r = 0; r < repeats; ++r) {
            t0 = std::chrono::steady_clock::now();
            const SolutionField f = run_solver(c, profile, built.table, m, mesh, o.execution);
            best = std::min(best, seconds_since(t0));
        }
        if (m == Method::direct) direct_time = best;
        fmt::print(log, "{:<11} {:9.4f} s {:12.0f} points/s  speedup {:6.2f}\n", method_name(m),
                   best, points / best, direct_time / best);
    }
    return kExitOk;
}

int run_command(std::string_view command, const std::filesystem::path& config_path,
                const CommandOptions& options, std::ostream& log, std::ostream& err) {
    try {
        const RunConfig config = config_path.empty() ? RunConfig{} : RunConfig::load(config_path);
        config.check();
        if (command == "coeffs") return cmd_coeffs(config, options, log);
        if (command == "solve") return cmd_solve(config, options, log);
        if (command == "validate") return cmd_validate(config, options, log);
        if (command == "bench") return cmd_bench(config, options, log);
        throw ConfigError("unknown command '" + std::string(command) + "'");
    } catch (const ConfigError& e) {
        fmt::print(err, "configuration error: {}\n", e.what());
        return kExitConfig;
    } catch (const DomainError& e) {
        fmt::print(err, "domain error: {}\n", e.what());
        return kExitConfig;
    } catch (const YAML::Exception& e) {
        fmt::print(err, "configuration error: {}\n", e.what());
        return kExitConfig;
    } catch (const NumericalError& e) {
        fmt::print(err, "numerical failure: {}\n", e.what());
        return kExitNumerical;
    }
}

} // namespace vekua
