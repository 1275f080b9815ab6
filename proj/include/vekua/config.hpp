#pragma once

// Run configuration read from a YAML file with blocks medium, signal, solver,
// output and validate. Every field has a default mirroring the
// exponential-profile example on [0, 6] x [0, 6].

#include "vekua/bicomplex.hpp"
#include "vekua/medium.hpp"
#include "vekua/solver.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vekua {

struct MeshAxis {
    double from = 0.0;
    double to = 6.0;
    int count = 101;

    friend bool operator==(const MeshAxis&, const MeshAxis&) = default;
};

struct MediumConfig {
    /// Permittivity as an expression in x (exclusive with `table`; dropped
    /// when a document names only a table).
    std::optional<std::string> epsilon = "(2*x + 1)^(-2)";
    /// CSV with columns x, eps.
    std::optional<std::string> table;
    std::map<std::string, double> constants;
    double mu = 1.0;
    /// Right end of the medium; 6 when neither bound is given.
    std::optional<double> x_max;
    std::optional<double> xi_max;
    int nodes = 5001;
    MeshVariable mesh = MeshVariable::x;

    friend bool operator==(const MediumConfig&, const MediumConfig&) = default;
};

enum class SignalKind { modulated, table, expression };

struct SignalConfig {
    SignalKind kind = SignalKind::modulated;
    double omega0 = 0.0;
    double omega = 1.0;
    int M = 3;
    std::vector<Complex> alpha{2.0, 2.0, 0.0, 0.0, 0.0, 2.0, 2.0};
    std::vector<Complex> beta = std::vector<Complex>(7);
    /// CSV with columns t, Re E0, Im E0, Re H0, Im H0 on a uniform t-mesh.
    std::optional<std::string> path;
    /// Expressions in t for the parts of E0 and H0.
    std::string e0_re = "0", e0_im = "0", h0_re = "0", h0_im = "0";
    /// [alpha, beta]; for modulated and expression data it defaults
    /// to the evaluation t-range widened by the largest xi.
    std::optional<std::array<double, 2>> interval;
    double tolerance = 1e-9;

    friend bool operator==(const SignalConfig&, const SignalConfig&) = default;
};

enum class MethodChoice { automatic, direct, rearranged, modulated };

struct SolverConfig {
    MethodChoice method = MethodChoice::automatic;
    /// Fixed truncation order; empty selects it automatically.
    std::optional<int> order;
    int max_order = 60;
    std::optional<double> xi_switch;
    std::optional<int> near_order;
    bool hybrid = true;
    MomentCentering centering = MomentCentering::local;
    double growth_limit = 1e8;
    bool strict = false;

    friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

struct OutputConfig {
    MeshAxis x{0.0, 6.0, 201};
    MeshAxis t{0.0, 6.0, 101};
    std::string coefficients = "coefficients.csv";
    std::string solution = "solution.csv";
    std::string errors = "errors.csv";

    friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

enum class OracleKind { none, exponential, homogeneous };

struct ValidateConfig {
    OracleKind oracle = OracleKind::none;
    /// Exponential profile eps = (alpha x + beta)^{-2}.
    double alpha = 2.0;
    double beta = 1.0;
    double tolerance = 1e-6;

    friend bool operator==(const ValidateConfig&, const ValidateConfig&) = default;
};

struct RunConfig {
    MediumConfig medium;
    SignalConfig signal;
    SolverConfig solver;
    OutputConfig output;
    ValidateConfig validate;
    /// Directory that relative input paths are resolved against.
    std::filesystem::path base_dir;

    /// Throws ConfigError naming the source, line, column and field at fault.
    static RunConfig parse(const std::string& text, const std::string& source = "config");
    static RunConfig load(const std::filesystem::path& path);
    std::string serialize() const;

    /// Cross-field invariants: one permittivity source, one signal kind,
    /// mesh counts >= 6, modulated method only with modulated data.
    void check() const;

    std::filesystem::path resolve(const std::string& path) const;

    friend bool operator==(const RunConfig& a, const RunConfig& b) {
        return a.medium == b.medium && a.signal == b.signal && a.solver == b.solver &&
               a.output == b.output && a.validate == b.validate;
    }
};

std::string_view to_string(MethodChoice m);
std::string_view to_string(SignalKind k);
std::string_view to_string(OracleKind k);

} // namespace vekua
