#include "vekua/config.hpp"

#include "vekua/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace vekua {

namespace {

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& node, const std::string& field,
                           const std::string& what) const {
        std::ostringstream msg;
        msg << source_;
        const YAML::Mark m = node.Mark();
        if (m.line >= 0) msg << ':' << m.line + 1 << ':' << m.column + 1;
        msg << ": field '" << field << "': " << what;
        throw ConfigError(msg.str());
    }

    void check_keys(const YAML::Node& block, const std::string& where,
                    const std::set<std::string>& allowed) const {
        if (!block.IsMap()) fail(block, where, "expected a mapping");
        for (const auto& kv : block) {
            const auto key = kv.first.as<std::string>();
            if (!allowed.count(key)) fail(kv.first, where + "." + key, "unknown field");
        }
    }

    template <class T>
    void get(const YAML::Node& block, const std::string& where, const char* key, T& out,
             const char* expected) const {
        const YAML::Node n = block[key];
        if (!n) return;
        try {
            out = n.as<T>();
        } catch (const YAML::Exception&) {
            fail(n, where + "." + key, std::string("expected ") + expected);
        }
    }

    double number(const YAML::Node& block, const std::string& where, const char* key,
                  double fallback) const {
        double v = fallback;
        get(block, where, key, v, "a number");
        return v;
    }

    int integer(const YAML::Node& block, const std::string& where, const char* key,
                int fallback) const {
        int v = fallback;
        get(block, where, key, v, "an integer");
        return v;
    }

    bool boolean(const YAML::Node& block, const std::string& where, const char* key,
                 bool fallback) const {
        bool v = fallback;
        get(block, where, key, v, "true or false");
        return v;
    }

    std::optional<std::string> text(const YAML::Node& block, const std::string& where,
                                    const char* key) const {
        const YAML::Node n = block[key];
        if (!n) return std::nullopt;
        if (!n.IsScalar()) fail(n, where + "." + key, "expected a string");
        return n.as<std::string>();
    }

    std::optional<double> optional_number(const YAML::Node& block, const std::string& where,
                                          const char* key, const char* auto_word = nullptr) const {
        const YAML::Node n = block[key];
        if (!n) return std::nullopt;
        if (auto_word && n.IsScalar() && n.as<std::string>() == auto_word) return std::nullopt;
        double v = 0.0;
        get(block, where, key, v, auto_word ? "a number or 'auto'" : "a number");
        return v;
    }

    std::optional<int> optional_integer(const YAML::Node& block, const std::string& where,
                                        const char* key, const char* auto_word = nullptr) const {
        const YAML::Node n = block[key];
        if (!n) return std::nullopt;
        if (auto_word && n.IsScalar() && n.as<std::string>() == auto_word) return std::nullopt;
        int v = 0;
        get(block, where, key, v, auto_word ? "an integer or 'auto'" : "an integer");
        return v;
    }

    template <class E>
    E choice(const YAML::Node& block, const std::string& where, const char* key, E fallback,
             const std::vector<std::pair<std::string, E>>& options) const {
        const auto s = text(block, where, key);
        if (!s) return fallback;
        std::string names;
        for (const auto& [name, value] : options) {
            if (*s == name) return value;
            names += (names.empty() ? "" : ", ") + name;
        }
        fail(block[key], where + "." + key, "expected one of " + names);
    }

    std::vector<Complex> amplitudes(const YAML::Node& block, const std::string& where,
                                    const char* key) const {
        std::vector<Complex> out;
        const YAML::Node n = block[key];
        if (!n) return out;
        if (!n.IsSequence()) fail(n, where + "." + key, "expected a list");
        for (std::size_t i = 0; i < n.size(); ++i) {
            const YAML::Node e = n[i];
            const std::string field = where + "." + key + "[" + std::to_string(i) + "]";
            try {
                if (e.IsSequence()) {
                    if (e.size() != 2) fail(e, field, "expected a number or [re, im]");
                    out.emplace_back(e[0].as<double>(), e[1].as<double>());
                } else {
                    out.emplace_back(e.as<double>(), 0.0);
                }
            } catch (const YAML::Exception&) {
                fail(e, field, "expected a number or [re, im]");
            }
        }
        return out;
    }

    MeshAxis axis(const YAML::Node& block, const std::string& where, const char* key,
                  MeshAxis fallback) const {
        const YAML::Node n = block[key];
        if (!n) return fallback;
        const std::string w = where + "." + key;
        check_keys(n, w, {"from", "to", "count"});
        fallback.from = number(n, w, "from", fallback.from);
        fallback.to = number(n, w, "to", fallback.to);
        fallback.count = integer(n, w, "count", fallback.count);
        return fallback;
    }

private:
    std::string source_;
};

const std::vector<std::pair<std::string, MethodChoice>> kMethods = {
    {"auto", MethodChoice::automatic},
    {"direct", MethodChoice::direct},
    {"rearranged", MethodChoice::rearranged},
    {"modulated", MethodChoice::modulated}};
const std::vector<std::pair<std::string, SignalKind>> kSignals = {
    {"modulated", SignalKind::modulated},
    {"table", SignalKind::table},
    {"expression", SignalKind::expression}};
const std::vector<std::pair<std::string, OracleKind>> kOracles = {
    {"none", OracleKind::none},
    {"exponential", OracleKind::exponential},
    {"homogeneous", OracleKind::homogeneous}};
const std::vector<std::pair<std::string, MeshVariable>> kMeshes = {{"x", MeshVariable::x},
                                                                   {"xi", MeshVariable::xi}};
const std::vector<std::pair<std::string, MomentCentering>> kCenterings = {
    {"local", MomentCentering::local}, {"origin", MomentCentering::origin}};

template <class E>
std::string_view name_of(const std::vector<std::pair<std::string, E>>& table, E value) {
    for (const auto& [name, v] : table)
        if (v == value) return name;
    return "?";
}

void emit_amplitudes(YAML::Emitter& out, const char* key, const std::vector<Complex>& values) {
    out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (const Complex& z : values)
        out << YAML::Flow << YAML::BeginSeq << z.real() << z.imag() << YAML::EndSeq;
    out << YAML::EndSeq;
}

void emit_axis(YAML::Emitter& out, const char* key, const MeshAxis& a) {
    out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "from" << YAML::Value << a.from;
    out << YAML::Key << "to" << YAML::Value << a.to;
    out << YAML::Key << "count" << YAML::Value << a.count;
    out << YAML::EndMap;
}

} // namespace

std::string_view to_string(MethodChoice m) { return name_of(kMethods, m); }
std::string_view to_string(SignalKind k) { return name_of(kSignals, k); }
std::string_view to_string(OracleKind k) { return name_of(kOracles, k); }

RunConfig RunConfig::parse(const std::string& text, const std::string& source) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError(source + ":" + std::to_string(e.mark.line + 1) + ":" +
                          std::to_string(e.mark.column + 1) + ": " + e.msg);
    }
    const Reader r(source);
    RunConfig c;
    if (!root || root.IsNull()) {
        c.check();
        return c;
    }
    r.check_keys(root, "config", {"medium", "signal", "solver", "output", "validate"});

    if (const YAML::Node m = root["medium"]) {
        r.check_keys(m, "medium",
                     {"epsilon", "table", "constants", "mu", "x_max", "xi_max", "nodes", "mesh"});
        c.medium.table = r.text(m, "medium", "table");
        if (auto eps = r.text(m, "medium", "epsilon")) c.medium.epsilon = std::move(eps);
        else if (c.medium.table) c.medium.epsilon.reset();
        if (const YAML::Node k = m["constants"]) {
            if (!k.IsMap()) r.fail(k, "medium.constants", "expected a mapping");
            for (const auto& kv : k) {
                const auto name = kv.first.as<std::string>();
                try {
                    c.medium.constants[name] = kv.second.as<double>();
                } catch (const YAML::Exception&) {
                    r.fail(kv.second, "medium.constants." + name, "expected a number");
                }
            }
        }
        c.medium.mu = r.number(m, "medium", "mu", c.medium.mu);
        c.medium.x_max = r.optional_number(m, "medium", "x_max");
        c.medium.xi_max = r.optional_number(m, "medium", "xi_max");
        c.medium.nodes = r.integer(m, "medium", "nodes", c.medium.nodes);
        c.medium.mesh = r.choice(m, "medium", "mesh", c.medium.mesh, kMeshes);
    }
    if (const YAML::Node s = root["signal"]) {
        r.check_keys(s, "signal",
                     {"kind", "omega0", "omega", "M", "alpha", "beta", "path", "E0_re", "E0_im",
                      "H0_re", "H0_im", "interval", "tolerance"});
        c.signal.kind = r.choice(s, "signal", "kind", c.signal.kind, kSignals);
        c.signal.omega0 = r.number(s, "signal", "omega0", c.signal.omega0);
        c.signal.omega = r.number(s, "signal", "omega", c.signal.omega);
        c.signal.M = r.integer(s, "signal", "M", c.signal.M);
        if (s["alpha"]) {
            c.signal.alpha = r.amplitudes(s, "signal", "alpha");
            // Without beta, H0 = 0.
            c.signal.beta.assign(c.signal.alpha.size(), Complex{});
        }
        if (s["beta"]) c.signal.beta = r.amplitudes(s, "signal", "beta");
        c.signal.path = r.text(s, "signal", "path");
        c.signal.e0_re = r.text(s, "signal", "E0_re").value_or("0");
        c.signal.e0_im = r.text(s, "signal", "E0_im").value_or("0");
        c.signal.h0_re = r.text(s, "signal", "H0_re").value_or("0");
        c.signal.h0_im = r.text(s, "signal", "H0_im").value_or("0");
        if (const YAML::Node iv = s["interval"]) {
            std::vector<double> v;
            try {
                v = iv.as<std::vector<double>>();
            } catch (const YAML::Exception&) {
                r.fail(iv, "signal.interval", "expected [alpha, beta]");
            }
            if (v.size() != 2) r.fail(iv, "signal.interval", "expected [alpha, beta]");
            c.signal.interval = std::array<double, 2>{v[0], v[1]};
        }
        c.signal.tolerance = r.number(s, "signal", "tolerance", c.signal.tolerance);
    }
    if (const YAML::Node s = root["solver"]) {
        r.check_keys(s, "solver",
                     {"method", "N", "N_max", "xi_switch", "N_near", "hybrid", "centering",
                      "growth_limit", "strict"});
        c.solver.method = r.choice(s, "solver", "method", c.solver.method, kMethods);
        c.solver.order = r.optional_integer(s, "solver", "N", "auto");
        c.solver.max_order = r.integer(s, "solver", "N_max", c.solver.max_order);
        c.solver.xi_switch = r.optional_number(s, "solver", "xi_switch", "auto");
        c.solver.near_order = r.optional_integer(s, "solver", "N_near", "auto");
        c.solver.hybrid = r.boolean(s, "solver", "hybrid", c.solver.hybrid);
        c.solver.centering = r.choice(s, "solver", "centering", c.solver.centering, kCenterings);
        c.solver.growth_limit = r.number(s, "solver", "growth_limit", c.solver.growth_limit);
        c.solver.strict = r.boolean(s, "solver", "strict", c.solver.strict);
    }
    if (const YAML::Node o = root["output"]) {
        r.check_keys(o, "output", {"x", "t", "coefficients", "solution", "errors"});
        c.output.x = r.axis(o, "output", "x", c.output.x);
        c.output.t = r.axis(o, "output", "t", c.output.t);
        c.output.coefficients = r.text(o, "output", "coefficients").value_or(c.output.coefficients);
        c.output.solution = r.text(o, "output", "solution").value_or(c.output.solution);
        c.output.errors = r.text(o, "output", "errors").value_or(c.output.errors);
    }
    if (const YAML::Node v = root["validate"]) {
        r.check_keys(v, "validate", {"oracle", "alpha", "beta", "tolerance"});
        c.validate.oracle = r.choice(v, "validate", "oracle", c.validate.oracle, kOracles);
        c.validate.alpha = r.number(v, "validate", "alpha", c.validate.alpha);
        c.validate.beta = r.number(v, "validate", "beta", c.validate.beta);
        c.validate.tolerance = r.number(v, "validate", "tolerance", c.validate.tolerance);
    }
    try {
        c.check();
    } catch (const ConfigError& e) {
        throw ConfigError(source + ": " + e.what());
    }
    return c;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    RunConfig c = parse(buf.str(), path.string());
    c.base_dir = path.parent_path();
    return c;
}

std::filesystem::path RunConfig::resolve(const std::string& path) const {
    std::filesystem::path p(path);
    return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
}

void RunConfig::check() const {
    if (medium.epsilon.has_value() == medium.table.has_value())
        throw ConfigError("medium: give exactly one of 'epsilon' or 'table'");
    if (!(medium.mu > 0.0)) throw ConfigError("medium.mu: must be positive");
    if (medium.x_max && medium.xi_max)
        throw ConfigError("medium: give at most one of 'x_max' or 'xi_max'");
    if (medium.xi_max && medium.mesh != MeshVariable::xi)
        throw ConfigError("medium.xi_max: requires mesh: xi");
    if (medium.nodes < 6) throw ConfigError("medium.nodes: must be at least 6");
    if (output.x.count < 6 || output.t.count < 6)
        throw ConfigError("output: mesh counts must be at least 6");
    switch (signal.kind) {
    case SignalKind::modulated:
        if (signal.M < 0) throw ConfigError("signal.M: must be nonnegative");
        if (signal.alpha.size() != 2 * static_cast<std::size_t>(signal.M) + 1 ||
            signal.beta.size() != signal.alpha.size())
            throw ConfigError("signal: alpha and beta need 2M + 1 = " +
                              std::to_string(2 * signal.M + 1) + " entries");
        if (signal.path) throw ConfigError("signal.path: not used by a modulated signal");
        break;
    case SignalKind::table:
        if (!signal.path) throw ConfigError("signal.path: required for a table signal");
        break;
    case SignalKind::expression:
        break;
    }
    if (signal.interval && !((*signal.interval)[1] > (*signal.interval)[0]))
        throw ConfigError("signal.interval: empty");
    if (solver.method == MethodChoice::modulated && signal.kind != SignalKind::modulated)
        throw ConfigError("solver.method: 'modulated' requires a modulated signal");
    if (solver.order && *solver.order < 0) throw ConfigError("solver.N: must be nonnegative");
    if (solver.max_order < 0) throw ConfigError("solver.N_max: must be nonnegative");
    if (!(validate.tolerance > 0.0)) throw ConfigError("validate.tolerance: must be positive");
}

std::string RunConfig::serialize() const {
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    out << YAML::BeginMap;

    out << YAML::Key << "medium" << YAML::Value << YAML::BeginMap;
    if (medium.epsilon) out << YAML::Key << "epsilon" << YAML::Value << *medium.epsilon;
    if (medium.table) out << YAML::Key << "table" << YAML::Value << *medium.table;
    if (!medium.constants.empty()) {
        out << YAML::Key << "constants" << YAML::Value << YAML::BeginMap;
        for (const auto& [k, v] : medium.constants) out << YAML::Key << k << YAML::Value << v;
        out << YAML::EndMap;
    }
    out << YAML::Key << "mu" << YAML::Value << medium.mu;
    if (medium.x_max) out << YAML::Key << "x_max" << YAML::Value << *medium.x_max;
    if (medium.xi_max) out << YAML::Key << "xi_max" << YAML::Value << *medium.xi_max;
    out << YAML::Key << "nodes" << YAML::Value << medium.nodes;
    out << YAML::Key << "mesh" << YAML::Value << std::string(name_of(kMeshes, medium.mesh));
    out << YAML::EndMap;

    out << YAML::Key << "signal" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << std::string(to_string(signal.kind));
    if (signal.kind == SignalKind::modulated) {
        out << YAML::Key << "omega0" << YAML::Value << signal.omega0;
        out << YAML::Key << "omega" << YAML::Value << signal.omega;
        out << YAML::Key << "M" << YAML::Value << signal.M;
        emit_amplitudes(out, "alpha", signal.alpha);
        emit_amplitudes(out, "beta", signal.beta);
    }
    if (signal.path) out << YAML::Key << "path" << YAML::Value << *signal.path;
    if (signal.kind == SignalKind::expression) {
        out << YAML::Key << "E0_re" << YAML::Value << signal.e0_re;
        out << YAML::Key << "E0_im" << YAML::Value << signal.e0_im;
        out << YAML::Key << "H0_re" << YAML::Value << signal.h0_re;
        out << YAML::Key << "H0_im" << YAML::Value << signal.h0_im;
    }
    if (signal.interval)
        out << YAML::Key << "interval" << YAML::Value << YAML::Flow << YAML::BeginSeq
            << (*signal.interval)[0] << (*signal.interval)[1] << YAML::EndSeq;
    out << YAML::Key << "tolerance" << YAML::Value << signal.tolerance;
    out << YAML::EndMap;

    out << YAML::Key << "solver" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "method" << YAML::Value << std::string(to_string(solver.method));
    out << YAML::Key << "N" << YAML::Value;
    if (solver.order) out << *solver.order;
    else out << "auto";
    out << YAML::Key << "N_max" << YAML::Value << solver.max_order;
    out << YAML::Key << "xi_switch" << YAML::Value;
    if (solver.xi_switch) out << *solver.xi_switch;
    else out << "auto";
    if (solver.near_order) out << YAML::Key << "N_near" << YAML::Value << *solver.near_order;
    out << YAML::Key << "hybrid" << YAML::Value << solver.hybrid;
    out << YAML::Key << "centering" << YAML::Value
        << std::string(name_of(kCenterings, solver.centering));
    out << YAML::Key << "growth_limit" << YAML::Value << solver.growth_limit;
    out << YAML::Key << "strict" << YAML::Value << solver.strict;
    out << YAML::EndMap;

    out << YAML::Key << "output" << YAML::Value << YAML::BeginMap;
    emit_axis(out, "x", output.x);
    emit_axis(out, "t", output.t);
    out << YAML::Key << "coefficients" << YAML::Value << output.coefficients;
    out << YAML::Key << "solution" << YAML::Value << output.solution;
    out << YAML::Key << "errors" << YAML::Value << output.errors;
    out << YAML::EndMap;

    out << YAML::Key << "validate" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "oracle" << YAML::Value << std::string(to_string(validate.oracle));
    out << YAML::Key << "alpha" << YAML::Value << validate.alpha;
    out << YAML::Key << "beta" << YAML::Value << validate.beta;
    out << YAML::Key << "tolerance" << YAML::Value << validate.tolerance;
    out << YAML::EndMap;

    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

} // namespace vekua
