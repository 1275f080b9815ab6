#include "vekua/config.hpp"

#include "vekua/errors.hpp"

#include <doctest.h>

#include <string>

using namespace vekua;

namespace {

std::string error_of(const std::string& text) {
    try {
        RunConfig::parse(text, "run.yaml").check();
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("defaults describe the exponential-profile run") {
    const RunConfig c;
    CHECK(*c.medium.epsilon == "(2*x + 1)^(-2)");
    CHECK(c.medium.nodes == 5001);
    CHECK(c.signal.kind == SignalKind::modulated);
    CHECK(c.signal.M == 3);
    CHECK(c.output.x.count == 201);
    CHECK(c.output.t.count == 101);
    CHECK(c.output.x.to == 6.0);
    CHECK_NOTHROW(c.check());
    CHECK(RunConfig::parse("{}") == c);
}

TEST_CASE("full document") {
    const auto c = RunConfig::parse(R"yaml(
medium:
  epsilon: "(a*x + 1)^(-2)"
  constants: {a: 2}
  mu: 1.5
  xi_max: 1.2
  nodes: 801
  mesh: xi
signal:
  kind: modulated
  omega0: 10
  omega: 1
  M: 1
  alpha: [1, [0, 2], -1]
  beta: [0, 0, 0.5]
solver:
  method: rearranged
  N: 8
  N_max: 20
  xi_switch: 0.01
  N_near: 4
  hybrid: false
  centering: origin
  growth_limit: 1.0e6
  strict: true
output:
  x: {from: 0, to: 2, count: 11}
  t: {from: -1, to: 1, count: 7}
  solution: sol.csv
validate:
  oracle: exponential
  alpha: 2
  beta: 1
  tolerance: 1.0e-7
)yaml");
    CHECK_NOTHROW(c.check());
    CHECK(c.medium.constants.at("a") == 2.0);
    CHECK(c.medium.mu == 1.5);
    CHECK(*c.medium.xi_max == 1.2);
    CHECK(c.medium.mesh == MeshVariable::xi);
    CHECK(c.signal.alpha[1] == Complex(0.0, 2.0));
    CHECK(c.signal.beta[2] == Complex(0.5, 0.0));
    CHECK(c.solver.method == MethodChoice::rearranged);
    CHECK(*c.solver.order == 8);
    CHECK(c.solver.max_order == 20);
    CHECK(*c.solver.xi_switch == 0.01);
    CHECK(*c.solver.near_order == 4);
    CHECK_FALSE(c.solver.hybrid);
    CHECK(c.solver.centering == MomentCentering::origin);
    CHECK(c.solver.strict);
    CHECK(c.output.t.from == -1.0);
    CHECK(c.output.solution == "sol.csv");
    CHECK(c.validate.oracle == OracleKind::exponential);
    CHECK(c.validate.tolerance == 1e-7);
    CHECK(RunConfig::parse(c.serialize()) == c);
}

TEST_CASE("round trip is idempotent") {
    RunConfig c;
    c.medium.epsilon.reset();
    c.medium.table = "eps.csv";
    c.signal.kind = SignalKind::expression;
    c.signal.e0_re = "exp(-t^2)";
    c.signal.h0_im = "sin(t)";
    c.signal.interval = std::array<double, 2>{-3.0, 9.0};
    c.solver.order = 5;
    c.validate.oracle = OracleKind::homogeneous;
    const std::string once = c.serialize();
    const RunConfig back = RunConfig::parse(once);
    CHECK(back == c);
    CHECK(back.serialize() == once);
}

TEST_CASE("auto keywords") {
    const auto c = RunConfig::parse("solver: {N: auto, xi_switch: auto, N_near: auto, method: auto}");
    CHECK_FALSE(c.solver.order.has_value());
    CHECK_FALSE(c.solver.xi_switch.has_value());
    CHECK_FALSE(c.solver.near_order.has_value());
    CHECK(c.solver.method == MethodChoice::automatic);
}

TEST_CASE("diagnostics carry source, line and field") {
    const std::string e = error_of("medium:\n  mu: 1\n  colour: red\n");
    CHECK(e.find("run.yaml:3:") != std::string::npos);
    CHECK(e.find("medium.colour") != std::string::npos);
    CHECK(error_of("solver:\n  N: many\n").find("solver.N") != std::string::npos);
    CHECK(error_of("solver:\n  method: magic\n").find("solver.method") != std::string::npos);
    CHECK(error_of("medium: [1, 2]\n").find("medium") != std::string::npos);
    CHECK(error_of("medium: {mu: [1, 2]}").find("medium.mu") != std::string::npos);
}

TEST_CASE("cross-field invariants") {
    CHECK(error_of("medium: {table: eps.csv}").empty());
    CHECK_FALSE(error_of("medium: {table: eps.csv, epsilon: \"1\"}").empty());
    CHECK_FALSE(error_of("medium: {mu: -1}").empty());
    CHECK_FALSE(error_of("medium: {nodes: 5}").empty());
    CHECK_FALSE(error_of("output: {x: {from: 0, to: 1, count: 5}}").empty());
    CHECK_FALSE(error_of("signal: {M: 1, alpha: [1, 2]}").empty());
    CHECK_FALSE(error_of("signal: {kind: table}").empty());
    CHECK_FALSE(error_of("signal: {kind: expression, E0_re: cos(t)}\nsolver: {method: modulated}").empty());
    CHECK(error_of("signal: {kind: expression, E0_re: cos(t)}\nsolver: {method: direct}").empty());
    CHECK_FALSE(error_of("medium: {x_max: 2, xi_max: 1}").empty());
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(RunConfig::load("/nonexistent/run.yaml"), ConfigError);
}

TEST_CASE("names") {
    CHECK(to_string(MethodChoice::automatic) == "auto");
    CHECK(to_string(SignalKind::table) == "table");
    CHECK(to_string(OracleKind::homogeneous) == "homogeneous");
}
