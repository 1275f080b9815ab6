// vekua: time-domain Maxwell solver for layered media via transmutation operators.

#include "vekua/commands.hpp"
#include "vekua/execution.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Transmutation-operator solver for Maxwell's equations in 1D inhomogeneous media"};
    app.require_subcommand(1);

    std::string config;
    std::string out = ".";
    int threads = 0;
    unsigned seed = 0;
    bool serial = false;
    int repeats = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-c,--config", config, "YAML run configuration (defaults when omitted)")
            ->check(CLI::ExistingFile);
        sub->add_option("-o,--out", out, "Output directory")->capture_default_str();
        sub->add_option("--threads", threads, "OpenMP threads, 0 for the runtime default")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", seed, "Reserved; no subcommand draws random numbers");
        sub->add_flag("--serial", serial, "Use the serial reference loops");
    };

    auto* coeffs = app.add_subcommand("coeffs", "Tabulate the kernel coefficients a_n, b_n");
    auto* solve = app.add_subcommand("solve", "Compute E and H on the output mesh");
    auto* validate = app.add_subcommand("validate", "Compare against an analytic oracle");
    auto* bench = app.add_subcommand("bench", "Time the solution methods");
    for (auto* s : {coeffs, solve, validate, bench}) add_common(s);
    bench->add_option("--repeats", repeats, "Runs per method; the best is reported")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    vekua::set_threads(threads);
    vekua::CommandOptions options;
    options.out_dir = out;
    options.execution = serial ? vekua::Execution::serial : vekua::Execution::parallel;
    options.repeats = repeats;
    const std::string name = app.get_subcommands().front()->get_name();
    return vekua::run_command(name, config, options, std::cout, std::cerr);
}
