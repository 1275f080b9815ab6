// Throughput of the coefficient table and the three solution routes on the
// exponential-profile medium, serial reference against the OpenMP path.

#include "vekua/oracles.hpp"
#include "vekua/solver.hpp"
#include "vekua/transmutation.hpp"

#include <benchmark/benchmark.h>

using namespace vekua;

namespace {

struct Setup {
    ExponentialProfileOracle oracle = ExponentialProfileOracle::reference();
    MediumProfile profile =
        MediumProfile::on_x_mesh(oracle.permittivity(), 1.0, UniformMesh::spanning(0.0, 6.0, 5001));
    BuiltTable built = build_coefficient_table(profile);
    GeneralSignal signal =
        GeneralSignal::sample([o = oracle](double t) { return o.W0(t); }, -2.0, 8.0);
    ModulatedSignal modulated = [] {
        ModulatedSignal s;
        s.omega = 1.0;
        s.M = 3;
        s.alpha = {2.0, 2.0, 0.0, 0.0, 0.0, 2.0, 2.0};
        s.beta.assign(7, 0.0);
        return s;
    }();
};

const Setup& setup() {
    static const Setup s;
    return s;
}

Execution policy(const benchmark::State& state) {
    return state.range(0) ? Execution::parallel : Execution::serial;
}

XtMesh mesh_of(const benchmark::State& state) {
    const int n = static_cast<int>(state.range(1));
    return XtMesh::uniform(0.0, 6.0, 2 * n - 1, 0.0, 6.0, n);
}

void BM_CoefficientTable(benchmark::State& state) {
    const auto& s = setup();
    TableOptions opt;
    opt.recursion.execution = policy(state);
    for (auto _ : state) benchmark::DoNotOptimize(build_coefficient_table(s.profile, opt));
}

void BM_Direct(benchmark::State& state) {
    const auto& s = setup();
    const XtMesh mesh = mesh_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_general(s.profile, s.built.table, s.signal, mesh, {policy(state)}));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(mesh.size()));
}

void BM_Rearranged(benchmark::State& state) {
    const auto& s = setup();
    const XtMesh mesh = mesh_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            solve_rearranged(s.profile, s.built.table, s.signal, mesh, {}, {policy(state)}));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(mesh.size()));
}

void BM_Modulated(benchmark::State& state) {
    const auto& s = setup();
    const XtMesh mesh = mesh_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            solve_modulated(s.profile, s.built.table, s.modulated, mesh, -1, {policy(state)}));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(mesh.size()));
}

} // namespace

BENCHMARK(BM_CoefficientTable)->ArgNames({"parallel"})->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Direct)->ArgNames({"parallel", "nt"})->ArgsProduct({{0, 1}, {26, 101}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rearranged)->ArgNames({"parallel", "nt"})->ArgsProduct({{0, 1}, {26, 101}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Modulated)->ArgNames({"parallel", "nt"})->ArgsProduct({{0, 1}, {26, 101}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
