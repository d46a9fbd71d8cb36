#include <benchmark/benchmark.h>

#include "zred/maps.hpp"
#include "zred/oracle.hpp"
#include "zred/reduction.hpp"

using namespace zred;

static void BM_FundamentalSolution(benchmark::State& state) {
    const Integer delta = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(fundamental_solution(delta));
}
BENCHMARK(BM_FundamentalSolution)->Arg(17)->Arg(94)->Arg(9949)->Arg(999997);

static void BM_Sigma(benchmark::State& state) {
    const Form f{1, 5, 2};
    const PellSolution p = fundamental_solution(17);
    for (auto _ : state) benchmark::DoNotOptimize(sigma(f, p));
}
BENCHMARK(BM_Sigma);

static void BM_ZagierCycle(benchmark::State& state) {
    const Form f = enumerate_z_reduced(state.range(0)).front();
    for (auto _ : state) benchmark::DoNotOptimize(orbit_to_cycle(f, ReductionOperator::z));
}
BENCHMARK(BM_ZagierCycle)->Arg(17)->Arg(4999)->Arg(99991);

static void BM_EnumerateZReduced(benchmark::State& state) {
    const Integer delta = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_z_reduced(delta));
}
BENCHMARK(BM_EnumerateZReduced)->Arg(1000)->Arg(100000);

static void BM_NegativeExpansion(benchmark::State& state) {
    const QuadraticSurd x(5, 2, 17);
    for (auto _ : state) benchmark::DoNotOptimize(neg_cf_surd(x, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_NegativeExpansion)->Arg(50)->Arg(1000);

static void BM_Tau(benchmark::State& state) {
    const NatString s = nat({1, 3, 1, 1, 2, 5, 1, 4});
    for (auto _ : state) benchmark::DoNotOptimize(tau(s));
}
BENCHMARK(BM_Tau);

static void BM_VerifyRotation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify("rotation", state.range(0)));
}
BENCHMARK(BM_VerifyRotation)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
