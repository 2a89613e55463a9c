// Serial vs OpenMP timings for the heavier kernels. Arg 0 is serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "topoarith/continuity.hpp"
#include "topoarith/kernels.hpp"

using namespace topoarith;

namespace {

Execution mode(const benchmark::State& st) { return st.range(0) ? Execution::parallel : Execution::serial; }

void BM_OracleAgreement(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(oracle_agreement(OrderKind::final_digits, 1u << 14, mode(st)).checked);
}

void BM_Trichotomy(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(order_trichotomy(OrderKind::variant, 1u << 11, mode(st)).checked);
}

void BM_IntersectionRule(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(intersection_rule(6, 1u << 14, mode(st)).checked);
}

void BM_WitnessSoundness(benchmark::State& st) {
    const auto w = witness_final_digits(Operation::mul, Natural(1234), Natural(77), 6);
    for (auto _ : st) benchmark::DoNotOptimize(witness_soundness(w, 1u << 12, mode(st)).checked);
}

}  // namespace

BENCHMARK(BM_OracleAgreement)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Trichotomy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntersectionRule)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessSoundness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
