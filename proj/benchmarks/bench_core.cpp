#include <benchmark/benchmark.h>

#include "primeseq/primeseq.hpp"

using namespace primeseq;

namespace {

void BM_TermFast(benchmark::State& state)
{
    const Index n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(term(FamilySpec::main(), n, Strategy::ModularFast));
    }
}
BENCHMARK(BM_TermFast)->Arg(100)->Arg(1000)->Arg(10000);

void BM_TermExact(benchmark::State& state)
{
    const Index n = state.range(0);
    b(n);  // warm the cache so only the gcd is timed
    for (auto _ : state) {
        benchmark::DoNotOptimize(term(FamilySpec::main(), n, Strategy::ExactBigInt));
    }
}
BENCHMARK(BM_TermExact)->Arg(100)->Arg(1000)->Arg(5000);

void BM_Scan(benchmark::State& state)
{
    const Index count = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan(FamilySpec::main(), 3, count + 2, ScanOptions{Strategy::ModularFast, 1}));
    }
    state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_Scan)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ResidueChain(benchmark::State& state)
{
    const Index n = state.range(0);
    const BigInt x = numerator(FamilySpec::main(), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcd_partner_residue(FamilySpec::main(), n, x));
    }
}
BENCHMARK(BM_ResidueChain)->Arg(1000)->Arg(100000);

void BM_EvalCf(benchmark::State& state)
{
    const auto spec = cf_theorem1_spec(state.range(0), BigInt(12345));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_cf(spec));
    }
}
BENCHMARK(BM_EvalCf)->Arg(10)->Arg(60)->Arg(200);

void BM_IsPrime(benchmark::State& state)
{
    const BigInt v = state.range(0) == 0 ? BigInt("18446744073709551557") : BigInt("340282366920938463463374607431768211297");
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_prime(v));
    }
}
BENCHMARK(BM_IsPrime)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
