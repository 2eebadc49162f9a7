#include <benchmark/benchmark.h>

#include <random>

#include "qcong/ladder.hpp"
#include "qcong/localize.hpp"
#include "qcong/partitions.hpp"

using namespace qcong;

namespace {

QSeries random_integral(long T, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-50, 50);
    std::vector<Rat> c(T);
    for (auto& v : c) v = coef(rng);
    return QSeries(0, std::move(c));
}

}  // namespace

static void BM_GeneratingSeriesA3(benchmark::State& state) {
    long T = state.range(0);
    for (auto _ : state) {
        auto s = generating_series(3, T);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(T);
}
BENCHMARK(BM_GeneratingSeriesA3)->RangeMultiplier(4)->Range(1024, 65536)->Complexity();

static void BM_EtaPowerRecurrence(benchmark::State& state) {
    long T = state.range(0);
    for (auto _ : state) {
        auto s = eta_product({{1, 440}, {2, -4}}, T);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(T);
}
BENCHMARK(BM_EtaPowerRecurrence)->RangeMultiplier(4)->Range(512, 8192)->Complexity();

static void BM_DenseMul(benchmark::State& state) {
    long T = state.range(0);
    auto a = random_integral(T, 1);
    auto b = random_integral(T, 2);
    for (auto _ : state) {
        auto p = mul(a, b);
        benchmark::DoNotOptimize(p);
    }
    state.SetComplexityN(T);
}
BENCHMARK(BM_DenseMul)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_Invert(benchmark::State& state) {
    long T = state.range(0);
    auto a = eta_product({{1, 1}, {2, 2}}, T);
    for (auto _ : state) {
        auto s = invert(a);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(T);
}
BENCHMARK(BM_Invert)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

static void BM_LadderStep(benchmark::State& state) {
    long T = state.range(0);
    auto base = generating_series(3, T);
    auto L1 = build_chain(1, T / 5, base)[0].series;
    for (auto _ : state) {
        auto next = apply_u(1, L1);
        benchmark::DoNotOptimize(next);
    }
}
BENCHMARK(BM_LadderStep)->Arg(20000);

static void BM_DpOracle(benchmark::State& state) {
    long N = state.range(0);
    for (auto _ : state) {
        auto t = dp_oracle(3, N);
        benchmark::DoNotOptimize(t);
    }
    state.SetComplexityN(N);
}
BENCHMARK(BM_DpOracle)->RangeMultiplier(2)->Range(250, 2000)->Complexity();

static void BM_UMonomialDirect(benchmark::State& state) {
    long m = state.range(0);
    for (auto _ : state) {
        UMonomialEngine eng;
        auto p = eng.direct(0, m, 2);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_UMonomialDirect)->Arg(2)->Arg(8)->Arg(16);

static void BM_ToXPolyL1(benchmark::State& state) {
    auto L1 = build_L(1, 70).series;
    for (auto _ : state) {
        auto p = to_xpoly(L1, 5, 9, 25);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ToXPolyL1);

BENCHMARK_MAIN();
