#include "lgkit/special_functions.hpp"

#include <benchmark/benchmark.h>

#include <complex>

using namespace lgkit::specialfn;

static void BM_Laguerre(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(laguerre(n, 2, x));
        x += 1e-9;
    }
}
BENCHMARK(BM_Laguerre)->Arg(4)->Arg(16)->Arg(64);

static void BM_Hermite(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    double x = 1.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermite(m, x));
        x += 1e-9;
    }
}
BENCHMARK(BM_Hermite)->Arg(4)->Arg(16)->Arg(64);

static void BM_Hermite2v(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const std::complex<double> x(0.8, -0.3), y(0.8, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(hermite2v(m, m + 2, x, y));
}
BENCHMARK(BM_Hermite2v)->Arg(2)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
