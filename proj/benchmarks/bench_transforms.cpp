#include "lgkit/modes.hpp"
#include "lgkit/transforms.hpp"

#include <benchmark/benchmark.h>

#include <complex>

using namespace lgkit;
using namespace lgkit::transforms;
using Complex = std::complex<double>;

static void BM_FrftEvaluatorPoint(benchmark::State& state) {
    const ModeIndex idx(2, 0);
    const SampledField field([idx](Complex z) { return modes::tau_overlap_lg(idx, z); },
                             QuadratureSpec{6.0, static_cast<int>(state.range(0)),
                                            QuadratureRule::GaussLegendre});
    const FrftEvaluator eval(field, FrftOrder(0.7));
    Complex tau(0.4, -0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval(tau));
        tau += Complex(1e-9, 0.0);
    }
}
BENCHMARK(BM_FrftEvaluatorPoint)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_FrftPlanBuild(benchmark::State& state) {
    const ModeIndex idx(2, 0);
    const SampledField field([idx](Complex z) { return modes::tau_overlap_lg(idx, z); },
                             QuadratureSpec{6.0, 128, QuadratureRule::GaussLegendre});
    field.grid(128);  // field values cached; measures the kernel fold only
    for (auto _ : state) {
        const FrftEvaluator eval(field, FrftOrder(0.7));
        benchmark::DoNotOptimize(eval(Complex(0.0, 0.0)));
    }
}
BENCHMARK(BM_FrftPlanBuild)->Unit(benchmark::kMillisecond);

static void BM_GwtPoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gwt(n, n + 2, x, -0.4));
        x += 1e-9;
    }
}
BENCHMARK(BM_GwtPoint)->Arg(0)->Arg(3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
