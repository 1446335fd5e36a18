#include "lgkit/fock_space.hpp"
#include "lgkit/phase_space.hpp"

#include <benchmark/benchmark.h>

using namespace lgkit;
using namespace lgkit::phasespace;

static void BM_WignerClosedForm(benchmark::State& state) {
    const ModeIndex idx(4, 2);
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wigner_lg(idx, PhasePoint4(x, 0.4, -0.2, 0.7)));
        x += 1e-9;
    }
}
BENCHMARK(BM_WignerClosedForm);

static void BM_WignerOracleCachedKernels(benchmark::State& state) {
    const fock::BasisSpec basis(24);
    const WignerOracle oracle(fock::lg_state_beamsplitter(ModeIndex(4, 2), basis));
    const PhasePoint4 pt(0.5, 0.4, -0.2, 0.7);
    oracle(pt);  // populate the kernel cache
    for (auto _ : state) benchmark::DoNotOptimize(oracle(pt));
}
BENCHMARK(BM_WignerOracleCachedKernels);

static void BM_WignerOracleColdKernels(benchmark::State& state) {
    const fock::BasisSpec basis(24);
    const fock::TwoModeState lg = fock::lg_state_beamsplitter(ModeIndex(4, 2), basis);
    double x = 0.5;
    for (auto _ : state) {
        const WignerOracle oracle(lg);
        benchmark::DoNotOptimize(oracle(PhasePoint4(x, 0.4, -0.2, 0.7)));
        x += 1e-6;  // distinct displacement, so kernels cannot be reused
    }
    state.SetLabel("includes two dense displacement exponentials");
}
BENCHMARK(BM_WignerOracleColdKernels)->Unit(benchmark::kMillisecond);

static void BM_MarginalAnalytic(benchmark::State& state) {
    const ModeIndex idx(4, 2);
    const Complex sigma(0.6, -0.3);
    for (auto _ : state) benchmark::DoNotOptimize(marginal_sigma_analytic(idx, sigma));
}
BENCHMARK(BM_MarginalAnalytic);

BENCHMARK_MAIN();
