#include "lgkit/fock_space.hpp"

#include <benchmark/benchmark.h>

using namespace lgkit;
using namespace lgkit::fock;

static void BM_JxRotation(benchmark::State& state) {
    const BasisSpec basis(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(jx_rotation(basis).entries(1, 1));
}
BENCHMARK(BM_JxRotation)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_LgStateLadder(benchmark::State& state) {
    const BasisSpec basis(32);
    const ModeIndex idx(6, 2);
    for (auto _ : state) benchmark::DoNotOptimize(lg_state_ladder(idx, basis).coeffs[0]);
}
BENCHMARK(BM_LgStateLadder)->Unit(benchmark::kMillisecond);

static void BM_LgStateBeamsplitter(benchmark::State& state) {
    const BasisSpec basis(32);
    const ModeIndex idx(6, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(lg_state_beamsplitter(idx, basis).coeffs[0]);
}
BENCHMARK(BM_LgStateBeamsplitter)->Unit(benchmark::kMillisecond);

static void BM_BuildEtaState(benchmark::State& state) {
    const BasisSpec basis(static_cast<int>(state.range(0)));
    const Complex eta(0.6, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(build_eta_state(eta, basis).coeffs[0]);
}
BENCHMARK(BM_BuildEtaState)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_ExpmDense(benchmark::State& state) {
    const BasisSpec basis(static_cast<int>(state.range(0)));
    const Matrix generator =
        Complex(0.0, 1.0) * position_quadrature(1, basis).entries;
    for (auto _ : state) benchmark::DoNotOptimize(expm_dense(generator)(0, 0));
}
BENCHMARK(BM_ExpmDense)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
