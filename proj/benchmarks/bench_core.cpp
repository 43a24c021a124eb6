#include <benchmark/benchmark.h>

#include <random>

#include "pcpt/dynamics.hpp"
#include "pcpt/frames.hpp"
#include "pcpt/retrograde.hpp"

using namespace pcpt;

static void BM_MatexpUnitary(benchmark::State& state) {
    const Index dim = state.range(0);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    CMatrix m(dim, dim);
    for (Index i = 0; i < m.size(); ++i) m.data()[i] = Complex(g(rng), g(rng));
    const CMatrix h = (m + m.adjoint()) / 2.0;
    for (auto _ : state) benchmark::DoNotOptimize(matexp_unitary(h, 0.7));
}
BENCHMARK(BM_MatexpUnitary)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_VerifyCpt(benchmark::State& state) {
    const SystemSpec spec{static_cast<int>(state.range(0)), coupling_params(OddPair(3, 1), 0.0), std::nullopt};
    for (auto _ : state) benchmark::DoNotOptimize(verify_cpt(spec));
}
BENCHMARK(BM_VerifyCpt)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SearchW(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(search_w(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SearchW)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SimulateFourLevel(benchmark::State& state) {
    const CouplingParams params = coupling_params(OddPair(5, 1), 0.0);
    const CMatrix h = to_lab(build_h_tp(4, params), build_w(2).w);
    const auto grid = uniform_grid(0.0, 2.0 * params.tau, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(simulate(h, CVector::Unit(16, 0), grid));
}
BENCHMARK(BM_SimulateFourLevel)->Arg(400)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_ForbiddenScan(benchmark::State& state) {
    const SystemSpec spec{2, coupling_params(OddPair(3, 1), 0.0), std::nullopt};
    const auto grid = uniform_grid(0.0, 20.0 * spec.params.tau, 9999);
    for (auto _ : state) benchmark::DoNotOptimize(forbidden_scan(spec, grid));
}
BENCHMARK(BM_ForbiddenScan)->Unit(benchmark::kMillisecond);

static void BM_BasicCpts(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(basic_cpts(4, OddPair(3, 1), 0.0));
}
BENCHMARK(BM_BasicCpts)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
