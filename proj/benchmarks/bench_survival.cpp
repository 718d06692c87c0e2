#include <benchmark/benchmark.h>

#include "zeno/bath.hpp"
#include "zeno/kernel_table.hpp"
#include "zeno/survival.hpp"

using namespace zeno;

namespace {

const bath::SpectralDensity kSuperOhmic{1.0, 3.0, 10.0};

void BM_KernelPhi(benchmark::State& state) {
    const bath::BathKernel k(kSuperOhmic);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(k.phi(t));
        t = t < 10.0 ? t + 0.37 : 0.0;
    }
}
BENCHMARK(BM_KernelPhi);

void BM_KernelTableBuild(benchmark::State& state) {
    const bath::BathKernel k(kSuperOhmic);
    const double t_max = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bath::KernelTable(k, t_max, 1e-10));
}
BENCHMARK(BM_KernelTableBuild)->Arg(3)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SurvivalEvaluate(benchmark::State& state) {
    const bath::BathKernel k(kSuperOhmic);
    const survival::SurvivalEvaluator ev({1.0, 0.2}, k, 3.0);
    const auto mode = static_cast<survival::SurvivalMode>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ev.evaluate(mode, 1.5));
    state.SetLabel(std::string(survival::to_string(mode)));
}
BENCHMARK(BM_SurvivalEvaluate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
