// Compares the OpenMP Monte Carlo kernel against the serial reference.
#include <benchmark/benchmark.h>

#include "wellpath/polytope.hpp"

namespace {

void bm_parallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const auto est = wellpath::mc_estimate(n, 1 << 20, seed++);
        benchmark::DoNotOptimize(est.estimate);
    }
    state.SetItemsProcessed(state.iterations() * (1 << 20));
}

void bm_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const auto est = wellpath::mc_estimate_serial(n, 1 << 20, seed++);
        benchmark::DoNotOptimize(est.estimate);
    }
    state.SetItemsProcessed(state.iterations() * (1 << 20));
}

}  // namespace

BENCHMARK(bm_parallel)->Arg(4)->Arg(8)->Arg(16)->UseRealTime();
BENCHMARK(bm_serial)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
