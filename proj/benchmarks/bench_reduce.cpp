#include <benchmark/benchmark.h>

#include <random>

#include "wstab/wstab.hpp"

namespace {

wstab::GrayImage noise(std::size_t side, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(side * side);
    for (auto& x : v) x = u(rng);
    return wstab::GrayImage({side, side}, v);
}

void BM_ReduceCubical(benchmark::State& state) {
    auto f = wstab::cubical_vertex(noise(static_cast<std::size_t>(state.range(0)), 1));
    for (auto _ : state) benchmark::DoNotOptimize(wstab::persistence_diagram(f));
    state.counters["cells"] = static_cast<double>(f.size());
}
BENCHMARK(BM_ReduceCubical)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ReduceWithV(benchmark::State& state) {
    auto f = wstab::cubical_top(noise(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(wstab::reduce(f));
}
BENCHMARK(BM_ReduceWithV)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
