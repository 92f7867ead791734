#include <benchmark/benchmark.h>

#include <random>

#include "wstab/wstab.hpp"

namespace {

wstab::PersistenceDiagram random_diagram(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> b(0.0, 10.0), len(0.0, 5.0);
    std::vector<wstab::DiagramPoint> pts;
    for (int i = 0; i < n; ++i) {
        double x = b(rng);
        pts.push_back({0, x, x + len(rng)});
    }
    return wstab::PersistenceDiagram(pts);
}

void BM_Wasserstein(benchmark::State& state) {
    auto X = random_diagram(static_cast<int>(state.range(0)), 1), Y = random_diagram(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(wstab::wasserstein_distance(X, Y, 2.0));
}
BENCHMARK(BM_Wasserstein)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_Bottleneck(benchmark::State& state) {
    auto X = random_diagram(static_cast<int>(state.range(0)), 3), Y = random_diagram(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(wstab::bottleneck(X, Y));
}
BENCHMARK(BM_Bottleneck)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_LandscapeDistance(benchmark::State& state) {
    auto X = random_diagram(static_cast<int>(state.range(0)), 5), Y = random_diagram(static_cast<int>(state.range(0)), 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(wstab::landscape_distance(wstab::landscape(X), wstab::landscape(Y), 2.0));
}
BENCHMARK(BM_LandscapeDistance)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
