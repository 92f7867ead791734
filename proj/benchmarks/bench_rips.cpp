#include <benchmark/benchmark.h>

#include <random>

#include "wstab/wstab.hpp"

namespace {

wstab::PointCloud cloud(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    return wstab::PointCloud(pts);
}

void BM_RipsBuild(benchmark::State& state) {
    auto X = cloud(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(wstab::rips(X, 1));
}
BENCHMARK(BM_RipsBuild)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_RipsPersistence(benchmark::State& state) {
    auto f = wstab::rips(cloud(static_cast<int>(state.range(0)), 2), 1);
    for (auto _ : state) benchmark::DoNotOptimize(wstab::persistence_diagram(f));
}
BENCHMARK(BM_RipsPersistence)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_PHT(benchmark::State& state) {
    auto X = cloud(12, 3);
    std::vector<std::vector<int>> tris;
    for (int i = 0; i + 2 < 12; ++i) tris.push_back({i, i + 1, i + 2});
    wstab::VertexEmbedding f{wstab::SimplicialComplex::closure(tris), X.points};
    auto g = f;
    for (auto& x : g.coords) x[0] += 0.01;
    auto s = wstab::sphere_sample(2, static_cast<int>(state.range(0)), wstab::SphereScheme::uniform_grid);
    for (auto _ : state) benchmark::DoNotOptimize(wstab::pht_distance(f, g, 2.0, s));
}
BENCHMARK(BM_PHT)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
