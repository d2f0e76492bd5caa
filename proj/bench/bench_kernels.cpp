// Serial reference vs OpenMP kernels, and the three reduction engines.

#include <benchmark/benchmark.h>

#include "mtopdiv/crossbarcode.hpp"
#include "mtopdiv/geometry.hpp"
#include "mtopdiv/parallel.hpp"
#include "mtopdiv/random.hpp"
#include "mtopdiv/synth.hpp"

namespace {

mtd::PointCloud cube(std::size_t n, std::size_t dim, std::uint64_t seed) {
    mtd::Rng rng(seed);
    std::vector<double> coords(n * dim);
    for (double& x : coords) x = rng.uniform();
    return mtd::PointCloud(n, dim, std::move(coords));
}

void BM_PairwiseReference(benchmark::State& state) {
    const auto cloud = cube(1000, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(mtd::reference::pairwise_distances(cloud));
}

void BM_PairwiseParallel(benchmark::State& state) {
    const auto cloud = cube(1000, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(mtd::pairwise_distances(cloud));
    state.counters["threads"] = static_cast<double>(mtd::thread_count());
}

void BM_CrossReference(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto p = cube(100, dim, 2);
    const auto q = cube(1000, dim, 3);
    for (auto _ : state) benchmark::DoNotOptimize(mtd::reference::cross_distances(p, q));
}

void BM_CrossParallel(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto p = cube(100, dim, 2);
    const auto q = cube(1000, dim, 3);
    for (auto _ : state) benchmark::DoNotOptimize(mtd::cross_distances(p, q));
}

void BM_CrossBarcode(benchmark::State& state) {
    const auto engine = static_cast<mtd::Engine>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    mtd::GeneratorSpec ring;
    ring.n = n;
    ring.seed = 4;
    const auto p = mtd::generate(ring);
    ring.center = {0.5, 0.0};
    ring.seed = 5;
    const auto q = mtd::generate(ring);
    const auto qm = mtd::quotient_of(p, q);
    for (auto _ : state) benchmark::DoNotOptimize(mtd::cross_barcode(qm, 1, {engine, std::nullopt}));
}

}  // namespace

BENCHMARK(BM_PairwiseReference)->Arg(16)->Arg(128)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairwiseParallel)->Arg(16)->Arg(128)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossReference)->Arg(128)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossParallel)->Arg(128)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond);
// Engines: 0 implicit cohomology, 1 plain reduction, 2 reduction with clearing.
BENCHMARK(BM_CrossBarcode)
    ->ArgsProduct({{0, 1, 2}, {20, 40}})
    ->ArgsProduct({{0}, {200, 500}})
    ->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
    mtd::configure_threads_from_env();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
