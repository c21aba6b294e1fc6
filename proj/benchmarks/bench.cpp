#include <benchmark/benchmark.h>

#include "mpw/enumerate.hpp"
#include "mpw/extremal.hpp"

namespace {

void BM_ConstructTn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mpw::construct_tn(n));
}
BENCHMARK(BM_ConstructTn)->Arg(30)->Arg(120)->Arg(480);

void BM_WienerTn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto e = mpw::construct_tn(n);
    for (auto _ : state) benchmark::DoNotOptimize(mpw::wiener_index(e));
}
BENCHMARK(BM_WienerTn)->Arg(30)->Arg(120)->Arg(480);

void BM_CanonicalCode(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto e = mpw::construct_tn(n);
    for (auto _ : state) benchmark::DoNotOptimize(mpw::canonical_code(e));
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(12)->Arg(16);

void BM_FlipEdge(benchmark::State& state) {
    const auto e = mpw::construct_tn(12);
    // a1-a2 lies between two distinct apexes, so the flip always succeeds
    for (auto _ : state) benchmark::DoNotOptimize(mpw::flip_edge(e, 0, 3));
}
BENCHMARK(BM_FlipEdge);

void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    mpw::EnumerateOptions opt;
    opt.jobs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(mpw::enumerate_triangulations(n, opt));
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
