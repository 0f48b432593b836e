#include <benchmark/benchmark.h>

#include <random>

#include "packsep/gen.hpp"
#include "packsep/keb.hpp"
#include "packsep/packed.hpp"
#include "packsep/separator.hpp"

namespace {

using namespace packsep;

SegmentSet square_grid(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    return gen_grid(side, side, 2.0);
}

void BM_FindSeparator(benchmark::State& state) {
    const SegmentSet grid = square_grid(state);
    SeparatorConfig cfg;
    cfg.mode = MinOfM{8};
    for (auto _ : state) {
        cfg.seed++;
        benchmark::DoNotOptimize(find_separator(grid, cfg));
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(grid.size()));
}
BENCHMARK(BM_FindSeparator)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ApproxKeb(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    std::vector<Point> pts;
    for (std::int64_t i = 0; i < state.range(0); ++i) pts.push_back(Point{u(rng), u(rng)});
    const std::size_t k = pts.size() / 25 + 1;
    for (auto _ : state) benchmark::DoNotOptimize(approx_k_enclosing_ball(pts, k));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApproxKeb)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond)->Complexity();

void BM_EstimatePackedness(benchmark::State& state) {
    const SegmentSet grid = square_grid(state);
    for (auto _ : state) benchmark::DoNotOptimize(estimate_packedness(grid));
}
BENCHMARK(BM_EstimatePackedness)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);

void BM_BuildTree(benchmark::State& state) {
    const SegmentSet grid = square_grid(state);
    SeparatorConfig cfg;
    cfg.c_bal = 4;
    cfg.mode = MinOfM{4};
    for (auto _ : state) benchmark::DoNotOptimize(build_tree(grid, cfg, 64));
}
BENCHMARK(BM_BuildTree)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
