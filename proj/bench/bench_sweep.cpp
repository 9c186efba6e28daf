#include <benchmark/benchmark.h>

#include <omp.h>

#include "saddlelink/sweep.hpp"

using namespace saddlelink;

namespace {

std::vector<GridPoint> grid(long n)
{
    nlohmann::json doc = {{"grids", nlohmann::json::array()}};
    doc["grids"].push_back({{"subset", "(2-1)CC"},
                            {"axes", {{"alpha", {{"min", 0.3}, {"max", 2.5}}},
                                      {"beta", {{"min", -2.5}, {"max", -0.3}}},
                                      {"t", {{"min", 1.1}, {"max", 20.0}}}}},
                            {"random", n / 2}});
    doc["grids"].push_back({{"subset", "(2-1)RC"},
                            {"axes", {{"beta", {{"min", -2.0}, {"max", 2.0}}},
                                      {"mu", {{"min", 0.1}, {"max", 0.9}}},
                                      {"s", {{"min", 0.1}, {"max", 6.0}}},
                                      {"theta0", {{"min", 0.0}, {"max", 3.1}}}}},
                            {"random", n - n / 2}});
    return expand_grid(doc, 1);
}

const SweepOptions opts{2048, true};

void BM_serial(benchmark::State& state)
{
    const auto points = grid(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_serial(points, opts));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(points.size()));
}

void BM_parallel(benchmark::State& state)
{
    const auto points = grid(state.range(0));
    const int jobs = omp_get_max_threads();
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_parallel(points, opts, jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(points.size()));
    state.counters["jobs"] = jobs;
}

} // namespace

BENCHMARK(BM_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
