#include <benchmark/benchmark.h>

#include "popbranch/generator.hpp"
#include "popbranch/oracle.hpp"
#include "popbranch/solver.hpp"

namespace {

using namespace popbranch;

// About ten edges per vertex.
AugmentedDigraph sparse_instance(std::size_t n, std::uint64_t seed) {
    double density = n > 1 ? std::min(1.0, 10.0 / static_cast<double>(n - 1)) : 0.0;
    return augment(build_instance(generate_random({n, density, 5, 0.3, true, seed})));
}

void BM_Solve(benchmark::State& state) {
    AugmentedDigraph d = sparse_instance(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve(d));
    state.counters["edges"] = static_cast<double>(d.instance_edge_count());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Solve)->RangeMultiplier(2)->Range(64, 2048)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ReachSets(benchmark::State& state) {
    AugmentedDigraph d = sparse_instance(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(compute_reach_sets(d));
}
BENCHMARK(BM_ReachSets)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_IsPopularExact(benchmark::State& state) {
    AugmentedDigraph d = sparse_instance(static_cast<std::size_t>(state.range(0)), 3);
    SolveOutcome outcome = solve(d);
    const auto* found = std::get_if<PopularFound>(&outcome);
    if (!found) {
        state.SkipWithError("instance has no popular arborescence");
        return;
    }
    for (auto _ : state) benchmark::DoNotOptimize(is_popular_exact(d, found->arborescence));
}
BENCHMARK(BM_IsPopularExact)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_BrutePopularSet(benchmark::State& state) {
    AugmentedDigraph d = augment(build_instance(
        generate_random({static_cast<std::size_t>(state.range(0)), 0.5, 3, 0.3, true, 4})));
    for (auto _ : state) benchmark::DoNotOptimize(brute_popular_set(d));
}
BENCHMARK(BM_BrutePopularSet)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
