#include <benchmark/benchmark.h>

#include <cstdint>

#include "partdeck/partdeck.hpp"

namespace {

// weight n(n+1)/2 staircase: many distinct parts, so decks grow quickly
partdeck::Partition staircase(std::uint64_t top) {
    std::vector<std::uint64_t> parts;
    for (std::uint64_t p = top; p >= 1; --p) parts.push_back(p);
    return partdeck::Partition(std::move(parts));
}

void BM_PartitionsOf(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    std::size_t produced = 0;
    for (auto _ : state) {
        auto all = partdeck::partitions_of(n);
        produced = all.size();
        benchmark::DoNotOptimize(all);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(produced * state.iterations()));
}
BENCHMARK(BM_PartitionsOf)->Arg(20)->Arg(30)->Arg(40);

void BM_DeckEnumeration(benchmark::State& state) {
    const auto lambda = staircase(10);  // weight 55
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto deck = partdeck::k_deletions(lambda, k);
        benchmark::DoNotOptimize(deck);
    }
}
BENCHMARK(BM_DeckEnumeration)->Arg(1)->Arg(3)->Arg(5);

void BM_Reconstruct(benchmark::State& state) {
    const auto lambda = staircase(static_cast<std::uint64_t>(state.range(0)));
    const auto deck = partdeck::k_deletions(lambda, 3);
    for (auto _ : state) {
        auto result = partdeck::reconstruct(deck);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_Reconstruct)->Arg(6)->Arg(8)->Arg(10);

void BM_Sweep(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto report = partdeck::exhaustive_check(n, 3);
        benchmark::DoNotOptimize(report);
    }
    state.SetLabel("k=3");
}
BENCHMARK(BM_Sweep)->Arg(15)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
