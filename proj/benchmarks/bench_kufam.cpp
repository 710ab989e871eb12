#include <benchmark/benchmark.h>

#include "kufam/decomposer.hpp"
#include "kufam/exact_oracle.hpp"
#include "kufam/generators.hpp"
#include "kufam/property_check.hpp"

using namespace kufam;

namespace {

SetFamily bench_family(std::uint32_t members) {
    // Dense random family over a 16-element ground set; fixed seed.
    return gen_random(16, 4, members, 0x5EED);
}

void BM_IntersectionSize(benchmark::State& state) {
    const SetFamily f = bench_family(2);
    const MemberSet &a = f.member(0), &b = f.member(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersection_size(a, b));
    }
}
BENCHMARK(BM_IntersectionSize);

void BM_DisjointnessGraph(benchmark::State& state) {
    const SetFamily f = bench_family(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(disjointness_graph(f, 2));
    }
}
BENCHMARK(BM_DisjointnessGraph)->Arg(16)->Arg(64)->Arg(256);

void BM_IsIntersecting(benchmark::State& state) {
    const SetFamily f = bench_family(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_intersecting(f, 4, 2));
    }
}
BENCHMARK(BM_IsIntersecting)->Arg(16)->Arg(64)->Arg(256);

void BM_Decompose(benchmark::State& state) {
    const SetFamily f =
        gen_scattered_stars(18, 3, 1, 4, static_cast<std::uint32_t>(state.range(0)), 7);
    const BoundParams p{3, 4, 1, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(f, p));
    }
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(6);

void BM_MinCoverExact(benchmark::State& state) {
    const SetFamily f = bench_family(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_cover_exact(f, 2, 2, {24}));
    }
}
BENCHMARK(BM_MinCoverExact)->Arg(10)->Arg(14)->Arg(18);

void BM_ChromaticNumber(benchmark::State& state) {
    const SetFamily f = bench_family(static_cast<std::uint32_t>(state.range(0)));
    const DisjointnessGraph g = disjointness_graph(f, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chromatic_number(g));
    }
}
BENCHMARK(BM_ChromaticNumber)->Arg(10)->Arg(14)->Arg(18);

void BM_ExhaustiveSearch(benchmark::State& state) {
    const BoundParams p{2, 3, 1, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            extremal_search(static_cast<std::uint32_t>(state.range(0)), p,
                            {.exhaustive = true}));
    }
}
BENCHMARK(BM_ExhaustiveSearch)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
