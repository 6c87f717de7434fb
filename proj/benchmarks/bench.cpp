#include <benchmark/benchmark.h>

#include "plsrd/bounds.hpp"
#include "plsrd/construct.hpp"
#include "plsrd/family.hpp"
#include "plsrd/solver.hpp"

using namespace plsrd;

static void BM_GenerateFlowerSnark(benchmark::State& state) {
    for (auto _ : state) {
        Graph g = generate(FamilySpec::flower_snark(static_cast<int>(state.range(0))));
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_GenerateFlowerSnark)->Arg(4)->Arg(16)->Arg(64);

static void BM_Validate(benchmark::State& state) {
    FamilySpec spec = FamilySpec::prism(static_cast<int>(state.range(0)));
    Graph g = generate(spec);
    Labeling f = construct(spec).labeling;
    for (auto _ : state) {
        ValidationReport report = validate(g, f);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_Validate)->Arg(10)->Arg(100);

static void BM_IsValid(benchmark::State& state) {
    FamilySpec spec = FamilySpec::prism(static_cast<int>(state.range(0)));
    Graph g = generate(spec);
    Labeling f = construct(spec).labeling;
    for (auto _ : state) benchmark::DoNotOptimize(is_valid(g, f));
}
BENCHMARK(BM_IsValid)->Arg(10)->Arg(100);

static void BM_BruteForce(benchmark::State& state) {
    Graph g = generate(FamilySpec::path(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        SolveResult r = brute_force(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BruteForce)->Arg(8)->Arg(10);

static void BM_Solve(benchmark::State& state) {
    FamilySpec spec = FamilySpec::ladder(static_cast<int>(state.range(0)));
    Graph g = generate(spec);
    for (auto _ : state) {
        SolveResult r = solve(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Solve)->Arg(5)->Arg(7);

static void BM_SolveWarmStarted(benchmark::State& state) {
    FamilySpec spec = FamilySpec::ladder(static_cast<int>(state.range(0)));
    Graph g = generate(spec);
    SolveOptions opts;
    opts.warm_start = construct(spec).labeling;
    for (auto _ : state) {
        SolveResult r = solve(g, opts);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SolveWarmStarted)->Arg(5)->Arg(7);

static void BM_MaxTwoPackingExact(benchmark::State& state) {
    Graph g = generate(FamilySpec::prism(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        PackingSet s = max_two_packing(g, true);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_MaxTwoPackingExact)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
