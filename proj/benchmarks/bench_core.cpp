#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "stcurve/composition.hpp"
#include "stcurve/diagram.hpp"
#include "stcurve/origami.hpp"
#include "stcurve/search.hpp"

using namespace stcurve;

namespace {

Origami random_connected(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<int> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    while (true) {
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        Perm h(a), v(b);
        if (transitive(h, v)) return {h, v};
    }
}

Origami orni() {
    return assemble(coordinates_from_string(
        "(((1, 1, 1, 1, 1, 1), [[0, 1, 2, 3, 4, 5], [0, 1, 2, 3, 4, 5]]), 0, "
        "((2, 2, 2), [[0, 1, 2], [0, 1, 2]]))"));
}

void BM_canonical_pair(benchmark::State& state) {
    Origami o = random_connected(static_cast<int>(state.range(0)), 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_pair(o.h, o.v));
}
BENCHMARK(BM_canonical_pair)->Arg(12)->Arg(48)->Arg(144);

void BM_sl2z_orbit(benchmark::State& state) {
    Origami o = orni();
    for (auto _ : state)
        benchmark::DoNotOptimize(sl2z_orbit(o));
}
BENCHMARK(BM_sl2z_orbit);

void BM_lyapunov_sum(benchmark::State& state) {
    Origami o = orni();
    for (auto _ : state)
        benchmark::DoNotOptimize(lyapunov_sum(o));
}
BENCHMARK(BM_lyapunov_sum);

void BM_enumerate_diagrams(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_diagrams({2, 1, 1}));
}
BENCHMARK(BM_enumerate_diagrams);

void BM_compositions_72_11(benchmark::State& state) {
    CompositionSpec spec{72, 11, 4, 8, 8, std::nullopt};
    for (auto _ : state) {
        long count = 0;
        generate(spec, [&](const std::vector<int>&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_compositions_72_11);

void BM_window_filter(benchmark::State& state) {
    OneCylinderDiagram d{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}};
    std::vector<int> comp{1, 1, 1, 1, 1, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(window_filter(comp, d, 2, 0, 3));
}
BENCHMARK(BM_window_filter);

void BM_assemble(benchmark::State& state) {
    SurfaceCoordinates c = coordinates_from_string(
        "(((1, 1, 1, 1, 1, 1), [[0, 1, 2, 3, 4, 5], [0, 1, 2, 3, 4, 5]]), 0, "
        "((2, 2, 2), [[0, 1, 2], [0, 1, 2]]))");
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble(c));
}
BENCHMARK(BM_assemble);

}  // namespace

BENCHMARK_MAIN();
