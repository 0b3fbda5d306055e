#include <benchmark/benchmark.h>

#include "venergy/charpoly.hpp"
#include "venergy/coulson.hpp"
#include "venergy/spectral.hpp"
#include "venergy/suites.hpp"

using namespace venergy;

static void BM_CharPolyTree(benchmark::State& state) {
    const Graph t = random_tree(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_poly(t));
    }
}
BENCHMARK(BM_CharPolyTree)->RangeMultiplier(2)->Range(8, 64);

static void BM_CharPolyDense(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_poly(g));
    }
}
BENCHMARK(BM_CharPolyDense)->RangeMultiplier(2)->Range(8, 32);

static void BM_Jacobi(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigen_sym(g));
    }
}
BENCHMARK(BM_Jacobi)->RangeMultiplier(2)->Range(8, 256);

static void BM_StarCoalescence(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Graph g = coalesce(star_graph(n + 1), 0, path_graph(3), 0).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertex_energies(g));
    }
}
BENCHMARK(BM_StarCoalescence)->Arg(50)->Arg(100)->Arg(200);

static void BM_CoulsonVertex(benchmark::State& state) {
    const Graph t = random_tree(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coulson_vertex_energy(t, 0));
    }
}
BENCHMARK(BM_CoulsonVertex)->RangeMultiplier(2)->Range(4, 32);

static void BM_AlternationSuite(benchmark::State& state) {
    SuiteConfig cfg;
    cfg.trials = 20;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite("alternation", cfg));
    }
}
BENCHMARK(BM_AlternationSuite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
