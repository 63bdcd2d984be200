#include <benchmark/benchmark.h>

#include "boolw/cut.hpp"
#include "boolw/equivalence.hpp"
#include "boolw/generators.hpp"

using namespace boolw;

// left half of the columns of the column-major p x q layout
static VertexSet half_columns(int p, int q) {
    VertexSet a(p * q);
    for (int v = 0; v < p * (q / 2); ++v) a.insert(v);
    return a;
}

static void BM_closure_hsu_grid(benchmark::State& state) {
    int p = int(state.range(0)), q = int(state.range(1));
    Graph g = gen_hsu_grid(p, q);
    VertexSet a = half_columns(p, q);
    for (auto _ : state) benchmark::DoNotOptimize(union_closure_count(g, a));
}
BENCHMARK(BM_closure_hsu_grid)->Args({4, 4})->Args({8, 5})->Args({16, 6});

static void BM_rank_hsu_grid(benchmark::State& state) {
    int p = int(state.range(0)), q = int(state.range(1));
    Graph g = gen_hsu_grid(p, q);
    VertexSet a = half_columns(p, q);
    for (auto _ : state) benchmark::DoNotOptimize(cut_rank(g, a));
}
BENCHMARK(BM_rank_hsu_grid)->Args({4, 4})->Args({8, 5})->Args({16, 6});

static void BM_representatives_hsu_grid(benchmark::State& state) {
    int p = int(state.range(0)), q = int(state.range(1));
    int d = int(state.range(2));
    Graph g = gen_hsu_grid(p, q);
    VertexSet a = half_columns(p, q);
    for (auto _ : state) {
        auto idx = build_representatives(g, a, d);
        benchmark::DoNotOptimize(idx.size());
    }
}
BENCHMARK(BM_representatives_hsu_grid)->Args({4, 4, 1})->Args({4, 4, 2})->Args({8, 5, 1});

BENCHMARK_MAIN();
