#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "symtree/canonical.hpp"
#include "symtree/colorings.hpp"
#include "symtree/dcs.hpp"
#include "symtree/oracle.hpp"
#include "symtree/spectrum.hpp"
#include "symtree/symmetry.hpp"
#include "symtree/tree.hpp"

using namespace symtree;

static void bm_build_perfect_tree(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) {
        Tree tree = build_perfect_tree(2, n);
        benchmark::DoNotOptimize(tree.vertex_count());
    }
}
BENCHMARK(bm_build_perfect_tree)->Arg(10)->Arg(16);

static void bm_subtree_ids_uncolored(benchmark::State& state) {
    const Tree tree = build_perfect_tree(2, int(state.range(0)));
    const RootedView view = center_view(tree);
    for (auto _ : state) {
        auto ids = subtree_ids(view, nullptr);
        benchmark::DoNotOptimize(ids.data());
    }
}
BENCHMARK(bm_subtree_ids_uncolored)->Arg(10)->Arg(16);

static void bm_subtree_ids_colored(benchmark::State& state) {
    const int n = int(state.range(0));
    const Tree tree = build_perfect_tree(2, n);
    const Coloring coloring = frugal_coloring(2, n);
    const RootedView view = center_view(tree);
    for (auto _ : state) {
        auto ids = subtree_ids(view, &coloring);
        benchmark::DoNotOptimize(ids.data());
    }
}
BENCHMARK(bm_subtree_ids_colored)->Arg(10)->Arg(16);

static void bm_is_distinguishing_frugal(benchmark::State& state) {
    const int n = int(state.range(0));
    const Tree tree = build_perfect_tree(3, n);
    const Coloring coloring = frugal_coloring(3, n);
    for (auto _ : state) benchmark::DoNotOptimize(is_distinguishing(tree, coloring));
}
BENCHMARK(bm_is_distinguishing_frugal)->Arg(6)->Arg(10);

static void bm_automorphism_count(benchmark::State& state) {
    const Tree tree = build_perfect_tree(3, int(state.range(0)));
    for (auto _ : state) {
        AutomorphismReport r = automorphism_count(tree);
        benchmark::DoNotOptimize(r.count);
    }
}
BENCHMARK(bm_automorphism_count)->Arg(6)->Arg(8);

static void bm_canonical_code_long_arms(benchmark::State& state) {
    // deep unbalanced tree, stresses the non-recursive bottom-up pass
    const Tree tree = build_kpode({100000, 99999, 50000});
    const RootedView view = center_view(tree);
    for (auto _ : state) {
        auto ids = subtree_ids(view, nullptr);
        benchmark::DoNotOptimize(ids.data());
    }
}
BENCHMARK(bm_canonical_code_long_arms);

static void bm_min_paint_cost(benchmark::State& state) {
    const Tree tree = build_perfect_tree(2, 2);
    for (auto _ : state) {
        PaintCostResult r = min_paint_cost(tree, 3);
        benchmark::DoNotOptimize(r.cost);
    }
}
BENCHMARK(bm_min_paint_cost);

static void bm_spectrum_oracle_t22(benchmark::State& state) {
    const Tree tree = build_perfect_tree(2, 2);
    for (auto _ : state) {
        OracleSpectrumReport r = spectrum_oracle(tree);
        benchmark::DoNotOptimize(r.costs.data());
    }
}
BENCHMARK(bm_spectrum_oracle_t22);

static void bm_spectrum_closed_large(benchmark::State& state) {
    for (auto _ : state) {
        SpectrumReport r = spectrum_closed(50, 20);
        benchmark::DoNotOptimize(r.costs_rle.data());
    }
}
BENCHMARK(bm_spectrum_closed_large);

static void bm_lemma_rows(benchmark::State& state) {
    const int k = int(state.range(0));
    std::mt19937 rng(99);
    std::vector<std::int64_t> values(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::int64_t(i) * 7 + 1;
    std::shuffle(values.begin(), values.end(), rng);
    for (auto _ : state) {
        RowPermutedMatrix m = lemma_rows(values);
        benchmark::DoNotOptimize(m.column_sums().data());
    }
}
BENCHMARK(bm_lemma_rows)->Arg(50)->Arg(200);

static void bm_general_dcs(benchmark::State& state) {
    const std::vector<std::int64_t> values = {9, 7, 5, 3, 1};
    const std::int64_t k = state.range(0);
    for (auto _ : state) {
        RowPermutedMatrix m = general_dcs(values, k);
        benchmark::DoNotOptimize(m.rows());
    }
}
BENCHMARK(bm_general_dcs)->Arg(18)->Arg(119);

BENCHMARK_MAIN();
