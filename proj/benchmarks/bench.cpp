#include <benchmark/benchmark.h>

#include "edfforge/edf.hpp"
#include "edfforge/families.hpp"
#include "edfforge/oracle.hpp"

using namespace edfforge;

namespace {

void BM_external_difference(benchmark::State& state) {
    const Residue n = 10007;
    const int size = static_cast<int>(state.range(0));
    std::vector<Residue> a, b;
    for (int i = 0; i < size; ++i) {
        a.push_back(3 * i);
        b.push_back(3 * i + 1);
    }
    ZSubset sa(n, a), sb(n, b);
    for (auto _ : state) benchmark::DoNotOptimize(external_difference(sa, sb));
}
BENCHMARK(BM_external_difference)->Range(4, 256);

void BM_build_2cedf(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int l = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build_2cedf(k, l));
}
BENCHMARK(BM_build_2cedf)->Args({2, 3})->Args({8, 4})->Args({16, 4})->Args({16, 8});

void BM_edf_pipeline_sun(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    auto sun = sun_alpha(k);
    for (auto _ : state)
        benchmark::DoNotOptimize(edf_from_near_alpha(sun.graph, sun.labelling, 4));
}
BENCHMARK(BM_edf_pipeline_sun)->Arg(1)->Arg(4)->Arg(8);

void BM_verify_edf(benchmark::State& state) {
    auto sun = sun_alpha(static_cast<int>(state.range(0)));
    EdfWitness w = edf_from_near_alpha(sun.graph, sun.labelling, 4);
    for (auto _ : state) benchmark::DoNotOptimize(verify_edf(w));
}
BENCHMARK(BM_verify_edf)->Arg(1)->Arg(4)->Arg(8);

void BM_search_beta_cycle(benchmark::State& state) {
    std::vector<std::pair<int, int>> edges;
    const int m = static_cast<int>(state.range(0));
    for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
    Graph cycle(m, edges);
    for (auto _ : state)
        benchmark::DoNotOptimize(search_valuation(cycle, ValuationKind::beta));
}
BENCHMARK(BM_search_beta_cycle)->Arg(7)->Arg(8)->Arg(11);

void BM_tree_enumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(all_trees(n));
}
BENCHMARK(BM_tree_enumeration)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
