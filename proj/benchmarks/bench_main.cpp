#include "bipart/constructions.hpp"
#include "bipart/cover.hpp"
#include "bipart/matching.hpp"
#include "bipart/patterns.hpp"
#include "bipart/solver.hpp"
#include "bipart/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace bipart;

namespace {

void BM_VerifyGridPartition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Partition p = build_ferrers(n);
    const ClassSpec spec{Pattern::TwoK2};
    for (auto _ : state) benchmark::DoNotOptimize(verify_partition(p, spec).valid);
}
BENCHMARK(BM_VerifyGridPartition)->Arg(49)->Arg(100);

void BM_VerifyCherries(benchmark::State& state) {
    const Partition p = build_cherries(complete_graph(static_cast<int>(state.range(0))));
    const ClassSpec spec{Pattern::P4, Pattern::C4, Pattern::S4, Pattern::TwoK2};
    for (auto _ : state) benchmark::DoNotOptimize(verify_partition(p, spec).valid);
}
BENCHMARK(BM_VerifyCherries)->Arg(50)->Arg(100);

void BM_MaxMatching(benchmark::State& state) {
    const Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(max_matching_size(g));
}
BENCHMARK(BM_MaxMatching)->Arg(32)->Arg(64);

void BM_ExactSolveK5(benchmark::State& state) {
    const Graph k5 = complete_graph(5);
    const ClassSpec spec{Pattern::TwoK2, Pattern::C4};
    for (auto _ : state) {
        const auto r = chi_prime(k5, spec);
        benchmark::DoNotOptimize(r.result->chi);
    }
}
BENCHMARK(BM_ExactSolveK5);

void BM_CoverThrows(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const int n = 2 * (q * q + q + 1);
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(random_c4_cover(n, q, 200, seed++).covered);
}
BENCHMARK(BM_CoverThrows)->Arg(5)->Arg(7);

void BM_InducedC4Detect(benchmark::State& state) {
    const Partition p = build_cbip_orchards(static_cast<int>(state.range(0)));
    const ImpliedGraph ig = implied_graph(p.templates.back());
    for (auto _ : state)
        benchmark::DoNotOptimize(find_induced_bipartite(ig.graph, Pattern::C4).has_value());
}
BENCHMARK(BM_InducedC4Detect)->Arg(64)->Arg(128);

} // namespace

BENCHMARK_MAIN();
