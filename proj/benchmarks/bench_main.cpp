#include <benchmark/benchmark.h>

#include "mopareto/mopareto.hpp"

namespace {

using namespace mopareto;

void BM_Bucket(benchmark::State& state) {
    const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(bucket(inst, Rational(1, 4)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Bucket)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_GridEpsilon(benchmark::State& state) {
    const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), 3, 2);
    const auto spec = RelationSpec::epsilon(Rational(1, 4));
    for (auto _ : state) benchmark::DoNotOptimize(construct_grid_approx(inst, spec));
}
BENCHMARK(BM_GridEpsilon)->RangeMultiplier(4)->Range(64, 1024);

void BM_GridQuasiTwo(benchmark::State& state) {
    const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), 4, 3);
    const auto spec = RelationSpec::quasi_k(Rational(1, 2), 2);
    for (auto _ : state) benchmark::DoNotOptimize(construct_grid_approx(inst, spec));
}
BENCHMARK(BM_GridQuasiTwo)->RangeMultiplier(4)->Range(64, 1024);

void BM_DominationDigraph(benchmark::State& state) {
    const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), 3, 4);
    const auto spec = RelationSpec::quasi_k(Rational(1, 2), 2);
    for (auto _ : state) benchmark::DoNotOptimize(domination_digraph(inst, spec));
}
BENCHMARK(BM_DominationDigraph)->RangeMultiplier(2)->Range(32, 512);

void BM_ExactMinDominatingSet(benchmark::State& state) {
    const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), 2, 5);
    const auto graph = domination_digraph(inst, RelationSpec::epsilon(Rational(1, 4)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_min_dominating_set(graph, kMaxExactNodeLimit));
}
BENCHMARK(BM_ExactMinDominatingSet)->DenseRange(8, 40, 8);

void BM_GreedyBiobjective(benchmark::State& state) {
    const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), 2, 6);
    for (auto _ : state) benchmark::DoNotOptimize(greedy_biobjective_min(inst, Rational(1, 10)));
}
BENCHMARK(BM_GreedyBiobjective)->RangeMultiplier(4)->Range(64, 1024);

void BM_DualRestrict2Approx(benchmark::State& state) {
    const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), 2, 7);
    for (auto _ : state) benchmark::DoNotOptimize(dual_restrict_2approx(inst, Rational(1, 10)));
}
BENCHMARK(BM_DualRestrict2Approx)->RangeMultiplier(4)->Range(64, 1024);

void BM_VerifyApproximation(benchmark::State& state) {
    const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), 3, 8);
    const auto spec = RelationSpec::one_exact(Rational(1, 4));
    const auto set = construct_grid_approx(inst, spec);
    for (auto _ : state) benchmark::DoNotOptimize(verify_members(inst, set.members, spec));
}
BENCHMARK(BM_VerifyApproximation)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
