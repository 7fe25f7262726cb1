#include <benchmark/benchmark.h>

#include "schubbd/oracle.hpp"
#include "schubbd/orbit_graph.hpp"
#include "schubbd/richardson.hpp"
#include "schubbd/text.hpp"

using namespace schubbd;

static void BM_EnumerateGroup(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(all_elements(rank, LieType::B));
}
BENCHMARK(BM_EnumerateGroup)->Arg(3)->Arg(4)->Arg(5);

static void BM_ReducedWords(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const auto w0 = SignedPermutation::longest_element(rank, LieType::B);
  for (auto _ : state) benchmark::DoNotOptimize(all_reduced_words(w0));
}
BENCHMARK(BM_ReducedWords)->Arg(2)->Arg(3);

static void BM_BruhatOrder(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const auto all = all_elements(rank, LieType::B);
  for (auto _ : state) {
    long count = 0;
    for (const auto& a : all)
      for (size_t k = 0; k < all.size(); k += 7)
        count += bruhat_leq(a, all[k]);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_BruhatOrder)->Arg(3);

static void BM_SymmetricClans(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_symmetric_clans(rank, LieType::B));
}
BENCHMARK(BM_SymmetricClans)->Arg(4)->Arg(8);

static void BM_FullExpansionB4(benchmark::State& state) {
  const auto u = parse_signed_perm("-2,-3,-4,1", 4, LieType::B);
  const auto v = parse_signed_perm("2,3,4,1", 4, LieType::B);
  for (auto _ : state)
    benchmark::DoNotOptimize(expand_richardson_class(u, v));
}
BENCHMARK(BM_FullExpansionB4);

static void BM_OrbitGraphLift(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(l_orbit_graph(rank, LieType::B));
}
BENCHMARK(BM_OrbitGraphLift)->Arg(4)->Arg(6);

static void BM_OracleRepresentatives(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BggOracle oracle(LieType::B, rank);
    for (const auto& w : all_elements(rank, LieType::B))
      benchmark::DoNotOptimize(oracle.representative(w));
  }
}
BENCHMARK(BM_OracleRepresentatives)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_OracleConstantD4(benchmark::State& state) {
  BggOracle oracle(LieType::D, 4);
  const auto w0 = SignedPermutation::longest_element(4, LieType::D);
  const auto u = parse_signed_perm("-2,-3,4,1", 4, LieType::D);
  const auto v = parse_signed_perm("2,3,1,4", 4, LieType::D);
  const auto w =
      evaluate_word(parse_word("[1, 2, 1, 4, 2]", 4), 4, LieType::D);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle.oracle_constant(w0 * u, v, w));
}
BENCHMARK(BM_OracleConstantD4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
