#include <benchmark/benchmark.h>

#include "onecall/dispatch.hpp"
#include "onecall/harness.hpp"

using namespace onecall;

static void BM_DpllRandom3Cnf(benchmark::State& state) {
  const auto vars = static_cast<Var>(state.range(0));
  const auto clauses = static_cast<std::size_t>(4.2 * vars);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dpll_sat(gen_random_cnf_clauses(vars, clauses, 3, seed++)));
}
BENCHMARK(BM_DpllRandom3Cnf)->Arg(10)->Arg(20)->Arg(40);

static void BM_BruteForceRandom3Cnf(benchmark::State& state) {
  const auto vars = static_cast<Var>(state.range(0));
  const auto clauses = static_cast<std::size_t>(4.2 * vars);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_sat(gen_random_cnf(vars, clauses, 3, seed++)));
}
BENCHMARK(BM_BruteForceRandom3Cnf)->Arg(10)->Arg(16)->Arg(20);

static void BM_Tseitin(benchmark::State& state) {
  Formula f = or_combine(gen_random_cnf(20, 84, 3, 1), gen_random_cnf(20, 84, 3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(tseitin(f));
}
BENCHMARK(BM_Tseitin);

static void BM_DeutschXorCircuit(benchmark::State& state) {
  Formula a = parse_expr("x1 & !x1"), b = parse_expr("x1");
  for (auto _ : state) {
    CountedOracle o;
    benchmark::DoNotOptimize(run_deutsch_xor(a, b, o));
  }
}
BENCHMARK(BM_DeutschXorCircuit);

static void BM_VerifyPairAllTables(benchmark::State& state) {
  Formula a = gen_random_cnf(8, 34, 3, 3), b = gen_random_cnf(8, 34, 3, 4);
  const auto tables = TruthTable2::all();
  for (auto _ : state)
    for (auto f : tables) benchmark::DoNotOptimize(verify_pair(f, a, b));
}
BENCHMARK(BM_VerifyPairAllTables);

static void BM_EnumerateSmall(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_formulas(3, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateSmall)->Arg(4)->Arg(5);
BENCHMARK_MAIN();
