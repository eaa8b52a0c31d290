#include <benchmark/benchmark.h>

#include "dof/cobra.hpp"
#include "dof/experiment.hpp"
#include "dof/peeling.hpp"
#include "dof/random_model.hpp"
#include "dof/solvers.hpp"
#include "dof/theory.hpp"

namespace {

using namespace dof;

void BM_GenRandomKcnf(benchmark::State& state) {
  const auto n = static_cast<Var>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen_random_kcnf(n, n, 3, SeedSpec{1, i++}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenRandomKcnf)->Arg(1000)->Arg(10000);

void BM_Solve2Sat(benchmark::State& state) {
  const auto n = static_cast<Var>(state.range(0));
  const Formula phi = gen_random_kcnf(n, n / 2, 2, SeedSpec{2, 0});
  for (auto _ : state) benchmark::DoNotOptimize(solve_2sat(phi));
}
BENCHMARK(BM_Solve2Sat)->Arg(4000)->Arg(100000);

void BM_SolveDpll(benchmark::State& state) {
  const auto n = static_cast<Var>(state.range(0));
  const Formula phi = gen_random_kcnf(n, 3 * n, 3, SeedSpec{3, 0});
  for (auto _ : state) benchmark::DoNotOptimize(solve_dpll(phi));
}
BENCHMARK(BM_SolveDpll)->Arg(200)->Arg(1000);

void BM_Peeling(benchmark::State& state) {
  const auto n = static_cast<Var>(state.range(0));
  const Formula phi = gen_random_kcnf(n, n / 2, 2, SeedSpec{4, 0});
  const LiteralSet L = LiteralSet::canonical(n, static_cast<Var>(n / 40));
  for (auto _ : state) benchmark::DoNotOptimize(run_peeling(phi, L));
}
BENCHMARK(BM_Peeling)->Arg(4000)->Arg(100000);

void BM_TrialKernel(benchmark::State& state) {
  experiment::CellSpec s;
  s.n = 4000;
  s.alpha = 0.5;
  s.gamma = 1.0;
  const experiment::Cell cell = experiment::make_cell(static_cast<unsigned>(state.range(0)), experiment::TrialMode::FixedL, s);
  std::size_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(experiment::run_trial(cell, 9, t++, kDefaultDpllBudget));
}
BENCHMARK(BM_TrialKernel)->Arg(2)->Arg(3);

void BM_Exact1Sat(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theory::exact_1sat_prob(1'000'000, state.range(0)));
}
BENCHMARK(BM_Exact1Sat)->Arg(100)->Arg(2000);

void BM_FindCobra(benchmark::State& state) {
  const Formula phi = gen_random_kcnf(1000, 700, 2, SeedSpec{5, 0});
  const LiteralSet L = LiteralSet::canonical(1000, 30);
  for (auto _ : state) benchmark::DoNotOptimize(find_cobra(phi, L));
}
BENCHMARK(BM_FindCobra);

}  // namespace
BENCHMARK_MAIN();
