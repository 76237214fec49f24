#include <benchmark/benchmark.h>

#include <vector>

#include "thetagw/thetagw.hpp"

namespace {

void BM_HankelDet(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thetagw::hankel_det(k, 1));
}
BENCHMARK(BM_HankelDet)->DenseRange(2, 8, 2);

void BM_SolveB(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thetagw::solve_b(k));
}
BENCHMARK(BM_SolveB)->DenseRange(2, 6, 2);

void BM_BranchCongruence(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thetagw::verify_branch_congruence(k, 2 * k + 2));
}
BENCHMARK(BM_BranchCongruence)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

void BM_ArfBruteForce(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thetagw::arf_census_bruteforce(h));
}
BENCHMARK(BM_ArfBruteForce)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_GluingCheck(benchmark::State& state) {
  const std::vector<int> alphas = {0, 1, 2, 3};
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thetagw::check_degree2_gluing(h, thetagw::Parity::odd, alphas));
}
BENCHMARK(BM_GluingCheck)->Arg(0)->Arg(10);

void BM_N0Identity(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thetagw::n0_identity(h));
}
BENCHMARK(BM_N0Identity)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
