#include <benchmark/benchmark.h>

#include "parityns/parityns.hpp"

using namespace parityns;

namespace {

VectorField witness(int n) { return random_symmetric_solenoidal(parse_tuple("(100,010,001)"), n, 1); }

void BM_DedupeOracleComplex(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dedupe_oracle(true).total);
}
BENCHMARK(BM_DedupeOracleComplex)->Unit(benchmark::kMillisecond);

void BM_SymtypeSelftest(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_symtype_selftest().size());
}
BENCHMARK(BM_SymtypeSelftest)->Unit(benchmark::kMillisecond);

void BM_ParityProject(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid3 f = random_smooth_field(n, n / 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(parity_project(f, Parity(1, 0, 1)).data());
}
BENCHMARK(BM_ParityProject)->Arg(16)->Arg(32)->Arg(64);

void BM_DecomposeMatched(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const VectorField u = witness(n);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_matched(u, Parity{}));
}
BENCHMARK(BM_DecomposeMatched)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_COp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const VectorField u = witness(n);
  for (auto _ : state) benchmark::DoNotOptimize(C_op(u, u));
}
BENCHMARK(BM_COp)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_DuhamelB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const VectorField u0 = witness(n);
  const Trajectory tr = Trajectory::from_function(0.1, [u0](double s) { return heat(u0, s); });
  SolverConfig cfg;
  cfg.n = n;
  cfg.quad_points = 9;
  for (auto _ : state) benchmark::DoNotOptimize(duhamel_B(tr, tr, 0.1, cfg));
}
BENCHMARK(BM_DuhamelB)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_PicardSolve(benchmark::State& state) {
  SolverConfig cfg;
  VectorField u0 = witness(16);
  u0 *= 1e-2;
  for (auto _ : state) benchmark::DoNotOptimize(picard_solve(u0, cfg).converged);
}
BENCHMARK(BM_PicardSolve)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
