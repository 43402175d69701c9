#include <benchmark/benchmark.h>

#include "fae/frobenius.hpp"
#include "fae/lattice.hpp"
#include "fae/oracle.hpp"
#include "fae/orthant_solver.hpp"
#include "fae/random_instances.hpp"
#include "fae/reduction.hpp"

namespace {

using namespace fae;

void BM_Det(benchmark::State& state) {
  Rng rng(1);
  IntMatrix a = random_matrix(rng, state.range(0), state.range(0), -5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(det(a));
}
BENCHMARK(BM_Det)->DenseRange(2, 8, 2);

void BM_Hnf(benchmark::State& state) {
  Rng rng(2);
  IntMatrix a = random_nonsingular(rng, state.range(0), -5, 5, Int(1) << 60);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(a));
}
BENCHMARK(BM_Hnf)->DenseRange(2, 6, 2);

void BM_FundamentalDomain(benchmark::State& state) {
  Rng rng(3);
  IntMatrix a = random_nonsingular(rng, 2, -6, 6, Int(state.range(0)));
  Lattice l(a);
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_domain_points(l));
  state.counters["det"] = l.det_abs().convert_to<double>();
}
BENCHMARK(BM_FundamentalDomain)->Arg(4)->Arg(16)->Arg(64);

void BM_OrthantSolve(benchmark::State& state) {
  Rng rng(4);
  auto q = make_box(IntVector{-8, -8}, IntVector{8, 8});
  std::vector<IntVector> shifts;
  for (int k = 0; k < state.range(0); ++k) shifts.push_back(random_vector(rng, 2, -6, 6));
  for (auto _ : state) benchmark::DoNotOptimize(solve(*q, shifts));
}
BENCHMARK(BM_OrthantSolve)->Arg(2)->Arg(8)->Arg(32);

void BM_IlpFeasible(benchmark::State& state) {
  IntMatrix w{{3, 5}, {-3, -5}, {-1, 0}, {0, -1}};
  IntVector b{7, -7, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(ilp_feasible(w, b));
}
BENCHMARK(BM_IlpFeasible);

void BM_Decide(benchmark::State& state) {
  InputStatement s{IntMatrix{{1, -1}, {1, 1}}, make_box(IntVector{-3, -3}, IntVector{3, 3})};
  DecideOptions o;
  o.l1_cap = Int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decide(s, o));
}
BENCHMARK(BM_Decide)->Arg(4)->Arg(16)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_DecideNaive(benchmark::State& state) {
  InputStatement s{IntMatrix{{1, -1}, {1, 1}}, make_box(IntVector{-3, -3}, IntVector{3, 3})};
  for (auto _ : state) benchmark::DoNotOptimize(decide_naive(s));
}
BENCHMARK(BM_DecideNaive)->Unit(benchmark::kMillisecond);

void BM_Frobenius(benchmark::State& state) {
  IntMatrix w{{3, 4, 5}};
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_report(w, Int(200)));
}
BENCHMARK(BM_Frobenius);

}  // namespace
BENCHMARK_MAIN();
