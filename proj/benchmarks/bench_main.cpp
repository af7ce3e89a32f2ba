#include <benchmark/benchmark.h>

#include "affine_basis/intertwiner.hpp"
#include "affine_basis/verifier.hpp"

using namespace affine_basis;

namespace {

void BM_EnumerateAdmissible(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible(ModuleKind::a1(1, 1), degree));
}
BENCHMARK(BM_EnumerateAdmissible)->DenseRange(2, 6, 2);

// Fresh module per iteration so the memo does not hide the straightening cost.
void BM_GramBlockA1(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const HighestWeightSpec spec = HighestWeightSpec::a1(1, 1);
  const auto monos = pbw_monomials(Algebra::a1, spec, degree, spec.finite_weight());
  for (auto _ : state) {
    VermaModule verma(spec);
    benchmark::DoNotOptimize(gram_matrix(monos, verma).rank);
  }
  state.counters["monomials"] = static_cast<double>(monos.size());
}
BENCHMARK(BM_GramBlockA1)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_RankExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>((i * 7 + j * 13) % 11) - 5);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_RankExact)->RangeMultiplier(2)->Range(8, 64);

void BM_TruncatedModule(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TruncatedModule m({0, 0, 1}, depth);
    benchmark::DoNotOptimize(m.dimension(depth));
  }
}
BENCHMARK(BM_TruncatedModule)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SolveIntertwiner(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LevelOneFactors factors(depth);
    benchmark::DoNotOptimize(solve_w(factors.fundamental(1), factors.fundamental(2)).rank);
  }
}
BENCHMARK(BM_SolveIntertwiner)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_DerivationPowerSweep(benchmark::State& state) {
  const DerivationTable t;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_t_power(ModuleKind::a1(1, 1), 3, t).pass());
}
BENCHMARK(BM_DerivationPowerSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
