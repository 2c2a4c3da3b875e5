#include <benchmark/benchmark.h>

#include "absorb/absorbing.hpp"
#include "absorb/integers.hpp"
#include "absorb/search.hpp"

using namespace absorb;

namespace {

SearchBounds deg(unsigned d, unsigned jobs = 1) {
  SearchBounds b;
  b.max_deg = d;
  b.jobs = jobs;
  return b;
}

void BM_OmegaZeroIdeal(benchmark::State& state) {
  const auto ring = make_zmod(static_cast<std::size_t>(state.range(0)));
  const auto zero = zero_ideal(ring);
  for (auto _ : state) benchmark::DoNotOptimize(omega(zero, 6));
}
BENCHMARK(BM_OmegaZeroIdeal)->Arg(12)->Arg(48)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_OmegaUnpruned(benchmark::State& state) {
  const auto ring = make_zmod(static_cast<std::size_t>(state.range(0)));
  const auto zero = zero_ideal(ring);
  for (auto _ : state) benchmark::DoNotOptimize(omega(zero, 6, {.prune = false}));
}
BENCHMARK(BM_OmegaUnpruned)->Arg(12)->Arg(48)->Unit(benchmark::kMicrosecond);

void BM_LatticeBuild(benchmark::State& state) {
  const auto ring = state.range(0) == 0 ? make_truncated_local(2, 2, 3) : make_zmod(210);
  for (auto _ : state) benchmark::DoNotOptimize(IdealLattice::build(ring));
}
BENCHMARK(BM_LatticeBuild)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_StrongOmega(benchmark::State& state) {
  const auto ring = make_truncated_local(2, 2, 3);
  const auto lat = IdealLattice::build(ring);
  const auto zero = zero_ideal(ring);
  for (auto _ : state) benchmark::DoNotOptimize(strong_omega(zero, 6, lat));
}
BENCHMARK(BM_StrongOmega)->Unit(benchmark::kMillisecond);

void BM_GaussianSearchZ12(benchmark::State& state) {
  const auto ring = make_zmod(12);
  const auto bounds = deg(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_search(ring, bounds));
}
BENCHMARK(BM_GaussianSearchZ12)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_DmSurveyZ6(benchmark::State& state) {
  const auto ring = make_zmod(6);
  for (auto _ : state) benchmark::DoNotOptimize(dm_survey(ring, deg(3)));
}
BENCHMARK(BM_DmSurveyZ6)->Unit(benchmark::kMillisecond);

void BM_PolyOmega(benchmark::State& state) {
  const auto ring = make_zmod(12);
  const auto zero = zero_ideal(ring);
  for (auto _ : state) benchmark::DoNotOptimize(verify_poly_omega(zero, deg(1)));
}
BENCHMARK(BM_PolyOmega)->Unit(benchmark::kMillisecond);

void BM_BezoutSweepZ12(benchmark::State& state) {
  const auto ring = make_zmod(12);
  for (auto _ : state) benchmark::DoNotOptimize(bezout_sweep(ring, deg(2)));
}
BENCHMARK(BM_BezoutSweepZ12)->Unit(benchmark::kMillisecond);

void BM_IntConjecture(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(conjecture_check_int(12, 2, 5, 1000, 42));
}
BENCHMARK(BM_IntConjecture)->Unit(benchmark::kMillisecond);

void BM_IntPolynomialMul(benchmark::State& state) {
  std::vector<BigInt> coeffs;
  for (int i = 0; i < state.range(0); ++i) coeffs.emplace_back(BigInt(1) << (i * 7 % 200));
  const auto f = IntPolynomial::from_coefficients(coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(int_mul(f, f));
}
BENCHMARK(BM_IntPolynomialMul)->Arg(8)->Arg(64)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
