#include <benchmark/benchmark.h>

#include "ischur/hecke.hpp"
#include "ischur/longform.hpp"
#include "ischur/qnum.hpp"
#include "ischur/schur.hpp"
#include "ischur/theta.hpp"

using namespace ischur;

static void BM_LaurentMul(benchmark::State& state) {
  LaurentPoly a(1);
  LaurentPoly binom = LaurentPoly::v(1) + LaurentPoly::v(-1) + LaurentPoly(1);
  for (int i = 0; i < 16; ++i) a = a * binom;
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_LaurentMul);

static void BM_GaussBinom(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_binom(10, 5));
}
BENCHMARK(BM_GaussBinom);

static void BM_HeckeLongestSquare(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const WeylGroup& g = WeylGroup::get(rank);
  const WeylElement* w0 = &g.elements()[0];
  for (const WeylElement& w : g.elements())
    if (length(w) > length(*w0)) w0 = &w;
  HeckeElement t = HeckeElement::basis(*w0);
  for (auto _ : state) benchmark::DoNotOptimize(hecke_mul(t, t));
}
BENCHMARK(BM_HeckeLongestSquare)->Arg(2)->Arg(3);

static void BM_EnumerateXi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_xi(n, r));
}
BENCHMARK(BM_EnumerateXi)->Args({2, 3})->Args({3, 3});

static void BM_OracleProduct(benchmark::State& state) {
  const SchurContext& ctx = SchurContext::get(2, 2);
  ThetaMatrix a = ThetaMatrix::diag({1, 0, 0, 1}).plus_e_theta(1, 2, 1);
  ThetaMatrix b = ThetaMatrix::diag({1, 0, 0, 1}).plus_e_theta(2, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.oracle_product(a, b));
}
BENCHMARK(BM_OracleProduct);

static void BM_ShortFormula(benchmark::State& state) {
  const SchurContext& ctx = SchurContext::get(2, 2);
  Composition la{{1, 0}};
  ThetaMatrix a = ThetaMatrix::diag({1, 0, 0, 1}).plus_e_theta(2, 3, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(ctx.short_mul(ShortKind::Up, 1, la, a));
}
BENCHMARK(BM_ShortFormula);

static void BM_TriangularMonomial(benchmark::State& state) {
  const SchurContext& ctx = SchurContext::get(2, 2);
  ThetaMatrix a = ThetaMatrix::e_theta(2, 4, 1).plus_e_theta(3, 2, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(ctx.triangular_monomial(a));
}
BENCHMARK(BM_TriangularMonomial);

static void BM_WallExpand(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(t_power_expand(2, m));
}
BENCHMARK(BM_WallExpand)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
