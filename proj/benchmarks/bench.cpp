#include <benchmark/benchmark.h>

#include <random>

#include "lpdo/factorization.hpp"
#include "lpdo/parser.hpp"
#include "lpdo/printer.hpp"

namespace {

using namespace lpdo;

const RatExpr X = RatExpr::x();
const RatExpr Y = RatExpr::y();

// Random operator of order n with small polynomial coefficients.
LPDO random_operator(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  LPDO::Coeffs cs;
  for (int m = 0; m <= n; ++m) {
    for (int k = 0; k <= m; ++k) {
      const RatExpr c = RatExpr(coeff(rng)) + RatExpr(coeff(rng)) * X + RatExpr(coeff(rng)) * Y * Y;
      if (!c.is_zero()) cs[{m - k, k}] = c;
    }
  }
  cs[{n, 0}] = RatExpr(1);
  return LPDO::from_coeffs(cs);
}

void BM_RationalArithmetic(benchmark::State& state) {
  const RatExpr a = (X * X + Y) / (X - Y + 1);
  const RatExpr b = (Y * Y - X) / (X + Y);
  for (auto _ : state) benchmark::DoNotOptimize(diff(a * b + a / b, Direction::X));
}
BENCHMARK(BM_RationalArithmetic);

void BM_ComposeRandom(benchmark::State& state) {
  std::mt19937 rng(1);
  const int n = static_cast<int>(state.range(0));
  const LPDO a = random_operator(rng, n);
  const LPDO b = random_operator(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_ComposeRandom)->DenseRange(1, 4);

void BM_ParseLandau(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_operator("(Dx+1)*(Dx+1)*(Dx+x*Dy)"));
}
BENCHMARK(BM_ParseLandau);

void BM_FactorA1(benchmark::State& state) {
  const LPDO a1 = parse_operator("Dx^2-Dy^2+x*Dy+y*Dx+(y^2-x^2)/4+1");
  for (auto _ : state) benchmark::DoNotOptimize(factor_left(a1));
}
BENCHMARK(BM_FactorA1);

void BM_FactorPoisson(benchmark::State& state) {
  ParseOptions o;
  o.parameters = {"alpha", "beta", "gamma"};
  const LPDO p = parse_operator("Dx*Dy + alpha/(x+y)*Dx + beta/(x+y)*Dy + gamma/(x+y)^2", o);
  for (auto _ : state) benchmark::DoNotOptimize(factor_left_all(p));
}
BENCHMARK(BM_FactorPoisson);

// Factor of a known product at its constant root, by order.
void BM_RoundTrip(benchmark::State& state) {
  std::mt19937 rng(2);
  const int n = static_cast<int>(state.range(0));
  const LPDO f = LPDO::dx() - RatExpr(7) * LPDO::dy() + LPDO(X * Y);
  const LPDO a = compose(f, random_operator(rng, n - 1));
  FactorOptions opts;
  opts.root = RootChoice::with_value(RatExpr(7));
  for (auto _ : state) benchmark::DoNotOptimize(factor_left(a, opts));
}
BENCHMARK(BM_RoundTrip)->DenseRange(2, 5);

void BM_FactorFullyLandau(benchmark::State& state) {
  const LPDO a = parse_operator("(Dx+1)*(Dx+1)*(Dx+x*Dy)");
  for (auto _ : state) benchmark::DoNotOptimize(factor_fully(a));
}
BENCHMARK(BM_FactorFullyLandau);

void BM_PrintStructured(benchmark::State& state) {
  std::mt19937 rng(3);
  const LPDO a = random_operator(rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(to_structured(a));
}
BENCHMARK(BM_PrintStructured);

}  // namespace

BENCHMARK_MAIN();
