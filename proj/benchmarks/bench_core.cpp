#include <benchmark/benchmark.h>

#include <fracon/calculus.hpp>
#include <fracon/convexity.hpp>
#include <fracon/expr.hpp>
#include <fracon/gamma.hpp>
#include <fracon/inequalities.hpp>

using namespace fracon;

static void BM_Gamma(benchmark::State& state) {
  double x = 1.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracon::gamma(x));
    x = x < 5.0 ? x + 0.01 : 1.37;
  }
}
BENCHMARK(BM_Gamma);

static void BM_ExprEval(benchmark::State& state) {
  const Expr e = Expr::parse("x^(2a) + 3*abs(x - 0.4)^(a) - 2^a*x", 1);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e(x, 0.7));
    x = x < 2.0 ? x + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_ExprEval);

static void BM_ExprParse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Expr::parse("x^(2a) + c^(a)*x^(2a) - abs(x - 0.5)/2", 1, {{"c", 1.0}}));
  }
}
BENCHMARK(BM_ExprParse);

static void BM_NumericRL(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0)) / 10.0;
  const FunctionSpec f(Expr::parse("x^(2a) + abs(x - 0.3)", 1), Interval(0, 1));
  const AlphaContext ctx(alpha);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lf_integral(f, 0, 1, ctx, IntegralBackend::numeric()).value());
  }
}
BENCHMARK(BM_NumericRL)->Arg(3)->Arg(5)->Arg(9)->Arg(10);

static void BM_CertifyGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FunctionSpec f(Expr::parse("x^(2a) + c^(a)*x^(2a)", 1, {{"c", 1.0}}), Interval(0, 2));
  const EtaSpec eta(Expr::parse("2^a*u + v", 2));
  const AlphaContext ctx(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_gsc(f, eta, 1.0, ctx, n, 3).min_defect);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CertifyGrid)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_HHTerms(benchmark::State& state) {
  const FunctionSpec f(Expr::parse("x^(2a) + abs(x - 0.3)", 1), Interval(0, 1));
  const EtaSpec eta(Expr::parse("u - v", 2));
  const AlphaContext ctx(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hh_terms(f, eta, 1.0, 0, 1, ctx).T2.value());
  }
}
BENCHMARK(BM_HHTerms)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
