#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"

#include <fracon/calculus.hpp>
#include <fracon/errors.hpp>
#include <fracon/gamma.hpp>

#include <cmath>
#include <string>

using namespace fracon;

namespace {

FunctionSpec fn(const std::string& text, double lo, double hi) { return {Expr::parse(text, 1), Interval(lo, hi)}; }

std::string monomial(int k, double base) {
  const std::string x = base == 0.0 ? "x" : "(x - " + std::to_string(base) + ")";
  return k == 0 ? "1" : x + "^(" + std::to_string(k) + "a)";
}

double rl(const FunctionSpec& f, double a, double b, double alpha) {
  return lf_integral(f, a, b, AlphaContext(alpha), IntegralBackend::numeric()).value();
}

double exact(const FunctionSpec& f, double a, double b, double alpha) {
  return lf_integral(f, a, b, AlphaContext(alpha), IntegralBackend::exact()).value();
}

} // namespace

TEST_CASE("monomial oracle for both backends") {
  const std::pair<double, double> intervals[] = {{0.0, 1.0}, {0.0, 2.0}, {1.0, 3.5}};
  for (const double al : gen::test_alphas()) {
    for (const auto& [a, b] : intervals) {
      for (int k = 0; k <= 3; ++k) {
        CAPTURE(al);
        CAPTURE(k);
        CAPTURE(a);
        const FunctionSpec f = fn(monomial(k, a), a, b);
        const double want = oracle::monomial_integral(k, al, b - a);
        CHECK(oracle::rel_close(exact(f, a, b, al), want, 1e-12));
        CHECK(oracle::rel_close(rl(f, a, b, al), want, 1e-6));
      }
    }
  }
}

TEST_CASE("integral examples") {
  CHECK(oracle::rel_close(exact(fn("x^(a)", 0, 1), 0, 1, 0.5), oracle::half_sqrt_pi(), 1e-15));
  CHECK(exact(fn("1", 0, 1), 0, 1, 1.0) == 1.0);
  CHECK(rl(fn("1", 0, 1), 0, 1, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(exact(fn("x^(2a)", 0, 1), 0, 1, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("t^a (1-t)^a integral") {
  const FunctionSpec f = fn("x^(a)*(1 - x)^(a)", 0, 1);
  CHECK_FALSE(f.gpoly(0.0, AlphaContext(0.5)));
  CHECK(rl(f, 0, 1, 1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  const double B = fracon::gamma(2.0) / fracon::gamma(3.0);
  const double A = fracon::gamma(3.0) / fracon::gamma(4.0);
  CHECK(rl(f, 0, 1, 1.0) == doctest::Approx(B - A).epsilon(1e-12));
  for (const double al : gen::test_alphas()) {
    CAPTURE(al);
    CHECK(oracle::rel_close(rl(f, 0, 1, al), oracle::rl_t_one_minus_t(al), 1e-7));
  }
  // The chain's constant B - A is the same integral only at alpha = 1.
  const double al = 0.5;
  const double b_minus_a =
      fracon::gamma(1 + al) / fracon::gamma(1 + 2 * al) - fracon::gamma(1 + 2 * al) / fracon::gamma(1 + 3 * al);
  CHECK(std::fabs(rl(f, 0, 1, al) - b_minus_a) > 1e-3);
}

TEST_CASE("a = b gives zero") {
  for (const double al : gen::test_alphas()) {
    const AlphaContext ctx(al);
    const FunctionSpec f = fn("x^(2a) + 3", 0, 1);
    CHECK(lf_integral(f, 0.4, 0.4, ctx, IntegralBackend::exact()).value() == 0.0);
    CHECK(lf_integral(f, 0.4, 0.4, ctx, IntegralBackend::numeric()).value() == 0.0);
    CHECK(lf_integral_changed(f, 0.4, 0.4, ctx, IntegralBackend::numeric()).value() == 0.0);
  }
}

TEST_CASE("orientation: reversed endpoints negate") {
  gen::Gen g(7);
  for (const double al : gen::test_alphas()) {
    const AlphaContext ctx(al);
    const FunctionSpec f = fn("x^(2a) - 2*x^(a) + 5", 0, 3);
    for (int i = 0; i < 5; ++i) {
      const double a = g.uniform(0.0, 1.0);
      const double b = g.uniform(1.5, 3.0);
      const auto be = IntegralBackend::numeric();
      CHECK(lf_integral(f, b, a, ctx, be).value() == -lf_integral(f, a, b, ctx, be).value());
      const auto ex = IntegralBackend::exact();
      CHECK(lf_integral(f, b, 0.0, ctx, ex).value() == -lf_integral(f, 0.0, b, ctx, ex).value());
    }
  }
}

TEST_CASE("change of variables agrees with the direct integral") {
  for (const double al : gen::test_alphas()) {
    CAPTURE(al);
    const AlphaContext ctx(al);
    const FunctionSpec f = fn("x^(2a) + 2*x^(a) + 1", 0, 2);
    const double direct = lf_integral(f, 0, 2, ctx, IntegralBackend::exact()).value();
    CHECK(oracle::rel_close(lf_integral_changed(f, 0, 2, ctx, IntegralBackend::exact()).value(), direct, 1e-12));
    CHECK(oracle::rel_close(lf_integral_changed(f, 0, 2, ctx, IntegralBackend::numeric()).value(), direct, 1e-8));
  }
  CHECK(lf_integral_changed(fn("x^(2a)", 0, 1), 0, 1, AlphaContext(1.0), IntegralBackend::exact()).value() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  const double K = 2.5;
  for (const double al : gen::test_alphas()) {
    const double want = K * std::pow(1.7, al) / oracle::gamma(1 + al);
    const double got = lf_integral_changed(fn("2.5", 0.3, 2.0), 0.3, 2.0, AlphaContext(al), IntegralBackend::numeric())
                           .value();
    CHECK(oracle::rel_close(got, want, 1e-10));
  }
}

TEST_CASE("linearity") {
  gen::Gen g(19);
  for (const double al : gen::test_alphas()) {
    const AlphaContext ctx(al);
    for (int i = 0; i < 5; ++i) {
      const double p = g.uniform(-3, 3);
      const double q = g.uniform(-3, 3);
      const Bindings consts{{"p", p}, {"q", q}};
      const FunctionSpec f(Expr::parse("abs(x - 0.3)", 1), Interval(0, 1));
      const FunctionSpec h(Expr::parse("x^(3a) + 1", 1), Interval(0, 1));
      const FunctionSpec comb(Expr::parse("p*abs(x - 0.3) + q*(x^(3a) + 1)", 1, consts), Interval(0, 1));
      for (const auto& be : {IntegralBackend::numeric()}) {
        const double lhs = lf_integral(comb, 0, 1, ctx, be).value();
        const double rhs = p * lf_integral(f, 0, 1, ctx, be).value() + q * lf_integral(h, 0, 1, ctx, be).value();
        // each integral is converged to a relative 1e-9
        CHECK(std::fabs(lhs - rhs) <= 1e-8 * std::max(1.0, std::fabs(rhs)));
      }
    }
  }
}

TEST_CASE("monotonicity") {
  for (const double al : gen::test_alphas()) {
    const AlphaContext ctx(al);
    const FunctionSpec lo = fn("x^(2a)", 0, 1);
    const FunctionSpec hi = fn("x^(a)", 0, 1);
    for (const double x : Interval(0, 1).grid(1000)) {
      REQUIRE(lo(x, al) <= hi(x, al));
    }
    CHECK(rl(lo, 0, 1, al) <= rl(hi, 0, 1, al) + 1e-9);
  }
}

TEST_CASE("interval additivity holds at alpha = 1") {
  const FunctionSpec f = fn("x^(2a) + abs(x - 0.4)", 0, 1);
  const double whole = rl(f, 0, 1, 1.0);
  CHECK(whole == doctest::Approx(rl(f, 0, 0.6, 1.0) + rl(f, 0.6, 1, 1.0)).epsilon(1e-8));
}

TEST_CASE("exact backend needs a normal form") {
  CHECK_THROWS_AS(exact(fn("abs(x - 0.5)", 0, 1), 0, 1, 0.5), NotPolynomialError);
  const AlphaContext ctx(0.5);
  CHECK(choose_backend(fn("abs(x - 0.5)", 0, 1), 0, ctx).kind == BackendKind::numeric_rl);
  CHECK(choose_backend(fn("x^(2a)", 0, 1), 0, ctx).kind == BackendKind::exact_monomial);
}

TEST_CASE("backend crosscheck examples") {
  const auto r1 = backend_crosscheck(fn("x^(2a)", 0, 1), 0, 1, AlphaContext(0.5));
  CHECK(r1.relative_deviation <= 1e-6);
  CHECK_FALSE(r1.flagged);
  const auto r2 = backend_crosscheck(fn("1", 0, 3), 0, 3, AlphaContext(0.3));
  CHECK(r2.relative_deviation <= 1e-12);
  const auto r3 = backend_crosscheck(fn("x^(3a)", 0, 2), 0, 2, AlphaContext(0.3));
  CHECK(r3.relative_deviation <= 1e-6);
}

TEST_CASE("derivative examples") {
  const FunctionSpec sq = fn("x^(2a)", 0, 5);
  CHECK(lf_derivative(sq, 3.0, AlphaContext(1.0), DerivativeMode::exact_monomial).value() == 6.0);
  CHECK(lf_derivative(sq, 3.0, AlphaContext(1.0), DerivativeMode::finite_difference).value() ==
        doctest::Approx(6.0).epsilon(1e-5));
  for (const double al : gen::test_alphas()) {
    const AlphaContext ctx(al);
    CHECK(oracle::rel_close(lf_derivative(fn("x^(a)", 0, 5), 1.7, ctx, DerivativeMode::exact_monomial).value(),
                            oracle::gamma(1 + al), 1e-14));
    CHECK(lf_derivative(fn("4", 0, 5), 1.7, ctx, DerivativeMode::exact_monomial).value() == 0.0);
    CHECK(lf_derivative(fn("4", 0, 5), 1.7, ctx, DerivativeMode::finite_difference).value() == 0.0);
  }
}

TEST_CASE("finite-difference step") {
  CHECK(finite_difference_step(1.0) == doctest::Approx(1e-6));
  CHECK(finite_difference_step(0.5) == doctest::Approx(1e-12));
  CHECK(finite_difference_step(0.3) == 1e-12);
}

TEST_CASE("finite difference agrees with the term rule only at alpha = 1") {
  for (int k = 1; k <= 3; ++k) {
    const FunctionSpec f = fn(monomial(k, 0.0), 0, 5);
    for (const double x0 : {0.5, 1.0, 2.0}) {
      const double ex = lf_derivative(f, x0, AlphaContext(1.0), DerivativeMode::exact_monomial).value();
      const double fd = lf_derivative(f, x0, AlphaContext(1.0), DerivativeMode::finite_difference).value();
      CHECK(oracle::rel_close(fd, ex, 1e-4));
      CHECK(oracle::rel_close(ex, oracle::monomial_derivative(k, 1.0, x0), 1e-14));
    }
  }
  // For alpha < 1 the difference quotient of a classically smooth function
  // vanishes like h^(1-alpha) away from the base point, while the term rule
  // stays finite: the two definitions disagree there.
  for (const double al : {0.3, 0.5, 0.9}) {
    const AlphaContext ctx(al);
    for (int k = 1; k <= 3; ++k) {
      const FunctionSpec f = fn(monomial(k, 0.0), 0, 5);
      const double ex = lf_derivative(f, 1.0, ctx, DerivativeMode::exact_monomial).value();
      const double fd = lf_derivative(f, 1.0, ctx, DerivativeMode::finite_difference).value();
      CAPTURE(al);
      CAPTURE(k);
      CHECK(oracle::rel_close(ex, oracle::monomial_derivative(k, al, 1.0), 1e-13));
      const double h = finite_difference_step(al);
      const double predicted = oracle::gamma(1 + al) * k * al * std::pow(h, 1 - al);
      // the step is tiny, so cancellation limits agreement with the prediction
      CHECK(oracle::rel_close(fd, predicted, 1e-2));
      CHECK(std::fabs(fd - ex) > 0.5 * std::fabs(ex));
    }
  }
}

TEST_CASE("derivative preconditions") {
  const FunctionSpec f = fn("x^(2a)", 1, 2);
  CHECK_THROWS_AS(lf_derivative(f, 0.5, AlphaContext(0.5), DerivativeMode::exact_monomial), PreconditionError);
  CHECK_THROWS_AS(lf_derivative(fn("abs(x - 0.5)", 0, 1), 0.7, AlphaContext(0.5), DerivativeMode::exact_monomial),
                  NotPolynomialError);
  CHECK_THROWS_AS(lf_derivative(fn("x", 0, 1e30), 1e20, AlphaContext(0.5), DerivativeMode::finite_difference),
                  StepUnderflow);
}
