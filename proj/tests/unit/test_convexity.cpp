#include <doctest.h>

#include "generators.hpp"

#include <fracon/convexity.hpp>
#include <fracon/errors.hpp>

#include <cmath>
#include <string>

using namespace fracon;

namespace {

FunctionSpec fn(const std::string& text, double lo, double hi, double c = 0.0) {
  return {Expr::parse(text, 1, {{"c", c}}), Interval(lo, hi)};
}

EtaSpec eta(const std::string& text) { return EtaSpec(Expr::parse(text, 2)); }

double mag(double v, double al) { return std::copysign(std::pow(std::fabs(v), al), v); }

} // namespace

TEST_CASE("defect examples") {
  const AlphaContext one(1.0);
  const DefectParts p = defect_parts(fn("x^(2a)", 0, 1), eta("u - v"), 0.0, one, 0, 1, 0.5);
  CHECK(p.lhs == 0.25);
  CHECK(p.rhs == 0.5);
  CHECK(p.defect() == 0.25);
  CHECK(defect(fn("-x^(2a)", 0, 1), eta("u - v"), 1.0, one, 0, 1, 0.5) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("algebraic identities") {
  gen::Gen g(3);
  const char* fs[] = {"x^(2a)", "-x^(2a)", "abs(x - 0.3) + x^(a)", "1"};
  const char* etas[] = {"u - v", "2^a*u + v", "u*v + 1"};
  for (const double al : gen::test_alphas()) {
    const AlphaContext ctx(al);
    for (const char* ft : fs) {
      const FunctionSpec f = fn(ft, 0, 2);
      for (const char* et : etas) {
        const EtaSpec e = eta(et);
        for (int i = 0; i < 20; ++i) {
          const double x = g.uniform(0, 2);
          const double y = g.uniform(0, 2);
          const double c = g.uniform(0, 2);
          CHECK(defect(f, e, c, ctx, x, y, 0.0) == 0.0);
          const double t = g.uniform(0, 1);
          const double fx = f(x, al);
          CHECK(defect(f, e, c, ctx, x, x, t) == doctest::Approx(mag(t, al) * e(fx, fx, al)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("reduction lattice") {
  gen::Gen g(11);
  const FunctionSpec f = fn("x^(2a) + abs(x - 0.7)", 0, 2);
  const EtaSpec e = eta("2^a*u + v");
  const EtaSpec diff = eta("u - v");
  for (int i = 0; i < 200; ++i) {
    const double x = g.uniform(0, 2);
    const double y = g.uniform(0, 2);
    const double t = g.uniform(0, 1);
    const double c = g.uniform(0, 3);
    const double z = t * x + (1 - t) * y;

    // alpha = 1: classical strongly eta-convex defect
    {
      const double fx = f(x, 1), fy = f(y, 1);
      const double want = fy + t * e(fx, fy, 1) - c * t * (1 - t) * (x - y) * (x - y) - f(z, 1);
      CHECK(std::fabs(defect(f, e, c, AlphaContext(1), x, y, t) - want) <= 1e-12 * (1 + std::fabs(want)));
    }
    for (const double al : gen::test_alphas()) {
      const AlphaContext ctx(al);
      const double fx = f(x, al), fy = f(y, al);
      // c = 0: generalized eta-convex defect
      const double eta_only = fy + mag(t, al) * e(fx, fy, al) - f(z, al);
      CHECK(std::fabs(defect(f, e, 0.0, ctx, x, y, t) - eta_only) <= 1e-12 * (1 + std::fabs(eta_only)));
      // eta = u - v: generalized strongly convex defect
      const double strong = fy + mag(t, al) * (fx - fy) -
                            std::pow(c, al) * std::pow(t * (1 - t), al) * std::pow((x - y) * (x - y), al) - f(z, al);
      CHECK(std::fabs(defect(f, diff, c, ctx, x, y, t) - strong) <= 1e-12 * (1 + std::fabs(strong)));
    }
  }
}

TEST_CASE("certify: x^(2a) + c^a x^(2a) with eta = 2^a u + v has no violation") {
  for (const double al : {0.5, 1.0}) {
    for (const double c : {0.5, 1.0, 2.0}) {
      CAPTURE(al);
      CAPTURE(c);
      const ConvexityReport r =
          certify_gsc(fn("x^(2a) + c^(a)*x^(2a)", 0, 2, c), eta("2^a*u + v"), c, AlphaContext(al), 20, 2);
      CHECK(r.status == ConvexityStatus::no_violation_found);
      CHECK(r.min_defect >= -1e-9);
      CHECK_FALSE(r.witness);
    }
  }
}

TEST_CASE("certify: classical convexity") {
  const ConvexityReport r = certify_gsc(fn("x^(2a)", -1, 1), eta("u - v"), 0.0, AlphaContext(1.0), 20, 2);
  CHECK(r.status == ConvexityStatus::no_violation_found);
  CHECK(r.necessary.holds());
  CHECK(r.refinement_levels == 2);
  CHECK(r.evaluations > 20u * 20u * 20u);
}

TEST_CASE("certify: concave function is caught with a self-validating witness") {
  const FunctionSpec f = fn("-x^(2a)", 0, 1);
  const EtaSpec e = eta("u - v");
  const AlphaContext one(1.0);
  const ConvexityReport r = certify_gsc(f, e, 1.0, one, 20, 3);
  REQUIRE(r.status == ConvexityStatus::violated);
  REQUIRE(r.witness);
  const Counterexample& w = *r.witness;
  CHECK(w.defect <= -0.4);
  CHECK(w.defect == r.min_defect);
  CHECK(defect(f, e, 1.0, one, w.x, w.y, w.t) == w.defect);
  CHECK(w.defect == w.rhs.value() - w.lhs.value());
  CHECK(w.defect < -r.tolerance);
  CHECK(std::fabs(w.t - 0.5) < 0.1);
  CHECK(std::min(w.x, w.y) == doctest::Approx(0.0));
  CHECK(std::max(w.x, w.y) == doctest::Approx(1.0));
}

TEST_CASE("certify is deterministic") {
  const FunctionSpec f = fn("abs(x - 0.4)^(1.5) - x^(a)", 0, 1);
  const EtaSpec e = eta("u - v");
  const auto a = certify_gsc(f, e, 0.3, AlphaContext(0.7), 12, 2);
  const auto b = certify_gsc(f, e, 0.3, AlphaContext(0.7), 12, 2);
  CHECK(a.min_defect == b.min_defect);
  CHECK(a.argmin_x == b.argmin_x);
  CHECK(a.argmin_y == b.argmin_y);
  CHECK(a.argmin_t == b.argmin_t);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.status == b.status);
}

TEST_CASE("a larger eta keeps a certified function certified") {
  // Under magnitude semantics x^(2a) is only strongly convex in this sense at alpha = 1.
  const FunctionSpec f = fn("x^(2a)", 0, 1);
  CHECK(certify_gsc(f, eta("u - v"), 0.0, AlphaContext(0.5), 12, 1).status == ConvexityStatus::violated);
  for (const double c : {0.0, 0.5}) {
    const AlphaContext ctx(1.0);
    const auto base = certify_gsc(f, eta("u - v"), c, ctx, 12, 1);
    REQUIRE(base.status == ConvexityStatus::no_violation_found);
    const auto wider = certify_gsc(f, eta("u - v + 0.5"), c, ctx, 12, 1);
    CHECK(wider.status == ConvexityStatus::no_violation_found);
  }
}

TEST_CASE("certify preconditions") {
  CHECK_THROWS_AS(certify_gsc(fn("x", 0, 1), eta("u - v"), 0, AlphaContext(1), 7, 1), PreconditionError);
  CHECK_THROWS_AS(certify_gsc(fn("x", 0, 1), eta("u - v"), 0, AlphaContext(1), 8, -1), PreconditionError);
}

TEST_CASE("necessary conditions") {
  const AlphaContext half(0.5);
  const auto diff = check_eta_necessary(fn("abs(x - 0.5)", 0, 1), eta("u - v"), half, 20);
  CHECK(diff.diagonal.holds);
  CHECK(diff.difference.holds);

  const auto ex = check_eta_necessary(fn("x^(2a)", 0, 2), eta("2^a*u + v"), half, 20);
  CHECK(ex.holds());

  const auto neg = check_eta_necessary(fn("x^(2a)", 0, 1), eta("-1"), half, 20);
  CHECK_FALSE(neg.diagonal.holds);
  CHECK(neg.diagonal.worst_margin == doctest::Approx(-1.0));

  const auto r = certify_gsc(fn("x^(2a)", 0, 1), eta("-1"), 0.0, half, 10, 1);
  CHECK(r.short_circuited);
  CHECK(r.status == ConvexityStatus::violated);
  REQUIRE(r.witness);
  CHECK(defect(fn("x^(2a)", 0, 1), eta("-1"), 0.0, half, r.witness->x, r.witness->y, r.witness->t) ==
        r.witness->defect);
}

TEST_CASE("weight symmetry") {
  const AlphaContext half(0.5);
  CHECK(check_symmetry(WeightSpec(Expr::parse("1", 1), Interval(0, 1)), 0, 1, half, 201).holds);
  CHECK(check_symmetry(WeightSpec(Expr::parse("(x - 0.5)^(a)*(3 - x)^(a)", 1), Interval(0.5, 3)), 0.5, 3, half, 201)
            .holds);
  const SymmetryReport s = check_symmetry(WeightSpec(Expr::parse("x", 1), Interval(0, 1)), 0, 1, half, 201);
  CHECK_FALSE(s.holds);
  CHECK(s.max_asymmetry == 1.0);
  CHECK(s.worst_x == 0.0);
  const SymmetryReport neg = check_symmetry(WeightSpec(Expr::parse("-1", 1), Interval(0, 1)), 0, 1, half, 201);
  CHECK(neg.max_asymmetry == 0.0);
  CHECK_FALSE(neg.nonnegative);
  CHECK_FALSE(neg.holds);
}

TEST_CASE("eta supremum estimate") {
  const AlphaContext one(1.0);
  CHECK(estimate_eta_sup(fn("x^(2a)", 0, 1), eta("u - v"), one, 50) == 1.0);
  CHECK(estimate_eta_sup(fn("x^(2a)", 0, 1), eta("0"), one, 50) == 0.0);
  CHECK(estimate_eta_sup(fn("x^(2a)", 0, 1), eta("2^a*u + v"), one, 50) == 3.0);
}

TEST_CASE("minimum condition") {
  const AlphaContext one(1.0);
  const auto r = minimum_condition_check(fn("x^(2a)", 0, 2), eta("u - v"), 1.0, one, 200);
  CHECK(r.holds());
  CHECK(r.argmin == 0.0);
  CHECK(r.points_checked == 200);
  CHECK(r.exact_derivative);
  const auto shifted = minimum_condition_check(fn("x^(2a) + 1", 0, 2), eta("u - v"), 1.0, one, 200);
  CHECK(shifted.holds());
  CHECK(shifted.f_min == 1.0);
  CHECK(minimum_condition_check(fn("x^(2a)", 0, 2), eta("u - v"), 0.0, one, 200).holds());
  // c too large: eta(f(y), f(0)) = y^2 < 2 y^2.
  const auto tight = minimum_condition_check(fn("x^(2a)", 0, 2), eta("u - v"), 2.0, one, 200);
  CHECK_FALSE(tight.holds());
  const auto rough = minimum_condition_check(fn("abs(x - 0.75)", 0, 2), eta("u - v"), 0.0, one, 200);
  CHECK_FALSE(rough.exact_derivative);
}
