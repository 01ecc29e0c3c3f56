#include <doctest.h>

#include "generators.hpp"

#include <fracon/errors.hpp>
#include <fracon/expr.hpp>

#include <cmath>
#include <string>
#include <vector>

using namespace fracon;

namespace {

std::size_t parse_error_offset(const std::string& text, int arity, const Bindings& consts = {}) {
  try {
    (void)Expr::parse(text, arity, consts);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for '" << text << "'");
  return 0;
}

const std::vector<std::string>& corpus1() {
  static const std::vector<std::string> c = {
      "x^(2a)",         "-x^(2a)",         "1",        "x^(2a) + c^(a)*x^(2a)", "(x)^(a) * (x)^(a)",
      "abs(x-0.5)^(a)", "abs(x)",          "x*x*x*x",  "3*x^(a) - 2/4 + x^(3a)", "(x-1)^(2)",
      "x^(0.5)",        "-(x + 2)*x^(a)",  "x/(1 + x^(2))", "2^a*x",             "x^(-1)"};
  return c;
}

} // namespace

TEST_CASE("parse and evaluate examples") {
  CHECK(Expr::parse("x^(2a)", 1)(3.0, 1.0) == 9.0);
  CHECK(Expr::parse("x^(2a)", 1)(2.0, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(Expr::parse("2^a*u+v", 2)(1.0, 1.0, 1.0) == 3.0);
  CHECK(Expr::parse("2^a * u + v", 2)(1.0, 1.0, 0.5) == doctest::Approx(std::sqrt(2.0) + 1.0));
  const Expr p = Expr::parse("x^(2a)", 1);
  REQUIRE(p.root().kind == NodeKind::pow);
  CHECK(p.root().exponent.alpha_multiple);
  CHECK(p.root().exponent.coefficient == 2.0);
}

TEST_CASE("syntax errors carry byte offsets") {
  CHECK(parse_error_offset("x^(1.5a", 1) == 7);
  CHECK(parse_error_offset("x +", 1) == 3);
  CHECK(parse_error_offset("x ** 2", 1) == 3);
  CHECK(parse_error_offset("", 1) == 0);
  CHECK(parse_error_offset("(x", 1) == 2);
  CHECK(parse_error_offset("x)", 1) == 1);
}

TEST_CASE("arity and binding errors") {
  CHECK(parse_error_offset("u + x", 2) == 4);
  CHECK(parse_error_offset("2*u", 1) == 2);
  CHECK(parse_error_offset("x + c", 1) == 4);
  CHECK_NOTHROW(Expr::parse("x + c", 1, {{"c", 2.0}}));
  CHECK(Expr::parse("x + c", 1, {{"c", 2.0}})(1.0, 1.0) == 3.0);
  // `a` is alpha and only legal inside an exponent.
  CHECK(parse_error_offset("x + a", 1) == 4);
}

TEST_CASE("exponent grammar: integer multiples of a only") {
  CHECK_NOTHROW(Expr::parse("x^(a)", 1));
  CHECK_NOTHROW(Expr::parse("x^(3*a)", 1));
  CHECK_NOTHROW(Expr::parse("x^(3 a)", 1));
  CHECK_NOTHROW(Expr::parse("x^(0.5)", 1));
  CHECK_THROWS_AS(Expr::parse("x^(1.5a)", 1), ParseError);
  CHECK_THROWS_AS(Expr::parse("x^(-2a)", 1), ParseError);
}

TEST_CASE("evaluation follows the embed sign convention") {
  const Expr sq = Expr::parse("x^(2a)", 1);
  const Expr one = Expr::parse("x^(a)", 1);
  const Expr lit = Expr::parse("x^(0.5)", 1);
  CHECK(sq(-2.0, 0.5) == doctest::Approx(2.0));   // (x^2)^alpha stays nonnegative
  CHECK(one(-4.0, 0.5) == doctest::Approx(-2.0));  // odd extension
  CHECK(lit(-4.0, 1.0) == doctest::Approx(-2.0));
  CHECK(Expr::parse("x^(2)", 1)(-3.0, 0.3) == 9.0);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(Expr::parse("1/x", 1)(0.0, 1.0), EvalError);
  CHECK_THROWS_AS(Expr::parse("x^(-1)", 1)(0.0, 1.0), EvalError);
  CHECK_THROWS_AS(Expr::parse("x^(200)", 1)(1e10, 1.0), EvalError);
  CHECK_NOTHROW(Expr::parse("x^(-1)", 1)(2.0, 1.0));
}

TEST_CASE("eval returns tagged FractalScalar") {
  const Expr e = Expr::parse("x^(2a)", 1);
  const double x = 3.0;
  const FractalScalar v = e.eval(std::span<const double>(&x, 1), AlphaContext(0.5));
  CHECK(v.alpha() == 0.5);
  CHECK(v.value() == doctest::Approx(3.0));
}

TEST_CASE("pretty-print round trip is a fixed point on the corpus") {
  for (const std::string& text : corpus1()) {
    CAPTURE(text);
    const Expr e = Expr::parse(text, 1, {{"c", 1.5}});
    const std::string once = e.to_string();
    const std::string twice = Expr::parse(once, 1, {{"c", 1.5}}).to_string();
    CHECK(once == twice);
    gen::Gen g(5);
    for (int i = 0; i < 20; ++i) {
      const double x = g.uniform(0.1, 3.0);
      CHECK(Expr::parse(once, 1, {{"c", 1.5}})(x, 0.7) == e(x, 0.7));
    }
  }
  CHECK(Expr::parse("x^(2a)", 1).to_string() == "x^(2a)");
  CHECK(Expr::parse("2^a*u + v", 2).to_string() == Expr::parse("2^(a) * u+v", 2).to_string());
}

TEST_CASE("product combines two expressions") {
  const Expr f = Expr::parse("x + 1", 1);
  const Expr w = Expr::parse("x^(a)", 1);
  const Expr p = Expr::product(f, w);
  CHECK(p(4.0, 0.5) == doctest::Approx(10.0));
  CHECK(Expr::parse(p.to_string(), 1)(4.0, 0.5) == p(4.0, 0.5));
}

TEST_CASE("parsing is deterministic") {
  for (const std::string& text : corpus1()) {
    CHECK(Expr::parse(text, 1, {{"c", 2.0}}).to_string() == Expr::parse(text, 1, {{"c", 2.0}}).to_string());
  }
}
