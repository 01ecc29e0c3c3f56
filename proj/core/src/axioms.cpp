#include "fracon/axioms.hpp"

#include "fracon/fractal_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace fracon {

namespace {

// Both representations are reduced to a comparable real: the base for
// IsoFractal, the magnitude value for FractalScalar.
struct IsoModel {
  double alpha;
  IsoFractal lift(double a) const { return {a, alpha}; }
  static double key(const IsoFractal& x) { return x.base(); }
  static bool tagged(const IsoFractal& x, double alpha) { return x.alpha() == alpha; }
};

struct MagnitudeModel {
  double alpha;
  FractalScalar lift(double a) const { return embed(a, AlphaContext(alpha)); }
  static double key(const FractalScalar& x) { return x.value(); }
  static bool tagged(const FractalScalar& x, double alpha) { return x.alpha() == alpha; }
};

class RowAccumulator {
public:
  RowAccumulator(int property, std::string statement, double tolerance)
      : tolerance_(tolerance) {
    row_.property = property;
    row_.statement = std::move(statement);
  }

  // |x - y| relative to max(|x|, |y|, scale); scale carries the operand
  // magnitudes so cancellation does not inflate the error.
  void compare(double x, double y, double scale, const std::array<double, 3>& bases) {
    const double denom = std::max({std::fabs(x), std::fabs(y), scale, 1e-300});
    const double err = std::fabs(x - y) / denom;
    if (!std::isfinite(err)) {
      fail(bases, std::numeric_limits<double>::infinity());
      return;
    }
    if (err > row_.max_relative_error) {
      row_.max_relative_error = err;
      if (err > tolerance_) {
        row_.holds = false;
        row_.witness = bases;
      }
    }
  }

  void fail(const std::array<double, 3>& bases, double err) {
    row_.holds = false;
    row_.max_relative_error = std::max(row_.max_relative_error, err);
    row_.witness = bases;
  }

  AxiomRow take() { return std::move(row_); }

private:
  AxiomRow row_;
  double tolerance_;
};

template <typename Model>
std::vector<AxiomRow> run(const Model& model, const AxiomOptions& options) {
  const double tol = options.relative_tolerance;
  RowAccumulator p1(1, "closure: a+b and a*b lie in R^alpha", tol);
  RowAccumulator p2(2, "a+b = b+a = (a+b)^alpha = (b+a)^alpha", tol);
  RowAccumulator p3(3, "a+(b+c) = (a+b)+c", tol);
  RowAccumulator p4(4, "a*b = b*a = (ab)^alpha = (ba)^alpha", tol);
  RowAccumulator p5(5, "a*(b*c) = (a*b)*c", tol);
  RowAccumulator p6(6, "a*(b+c) = a*b+a*c", tol);
  RowAccumulator p7(7, "a+0 = 0+a = a and a*1 = 1*a = a", tol);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> dist(-options.base_range, options.base_range);
  const auto key = [](const auto& x) { return Model::key(x); };

  for (std::size_t i = 0; i < options.trials; ++i) {
    const double ra = dist(rng);
    const double rb = dist(rng);
    const double rc = dist(rng);
    const std::array<double, 3> bases{ra, rb, rc};
    const auto a = model.lift(ra);
    const auto b = model.lift(rb);
    const auto c = model.lift(rc);
    const auto zero = model.lift(0.0);
    const auto one = model.lift(1.0);

    const auto sum = a + b;
    const auto prod = a * b;
    if (!Model::tagged(sum, model.alpha) || !Model::tagged(prod, model.alpha) ||
        !std::isfinite(key(sum)) || !std::isfinite(key(prod))) {
      p1.fail(bases, std::numeric_limits<double>::infinity());
    }

    const double add_scale = std::max(std::fabs(key(a)), std::fabs(key(b)));
    p2.compare(key(a + b), key(b + a), add_scale, bases);
    p2.compare(key(a + b), key(model.lift(ra + rb)), add_scale, bases);
    p2.compare(key(model.lift(ra + rb)), key(model.lift(rb + ra)), add_scale, bases);

    const double assoc_scale = std::max({std::fabs(key(a)), std::fabs(key(b)), std::fabs(key(c))});
    p3.compare(key(a + (b + c)), key((a + b) + c), assoc_scale, bases);

    const double mul_scale = std::fabs(key(a)) * std::fabs(key(b));
    p4.compare(key(a * b), key(b * a), mul_scale, bases);
    p4.compare(key(a * b), key(model.lift(ra * rb)), mul_scale, bases);
    p4.compare(key(model.lift(ra * rb)), key(model.lift(rb * ra)), mul_scale, bases);

    const double mul3_scale = std::fabs(key(a)) * std::fabs(key(b)) * std::fabs(key(c));
    p5.compare(key(a * (b * c)), key((a * b) * c), mul3_scale, bases);

    const double dist_scale = std::fabs(key(a)) * std::max(std::fabs(key(b)), std::fabs(key(c)));
    p6.compare(key(a * (b + c)), key(a * b + a * c), dist_scale, bases);

    p7.compare(key(a + zero), key(a), std::fabs(key(a)), bases);
    p7.compare(key(zero + a), key(a), std::fabs(key(a)), bases);
    p7.compare(key(a * one), key(a), std::fabs(key(a)), bases);
    p7.compare(key(one * a), key(a), std::fabs(key(a)), bases);
  }

  std::vector<AxiomRow> rows;
  for (auto* acc : {&p1, &p2, &p3, &p4, &p5, &p6, &p7}) {
    rows.push_back(acc->take());
  }
  return rows;
}

} // namespace

const char* to_string(Semantics s) noexcept {
  return s == Semantics::iso ? "iso" : "magnitude";
}

int AxiomTable::passed() const noexcept {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const AxiomRow& r) { return r.holds; }));
}

AxiomTable check_axioms(Semantics semantics, double alpha, const AxiomOptions& options) {
  const AlphaContext ctx(alpha);
  AxiomTable table;
  table.alpha = ctx.alpha();
  table.semantics = semantics;
  table.trials = options.trials;
  if (semantics == Semantics::iso) {
    table.rows = run(IsoModel{alpha}, options);
  } else {
    table.rows = run(MagnitudeModel{alpha}, options);
  }
  return table;
}

} // namespace fracon
