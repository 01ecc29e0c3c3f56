#include "fracon/fractal_scalar.hpp"

#include "fracon/errors.hpp"

#include <cmath>
#include <sstream>

namespace fracon {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "alpha must lie in (0, 1], got " << alpha;
    throw DomainError(msg.str());
  }
}

void require_same_tag(double lhs, double rhs) {
  if (lhs != rhs) {
    throw TagMismatch(lhs, rhs);
  }
}

} // namespace

AlphaContext::AlphaContext(double alpha) : alpha_(alpha) { require_alpha(alpha); }

double embed_value(double a, double alpha) noexcept {
  if (alpha == 1.0 || a == 0.0) {
    return a;
  }
  const double magnitude = std::pow(std::fabs(a), alpha);
  return a < 0.0 ? -magnitude : magnitude;
}

FractalScalar::FractalScalar(double value, double alpha) : value_(value), alpha_(alpha) {
  require_alpha(alpha);
  if (!std::isfinite(value)) {
    throw EvalError("non-finite R^alpha value");
  }
}

FractalScalar operator+(const FractalScalar& a, const FractalScalar& b) {
  require_same_tag(a.alpha_, b.alpha_);
  return {a.value_ + b.value_, a.alpha_};
}

FractalScalar operator-(const FractalScalar& a, const FractalScalar& b) {
  require_same_tag(a.alpha_, b.alpha_);
  return {a.value_ - b.value_, a.alpha_};
}

FractalScalar operator*(const FractalScalar& a, const FractalScalar& b) {
  require_same_tag(a.alpha_, b.alpha_);
  return {a.value_ * b.value_, a.alpha_};
}

std::weak_ordering operator<=>(const FractalScalar& a, const FractalScalar& b) {
  require_same_tag(a.alpha_, b.alpha_);
  if (a.value_ < b.value_) {
    return std::weak_ordering::less;
  }
  if (b.value_ < a.value_) {
    return std::weak_ordering::greater;
  }
  return std::weak_ordering::equivalent;
}

FractalScalar embed(double a, const AlphaContext& ctx) {
  return {embed_value(a, ctx.alpha()), ctx.alpha()};
}

IsoFractal::IsoFractal(double base, double alpha) : base_(base), alpha_(alpha) {
  require_alpha(alpha);
  if (!std::isfinite(base)) {
    throw EvalError("non-finite IsoFractal base");
  }
}

IsoFractal operator+(const IsoFractal& a, const IsoFractal& b) {
  require_same_tag(a.alpha_, b.alpha_);
  return {a.base_ + b.base_, a.alpha_};
}

IsoFractal operator-(const IsoFractal& a, const IsoFractal& b) {
  require_same_tag(a.alpha_, b.alpha_);
  return {a.base_ - b.base_, a.alpha_};
}

IsoFractal operator*(const IsoFractal& a, const IsoFractal& b) {
  require_same_tag(a.alpha_, b.alpha_);
  return {a.base_ * b.base_, a.alpha_};
}

} // namespace fracon
