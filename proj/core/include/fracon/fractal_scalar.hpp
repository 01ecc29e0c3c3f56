#pragma once

#include <compare>

namespace fracon {

/// Fractal order alpha, validated to lie in (0, 1].
class AlphaContext {
public:
  explicit AlphaContext(double alpha);

  double alpha() const noexcept { return alpha_; }

private:
  double alpha_;
};

/// sign(a) * |a|^alpha. Odd, strictly increasing, exact at 0 and +-1.
double embed_value(double a, double alpha) noexcept;

/// Element of R^alpha under magnitude semantics: the real number
/// sign(a)|a|^alpha tagged with alpha. Arithmetic is ordinary real
/// arithmetic on the value; operands must carry identical tags.
///
/// This is the carrier of every analytic computation (integrals, defects,
/// inequality terms). It does NOT satisfy a^alpha + b^alpha = (a+b)^alpha
/// for alpha < 1; IsoFractal does.
class FractalScalar {
public:
  /// Throws EvalError if value is not finite, DomainError for a bad tag.
  FractalScalar(double value, double alpha);

  double value() const noexcept { return value_; }
  double alpha() const noexcept { return alpha_; }

  FractalScalar operator-() const { return {-value_, alpha_}; }

  friend FractalScalar operator+(const FractalScalar& a, const FractalScalar& b);
  friend FractalScalar operator-(const FractalScalar& a, const FractalScalar& b);
  friend FractalScalar operator*(const FractalScalar& a, const FractalScalar& b);

  /// Total order by value. Throws TagMismatch on different tags.
  friend std::weak_ordering operator<=>(const FractalScalar& a, const FractalScalar& b);
  friend bool operator==(const FractalScalar& a, const FractalScalar& b) noexcept {
    return a.value_ == b.value_ && a.alpha_ == b.alpha_;
  }

private:
  double value_;
  double alpha_;
};

/// Embeds the real a as a^alpha under magnitude semantics.
FractalScalar embed(double a, const AlphaContext& ctx);

/// Element a^alpha of R^alpha under base-value semantics: stores a itself.
/// Addition and multiplication act on bases, so the seven field properties
/// of R^alpha hold exactly (up to floating-point rounding of the bases).
class IsoFractal {
public:
  IsoFractal(double base, double alpha);

  double base() const noexcept { return base_; }
  double alpha() const noexcept { return alpha_; }

  /// Magnitude of this element, sign(base)|base|^alpha.
  double magnitude() const noexcept { return embed_value(base_, alpha_); }

  IsoFractal operator-() const { return {-base_, alpha_}; }

  friend IsoFractal operator+(const IsoFractal& a, const IsoFractal& b);
  friend IsoFractal operator-(const IsoFractal& a, const IsoFractal& b);
  friend IsoFractal operator*(const IsoFractal& a, const IsoFractal& b);

  friend bool operator==(const IsoFractal& a, const IsoFractal& b) noexcept {
    return a.base_ == b.base_ && a.alpha_ == b.alpha_;
  }

private:
  double base_;
  double alpha_;
};

} // namespace fracon
