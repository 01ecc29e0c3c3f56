#pragma once

#include "fracon/expr.hpp"
#include "fracon/fractal_scalar.hpp"

#include <map>
#include <optional>

namespace fracon {

/// Generalized alpha-polynomial  sum_k c_k |x - s|^(k alpha)  about base point s.
///
/// The exact-integration normal form: every term integrates and
/// differentiates in closed form through Gamma ratios.
class GPoly {
public:
  using Terms = std::map<int, double>;

  /// Zero coefficients are dropped. Throws DomainError for negative keys or
  /// non-finite coefficients.
  GPoly(double base_point, const AlphaContext& ctx, Terms terms);

  double base_point() const noexcept { return base_point_; }
  double alpha() const noexcept { return alpha_; }
  const Terms& terms() const noexcept { return terms_; }

  double operator()(double x) const;

  /// Termwise D^alpha (x-s)^(k alpha) = Gamma(1+k alpha)/Gamma(1+(k-1)alpha) (x-s)^((k-1)alpha).
  GPoly derivative() const;

  /// g(t) = p(s + scale * t) as a GPoly about 0; requires scale > 0.
  GPoly rescaled(double scale) const;

  friend bool operator==(const GPoly&, const GPoly&) = default;

private:
  double base_point_;
  double alpha_;
  Terms terms_;
};

/// Alpha-monomial normal form of an arity-1 expression about s, or
/// std::nullopt (NotPolynomial) when the expression is not a sum/product of
/// constants and powers (x - s)^(k alpha). At alpha = 1 ordinary polynomials
/// in x are re-centred about s.
std::optional<GPoly> normalize(const Expr& expr, double s, const AlphaContext& ctx);

} // namespace fracon
