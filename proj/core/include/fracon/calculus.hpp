#pragma once

#include "fracon/fractal_scalar.hpp"
#include "fracon/function_spec.hpp"
#include "fracon/gpoly.hpp"
#include "fracon/quadrature.hpp"

#include <functional>
#include <string>

namespace fracon {

// Local fractional integral aI_b^(alpha) f and derivative D^alpha f.
//
// The integral is realized as (1/Gamma(alpha)) int_a^b (b-x)^(alpha-1) f(x) dx,
// which reproduces aI_b (x-a)^(k alpha) = Gamma(1+k alpha)/Gamma(1+(k+1)alpha) (b-a)^((k+1)alpha).
// Two backends compute it: ExactMonomial applies that rule termwise to the
// GPoly normal form about a; NumericRL integrates
//   (1/Gamma(1+alpha)) int_0^((b-a)^alpha) f(b - v^(1/alpha)) dv
// by graded composite Gauss-Legendre. Reversed endpoints negate the result.

enum class BackendKind { exact_monomial, numeric_rl };

const char* to_string(BackendKind kind) noexcept;

struct IntegralBackend {
  BackendKind kind = BackendKind::numeric_rl;
  QuadratureSettings quadrature;

  static IntegralBackend exact() { return {BackendKind::exact_monomial, {}}; }
  static IntegralBackend numeric(QuadratureSettings settings = {}) { return {BackendKind::numeric_rl, settings}; }
};

/// Exact backend when f normalizes about s, NumericRL otherwise.
IntegralBackend choose_backend(const FunctionSpec& f, double s, const AlphaContext& ctx,
                               const QuadratureSettings& settings = {});

struct IntegralResult {
  FractalScalar value;
  BackendKind backend;
  std::size_t evaluations = 0;  // 0 for the exact backend
  bool converged = true;
};

/// Term rule for one monomial: aI_b (x-a)^(k alpha).
double monomial_integral(int k, double width, double alpha);

/// Exact aI_b of a GPoly about a (requires p.base_point() == a).
FractalScalar lf_integral(const GPoly& p, double a, double b);

/// NumericRL for an arbitrary real callable.
IntegralResult lf_integral_numeric(const std::function<double(double)>& f, double a, double b,
                                   const AlphaContext& ctx, const QuadratureSettings& settings = {});

/// Throws NotPolynomialError for the exact backend when f has no normal form about min(a, b).
IntegralResult lf_integral_detailed(const FunctionSpec& f, double a, double b, const AlphaContext& ctx,
                                    const IntegralBackend& backend);

FractalScalar lf_integral(const FunctionSpec& f, double a, double b, const AlphaContext& ctx,
                          const IntegralBackend& backend);

/// Same operator through the substitution x = a + t(b-a): (b-a)^alpha * 0I_1 f(a + t(b-a)).
FractalScalar lf_integral_changed(const FunctionSpec& f, double a, double b, const AlphaContext& ctx,
                                  const IntegralBackend& backend);

enum class DerivativeMode { exact_monomial, finite_difference };

const char* to_string(DerivativeMode mode) noexcept;

/// Step used by the finite-difference derivative: (1e-6)^(1/alpha) clamped to [1e-12, 1e-3].
double finite_difference_step(double alpha) noexcept;

/// D^alpha f at x0. ExactMonomial differentiates the normal form about
/// f.domain().lo (must be <= x0) termwise; FiniteDifference returns
/// Gamma(1+alpha)(f(x0+h) - f(x0))/h^alpha.
///
/// Throws NotPolynomialError (exact mode) or StepUnderflow (x0 + h == x0).
FractalScalar lf_derivative(const FunctionSpec& f, double x0, const AlphaContext& ctx, DerivativeMode mode);

struct CrosscheckReport {
  FractalScalar exact;
  FractalScalar numeric;
  double relative_deviation = 0.0;
  bool flagged = false;  // deviation > threshold
  double threshold = 1e-6;
};

/// Compares ExactMonomial and NumericRL on [a, b]. Requires f to normalize about a.
CrosscheckReport backend_crosscheck(const FunctionSpec& f, double a, double b, const AlphaContext& ctx);

} // namespace fracon
