#include "fracon/calculus.hpp"

#include "fracon/errors.hpp"
#include "fracon/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracon {

namespace {

GPoly require_gpoly(const FunctionSpec& f, double s, const AlphaContext& ctx) {
  auto p = f.gpoly(s, ctx);
  if (!p) {
    std::ostringstream msg;
    msg << "'" << f.expr().to_string() << "' has no alpha-monomial normal form about " << s;
    throw NotPolynomialError(msg.str());
  }
  return std::move(*p);
}

void require_finite_endpoints(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw PreconditionError("integration endpoints must be finite");
  }
}

} // namespace

const char* to_string(BackendKind kind) noexcept {
  return kind == BackendKind::exact_monomial ? "exact" : "rl";
}

const char* to_string(DerivativeMode mode) noexcept {
  return mode == DerivativeMode::exact_monomial ? "exact" : "fd";
}

IntegralBackend choose_backend(const FunctionSpec& f, double s, const AlphaContext& ctx,
                               const QuadratureSettings& settings) {
  if (f.gpoly(s, ctx)) {
    return {BackendKind::exact_monomial, settings};
  }
  return IntegralBackend::numeric(settings);
}

double monomial_integral(int k, double width, double alpha) {
  return gamma(1.0 + k * alpha) / gamma(1.0 + (k + 1) * alpha) * std::pow(width, (k + 1) * alpha);
}

FractalScalar lf_integral(const GPoly& p, double a, double b) {
  require_finite_endpoints(a, b);
  if (a == b) {
    return {0.0, p.alpha()};
  }
  if (a > b || p.base_point() != a) {
    throw PreconditionError("exact integration needs a < b and a GPoly about a");
  }
  const double width = b - a;
  double sum = 0.0;
  for (const auto& [k, c] : p.terms()) {
    sum += c * monomial_integral(k, width, p.alpha());
  }
  return {sum, p.alpha()};
}

IntegralResult lf_integral_numeric(const std::function<double(double)>& f, double a, double b,
                                   const AlphaContext& ctx, const QuadratureSettings& settings) {
  require_finite_endpoints(a, b);
  const double alpha = ctx.alpha();
  if (a == b) {
    return {FractalScalar(0.0, alpha), BackendKind::numeric_rl, 0, true};
  }
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double sign = a < b ? 1.0 : -1.0;
  const double inv_alpha = 1.0 / alpha;
  const double top = std::pow(hi - lo, alpha);

  const auto integrand = [&](double v) {
    const double x = std::max(lo, hi - (alpha == 1.0 ? v : std::pow(v, inv_alpha)));
    return f(x);
  };
  const QuadratureResult q = integrate_graded(integrand, 0.0, top, settings);
  const double value = sign * q.value / gamma(1.0 + alpha);
  return {FractalScalar(value, alpha), BackendKind::numeric_rl, q.evaluations, q.converged};
}

IntegralResult lf_integral_detailed(const FunctionSpec& f, double a, double b, const AlphaContext& ctx,
                                    const IntegralBackend& backend) {
  require_finite_endpoints(a, b);
  const double alpha = ctx.alpha();
  if (a == b) {
    return {FractalScalar(0.0, alpha), backend.kind, 0, true};
  }
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double sign = a < b ? 1.0 : -1.0;

  if (backend.kind == BackendKind::exact_monomial) {
    const GPoly p = require_gpoly(f, lo, ctx);
    const FractalScalar v = lf_integral(p, lo, hi);
    return {FractalScalar(sign * v.value(), alpha), BackendKind::exact_monomial, 0, true};
  }
  return lf_integral_numeric([&](double x) { return f(x, alpha); }, a, b, ctx, backend.quadrature);
}

FractalScalar lf_integral(const FunctionSpec& f, double a, double b, const AlphaContext& ctx,
                          const IntegralBackend& backend) {
  return lf_integral_detailed(f, a, b, ctx, backend).value;
}

FractalScalar lf_integral_changed(const FunctionSpec& f, double a, double b, const AlphaContext& ctx,
                                  const IntegralBackend& backend) {
  require_finite_endpoints(a, b);
  const double alpha = ctx.alpha();
  if (a == b) {
    return {0.0, alpha};
  }
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double sign = a < b ? 1.0 : -1.0;
  const double width = hi - lo;

  double unit = 0.0;
  if (backend.kind == BackendKind::exact_monomial) {
    const GPoly g = require_gpoly(f, lo, ctx).rescaled(width);
    unit = lf_integral(g, 0.0, 1.0).value();
  } else {
    unit = lf_integral_numeric([&](double t) { return f(lo + t * width, alpha); }, 0.0, 1.0, ctx,
                               backend.quadrature)
               .value.value();
  }
  return {sign * embed_value(width, alpha) * unit, alpha};
}

double finite_difference_step(double alpha) noexcept {
  return std::clamp(std::pow(1e-6, 1.0 / alpha), 1e-12, 1e-3);
}

FractalScalar lf_derivative(const FunctionSpec& f, double x0, const AlphaContext& ctx, DerivativeMode mode) {
  const double alpha = ctx.alpha();
  if (!std::isfinite(x0)) {
    throw PreconditionError("derivative point must be finite");
  }
  if (mode == DerivativeMode::exact_monomial) {
    const double s = f.domain().lo;
    if (x0 < s) {
      throw PreconditionError("exact derivative needs x0 >= the normal-form base point");
    }
    const GPoly d = require_gpoly(f, s, ctx).derivative();
    return {d(x0), alpha};
  }
  const double step = finite_difference_step(alpha);
  const double shifted = x0 + step;
  const double h = shifted - x0;
  if (h == 0.0) {
    std::ostringstream msg;
    msg << "finite-difference step " << step << " vanishes at x0 = " << x0;
    throw StepUnderflow(msg.str());
  }
  const double diff = f(shifted, alpha) - f(x0, alpha);
  return {gamma(1.0 + alpha) * diff / std::pow(h, alpha), alpha};
}

CrosscheckReport backend_crosscheck(const FunctionSpec& f, double a, double b, const AlphaContext& ctx) {
  const FractalScalar exact = lf_integral(f, a, b, ctx, IntegralBackend::exact());
  const FractalScalar numeric = lf_integral(f, a, b, ctx, IntegralBackend::numeric());
  const double diff = std::fabs(exact.value() - numeric.value());
  const double denom = std::fabs(exact.value());
  const double deviation = diff == 0.0 ? 0.0 : diff / std::max(denom, 1e-300);
  CrosscheckReport report{exact, numeric, deviation, false, 1e-6};
  report.flagged = deviation > report.threshold;
  return report;
}

} // namespace fracon
