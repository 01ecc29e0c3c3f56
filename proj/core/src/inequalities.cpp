#include "fracon/inequalities.hpp"

#include "fracon/convexity.hpp"
#include "fracon/errors.hpp"
#include "fracon/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracon {

namespace {

constexpr double kLinkTolerance = 1e-9;

void require_interval(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw PreconditionError("inequality chains need finite a < b");
  }
}

void require_modulus(double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw PreconditionError("modulus c must be finite and nonnegative");
  }
}

} // namespace

const char* to_string(LinkStatus s) noexcept { return s == LinkStatus::holds ? "HOLDS" : "FAILS"; }

const char* to_string(MetaSource s) noexcept { return s == MetaSource::user ? "user" : "estimated"; }

Link make_link(double lhs, double rhs) {
  Link link;
  link.gap = rhs - lhs;
  link.tolerance = kLinkTolerance * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  link.status = link.gap >= -link.tolerance ? LinkStatus::holds : LinkStatus::fails;
  return link;
}

bool HHReport::all_hold() const noexcept {
  return std::all_of(links.begin(), links.end(), [](const Link& l) { return l.status == LinkStatus::holds; });
}

bool FejerReport::all_hold() const noexcept {
  return std::all_of(links.begin(), links.end(), [](const Link& l) { return l.status == LinkStatus::holds; });
}

IntegralBackend resolve_backend(const FunctionSpec& f, double a, const AlphaContext& ctx,
                                const InequalityOptions& options) {
  if (!options.backend) {
    return choose_backend(f, a, ctx, options.quadrature);
  }
  return {*options.backend, options.quadrature};
}

HHReport hh_terms(const FunctionSpec& f, const EtaSpec& eta, double c, double a, double b, const AlphaContext& ctx,
                  const InequalityOptions& options) {
  require_interval(a, b);
  require_modulus(c);
  const double al = ctx.alpha();
  const FunctionSpec on_ab(f.expr(), Interval(a, b));

  HHReport r;
  r.alpha = al;
  const double g1 = gamma(1.0 + al);
  const double g2 = gamma(1.0 + 2.0 * al);
  const double g3 = gamma(1.0 + 3.0 * al);
  r.A = g2 / g3;
  r.B = g1 / g2;

  if (options.m_eta) {
    r.m_eta = *options.m_eta;
    r.m_eta_source = MetaSource::user;
  } else {
    r.m_eta = estimate_eta_sup(on_ab, eta, ctx, options.eta_grid);
  }

  const IntegralBackend backend = resolve_backend(on_ab, a, ctx, options);
  const IntegralResult integral = lf_integral_detailed(on_ab, a, b, ctx, backend);
  r.integral = integral.value;
  r.backend = integral.backend;
  r.converged = integral.converged;

  const double width = b - a;
  const double w_a = embed_value(width, al);
  const double two_a = embed_value(2.0, al);
  const double c_a = embed_value(c, al);
  const double fa = on_ab(a, al);
  const double fb = on_ab(b, al);
  const double fm = on_ab(0.5 * (a + b), al);
  r.eta_ab = eta(fa, fb, al);
  r.eta_ba = eta(fb, fa, al);

  const double strong = c_a * embed_value(width * width, al) * (r.B - r.A);

  const double t1 = fm - r.m_eta / two_a;
  const double t2 = g1 / w_a * (r.integral.value() - embed_value(c / 4.0, al) * embed_value(width * width * width, al) * r.A);
  const double t3 = (fa + fb) / two_a + g1 * ((r.eta_ab + r.eta_ba) / two_a * r.B - strong);
  const double t4 = (fa + fb) / two_a + g1 * (r.m_eta * r.B - strong);

  r.T1 = FractalScalar(t1, al);
  r.T2 = FractalScalar(t2, al);
  r.T3 = FractalScalar(t3, al);
  r.T4 = FractalScalar(t4, al);
  r.A1 = FractalScalar(fb + r.eta_ab * g1 * r.B - g1 * strong, al);
  r.A2 = FractalScalar(fa + r.eta_ba * g1 * r.B - g1 * strong, al);
  r.links = {make_link(t1, t2), make_link(t2, t3), make_link(t3, t4)};
  return r;
}

FejerReport fejer_terms(const FunctionSpec& f, const EtaSpec& eta, double c, const WeightSpec& w, double a, double b,
                        const AlphaContext& ctx, const InequalityOptions& options) {
  require_interval(a, b);
  require_modulus(c);
  const double al = ctx.alpha();

  const SymmetryReport sym = check_symmetry(w, a, b, ctx, 201);
  if (!sym.nonnegative) {
    std::ostringstream msg;
    msg << "weight '" << w.expr().to_string() << "' is negative on [" << a << ", " << b
        << "] (minimum " << sym.min_weight << ")";
    throw PreconditionError(msg.str());
  }
  if (!sym.holds) {
    std::ostringstream msg;
    msg << "weight '" << w.expr().to_string() << "' is not symmetric about " << 0.5 * (a + b)
        << ": |w(x) - w(a+b-x)| = " << sym.max_asymmetry << " at x = " << sym.worst_x;
    throw PreconditionError(msg.str());
  }

  FejerReport r;
  r.alpha = al;
  r.max_asymmetry = sym.max_asymmetry;

  const QuadratureSettings& q = options.quadrature;
  bool converged = true;
  const auto rl = [&](const std::function<double(double)>& g) {
    const IntegralResult res = lf_integral_numeric(g, a, b, ctx, q);
    converged = converged && res.converged;
    return res.value;
  };

  r.m0 = rl([&](double x) { return w(x, al); });
  r.m1 = rl([&](double x) {
    const double d = a + b - 2.0 * x;
    return embed_value(d * d, al) * w(x, al);
  });
  r.m2 = rl([&](double x) { return embed_value(b - x, al) * w(x, al); });
  r.m3 = rl([&](double x) { return embed_value(b - x, al) * embed_value(x - a, al) * w(x, al); });

  const double two_a = embed_value(2.0, al);
  const FractalScalar l_int = rl([&](double x) { return eta(f(a + b - x, al), f(x, al), al) * w(x, al); });
  r.L_eta = FractalScalar(l_int.value() / two_a, al);

  const double fa = f(a, al);
  const double fb = f(b, al);
  const double fm = f(0.5 * (a + b), al);
  const double eta_sum = eta(fa, fb, al) + eta(fb, fa, al);
  r.R_eta = FractalScalar(eta_sum / (two_a * embed_value(b - a, al)) * r.m2.value(), al);

  const FunctionSpec fw(Expr::product(f.expr(), w.expr()), Interval(a, b));
  const IntegralBackend backend = resolve_backend(fw, a, ctx, options);
  const IntegralResult middle = lf_integral_detailed(fw, a, b, ctx, backend);
  r.backend = middle.backend;
  converged = converged && middle.converged;

  const double c_a = embed_value(c, al);
  const double f1 = fm * r.m0.value() - r.L_eta.value() + c_a / embed_value(4.0, al) * r.m1.value();
  const double f3 = (fa + fb) / two_a * r.m0.value() + r.R_eta.value() - c_a * r.m3.value();
  r.F1 = FractalScalar(f1, al);
  r.F2 = middle.value;
  r.F3 = FractalScalar(f3, al);
  r.links = {make_link(f1, r.F2.value()), make_link(r.F2.value(), f3)};
  r.converged = converged;
  return r;
}

ConsistencyReport hh_fejer_consistency(const FunctionSpec& f, const EtaSpec& eta, double c, double a, double b,
                                       const AlphaContext& ctx, const InequalityOptions& options) {
  InequalityOptions hh_opts = options;
  hh_opts.backend.reset();
  InequalityOptions fejer_opts = options;
  fejer_opts.backend = BackendKind::numeric_rl;

  const HHReport hh = hh_terms(f, eta, c, a, b, ctx, hh_opts);
  const WeightSpec one(Expr::parse("1", 1), Interval(a, b));
  const FejerReport fe = fejer_terms(f, eta, c, one, a, b, ctx, fejer_opts);

  const double al = ctx.alpha();
  const double scale = gamma(1.0 + al) / embed_value(b - a, al);
  const auto close = [](double p, double q, double tol) {
    return std::fabs(p - q) <= tol * std::max({1.0, std::fabs(p), std::fabs(q)});
  };

  ConsistencyReport r;
  r.integral_fejer = scale * fe.F2.value();
  r.integral_hh = scale * hh.integral.value();
  r.integral_agrees = close(r.integral_fejer, r.integral_hh, r.tolerance);

  r.eta_fejer = scale * fe.R_eta.value();
  r.eta_hh = gamma(1.0 + al) * (hh.eta_ab + hh.eta_ba) / embed_value(2.0, al) * hh.B;
  r.eta_agrees = close(r.eta_fejer, r.eta_hh, r.tolerance);

  r.l_eta_scaled = scale * fe.L_eta.value();
  r.m_bound = hh.m_eta / embed_value(2.0, al);
  r.bound_holds = r.l_eta_scaled <= r.m_bound + r.tolerance;
  return r;
}

} // namespace fracon
