#include "fracon/convexity.hpp"

#include "fracon/calculus.hpp"
#include "fracon/errors.hpp"
#include "fracon/gamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fracon {

namespace {

// Shared by the lattice scan and defect_parts so witnesses re-evaluate bit-for-bit.
inline double assemble_rhs(double fy, double t_pow, double eta_xy, double c_pow, double one_minus_t_pow,
                           double dist_pow) {
  return fy + t_pow * eta_xy - c_pow * t_pow * one_minus_t_pow * dist_pow;
}

inline double convex_point(double x, double y, double t) { return t == 1.0 ? x : y + t * (x - y); }

double violation_tolerance(const std::vector<double>& fvals) {
  double max_abs = 0.0;
  for (const double v : fvals) {
    max_abs = std::max(max_abs, std::fabs(v));
  }
  return 1e-9 * (1.0 + max_abs);
}

std::vector<double> sample(const FunctionSpec& f, const std::vector<double>& xs, double alpha) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const double x : xs) {
    out.push_back(f(x, alpha));
  }
  return out;
}

void require_grid(int grid_n) {
  if (grid_n < 8) {
    throw PreconditionError("grid_n must be at least 8");
  }
}

NecessaryConditions necessary_on_grid(const std::vector<double>& xs, const std::vector<double>& fvals,
                                      const EtaSpec& eta, double alpha, double tol) {
  NecessaryConditions out;
  out.tolerance = tol;
  bool first_diag = true;
  bool first_diff = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double diag = eta(fvals[i], fvals[i], alpha);
    if (first_diag || diag < out.diagonal.worst_margin) {
      out.diagonal.worst_margin = diag;
      out.diagonal.worst_x = xs[i];
      out.diagonal.worst_y = xs[i];
      first_diag = false;
    }
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const double margin = eta(fvals[i], fvals[j], alpha) - (fvals[i] - fvals[j]);
      if (first_diff || margin < out.difference.worst_margin) {
        out.difference.worst_margin = margin;
        out.difference.worst_x = xs[i];
        out.difference.worst_y = xs[j];
        first_diff = false;
      }
    }
  }
  out.diagonal.holds = out.diagonal.worst_margin >= -tol;
  out.difference.holds = out.difference.worst_margin >= -tol;
  return out;
}

Counterexample make_counterexample(const FunctionSpec& f, const EtaSpec& eta, double c, const AlphaContext& ctx,
                                   double x, double y, double t) {
  const DefectParts parts = defect_parts(f, eta, c, ctx, x, y, t);
  return {x, y, t, FractalScalar(parts.lhs, ctx.alpha()), FractalScalar(parts.rhs, ctx.alpha()), parts.defect()};
}

} // namespace

const char* to_string(ConvexityStatus s) noexcept {
  return s == ConvexityStatus::violated ? "Violated" : "NoViolationFound";
}

DefectParts defect_parts(const FunctionSpec& f, const EtaSpec& eta, double c, const AlphaContext& ctx,
                         double x, double y, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw PreconditionError("t must lie in [0, 1]");
  }
  if (!(c >= 0.0)) {
    throw PreconditionError("modulus c must be nonnegative");
  }
  const double alpha = ctx.alpha();
  const double fx = f(x, alpha);
  const double fy = f(y, alpha);
  const double d = x - y;
  DefectParts parts;
  parts.rhs = assemble_rhs(fy, embed_value(t, alpha), eta(fx, fy, alpha), embed_value(c, alpha),
                           embed_value(1.0 - t, alpha), embed_value(d * d, alpha));
  parts.lhs = f(convex_point(x, y, t), alpha);
  return parts;
}

double defect(const FunctionSpec& f, const EtaSpec& eta, double c, const AlphaContext& ctx, double x, double y,
              double t) {
  return defect_parts(f, eta, c, ctx, x, y, t).defect();
}

NecessaryConditions check_eta_necessary(const FunctionSpec& f, const EtaSpec& eta, const AlphaContext& ctx,
                                        int grid_n) {
  require_grid(grid_n);
  const auto xs = f.domain().grid(grid_n);
  const auto fvals = sample(f, xs, ctx.alpha());
  return necessary_on_grid(xs, fvals, eta, ctx.alpha(), violation_tolerance(fvals));
}

ConvexityReport certify_gsc(const FunctionSpec& f, const EtaSpec& eta, double c, const AlphaContext& ctx,
                            int grid_n, int refine_depth) {
  require_grid(grid_n);
  if (refine_depth < 0) {
    throw PreconditionError("refine_depth must be nonnegative");
  }
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw PreconditionError("modulus c must be finite and nonnegative");
  }
  const double alpha = ctx.alpha();
  const Interval& dom = f.domain();
  const auto xs = dom.grid(grid_n);
  const auto ts = Interval(0.0, 1.0).grid(grid_n);
  const auto fvals = sample(f, xs, alpha);

  ConvexityReport report;
  report.grid_n = grid_n;
  report.refine_depth = refine_depth;
  report.tolerance = violation_tolerance(fvals);
  report.necessary = necessary_on_grid(xs, fvals, eta, alpha, report.tolerance);

  if (!report.necessary.holds()) {
    const bool diag = !report.necessary.diagonal.holds;
    const NecessaryCondition& failed = diag ? report.necessary.diagonal : report.necessary.difference;
    Counterexample w = make_counterexample(f, eta, c, ctx, failed.worst_x, failed.worst_y, 1.0);
    report.short_circuited = true;
    report.evaluations = 1;
    report.min_defect = w.defect;
    report.argmin_x = w.x;
    report.argmin_y = w.y;
    report.argmin_t = w.t;
    if (w.defect < -report.tolerance) {
      report.status = ConvexityStatus::violated;
      report.witness = w;
    }
    return report;
  }

  const std::size_t n = xs.size();
  const double c_pow = embed_value(c, alpha);
  std::vector<double> t_pow(n);
  std::vector<double> one_minus_t_pow(n);
  for (std::size_t k = 0; k < n; ++k) {
    t_pow[k] = embed_value(ts[k], alpha);
    one_minus_t_pow[k] = embed_value(1.0 - ts[k], alpha);
  }
  std::vector<double> eta_table(n * n);
  std::vector<double> dist_table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      eta_table[i * n + j] = eta(fvals[i], fvals[j], alpha);
      const double d = xs[i] - xs[j];
      dist_table[i * n + j] = embed_value(d * d, alpha);
    }
  }

  double best = 0.0;
  std::array<double, 3> best_point{xs[0], xs[0], ts[0]};
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double eta_xy = eta_table[i * n + j];
      const double dist = dist_table[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        const double rhs = assemble_rhs(fvals[j], t_pow[k], eta_xy, c_pow, one_minus_t_pow[k], dist);
        const double lhs = f(convex_point(xs[i], xs[j], ts[k]), alpha);
        const double d = rhs - lhs;
        if (first || d < best) {
          best = d;
          best_point = {xs[i], xs[j], ts[k]};
          first = false;
        }
      }
    }
  }
  report.evaluations = n * n * n;

  double hx = dom.width() / (grid_n - 1);
  double ht = 1.0 / (grid_n - 1);
  for (int level = 0; level < refine_depth; ++level) {
    const std::array<double, 3> center = best_point;
    const double sx = hx / 3.0;
    const double st = ht / 3.0;
    for (int i = -3; i <= 3; ++i) {
      const double x = std::clamp(center[0] + i * sx, dom.lo, dom.hi);
      for (int j = -3; j <= 3; ++j) {
        const double y = std::clamp(center[1] + j * sx, dom.lo, dom.hi);
        for (int k = -3; k <= 3; ++k) {
          const double t = std::clamp(center[2] + k * st, 0.0, 1.0);
          const double d = defect(f, eta, c, ctx, x, y, t);
          ++report.evaluations;
          if (d < best) {
            best = d;
            best_point = {x, y, t};
          }
        }
      }
    }
    hx = sx;
    ht = st;
    ++report.refinement_levels;
  }

  report.min_defect = best;
  report.argmin_x = best_point[0];
  report.argmin_y = best_point[1];
  report.argmin_t = best_point[2];
  if (best < -report.tolerance) {
    report.status = ConvexityStatus::violated;
    report.witness = make_counterexample(f, eta, c, ctx, best_point[0], best_point[1], best_point[2]);
  }
  return report;
}

SymmetryReport check_symmetry(const WeightSpec& w, double a, double b, const AlphaContext& ctx, int grid_n) {
  const Interval dom(a, b);
  const auto xs = dom.grid(std::max(grid_n, 2));
  const double alpha = ctx.alpha();
  SymmetryReport report;
  double max_abs = 0.0;
  bool first = true;
  for (const double x : xs) {
    const double wx = w(x, alpha);
    const double mirrored = w(a + b - x, alpha);
    max_abs = std::max(max_abs, std::fabs(wx));
    if (first || wx < report.min_weight) {
      report.min_weight = wx;
      first = false;
    }
    const double asym = std::fabs(wx - mirrored);
    if (asym > report.max_asymmetry) {
      report.max_asymmetry = asym;
      report.worst_x = x;
    }
  }
  report.tolerance = 1e-10 * (1.0 + max_abs);
  report.nonnegative = report.min_weight >= 0.0;
  report.holds = report.nonnegative && report.max_asymmetry <= report.tolerance;
  return report;
}

double estimate_eta_sup(const FunctionSpec& f, const EtaSpec& eta, const AlphaContext& ctx, int grid_n) {
  require_grid(grid_n);
  const double alpha = ctx.alpha();
  const auto fvals = sample(f, f.domain().grid(grid_n), alpha);
  double sup = eta(fvals[0], fvals[0], alpha);
  for (const double p : fvals) {
    for (const double q : fvals) {
      sup = std::max(sup, eta(p, q, alpha));
    }
  }
  return sup;
}

MinimumConditionReport minimum_condition_check(const FunctionSpec& f, const EtaSpec& eta, double c,
                                               const AlphaContext& ctx, int grid_n) {
  require_grid(grid_n);
  const double alpha = ctx.alpha();
  const Interval& dom = f.domain();
  const auto xs = dom.grid(grid_n);
  const auto fvals = sample(f, xs, alpha);

  MinimumConditionReport report;
  const auto min_it = std::min_element(fvals.begin(), fvals.end());
  report.argmin = xs[static_cast<std::size_t>(min_it - fvals.begin())];
  report.f_min = *min_it;
  double h = dom.width() / (grid_n - 1);
  for (int level = 0; level < 30; ++level) {
    const double center = report.argmin;
    const double step = h / 3.0;
    for (int i = -3; i <= 3; ++i) {
      const double x = std::clamp(center + i * step, dom.lo, dom.hi);
      const double fx = f(x, alpha);
      if (fx < report.f_min) {
        report.f_min = fx;
        report.argmin = x;
      }
    }
    h = step;
  }

  const double xstar = report.argmin;
  if (f.gpoly(dom.lo, ctx)) {
    report.derivative = lf_derivative(f, xstar, ctx, DerivativeMode::exact_monomial).value();
    report.exact_derivative = true;
  } else {
    report.derivative = lf_derivative(f, xstar, ctx, DerivativeMode::finite_difference).value();
  }

  const double g = gamma(1.0 + alpha);
  const double c_pow = embed_value(c, alpha);
  for (const double y : xs) {
    ++report.points_checked;
    const double d = y - xstar;
    const double antecedent = report.derivative * embed_value(d, alpha) / g;
    if (antecedent < -1e-12) {
      continue;
    }
    ++report.antecedent_held;
    const double eta_value = eta(f(y, alpha), report.f_min, alpha);
    const double bound = c_pow * embed_value(d * d, alpha);
    if (eta_value < bound - 1e-9) {
      report.violations.push_back({y, antecedent, eta_value, bound});
    }
  }
  return report;
}

} // namespace fracon
