#include "fracon/quadrature.hpp"

#include "fracon/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace fracon {

namespace {

GaussLegendreRule compute_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n starting from the Chebyshev-like guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / dp;
      z -= step;
      if (std::fabs(step) < 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

std::vector<double> breakpoints(double lo, double hi, int panels, int levels) {
  const double h = (hi - lo) / panels;
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(panels + 2 * levels + 1));
  for (int i = 0; i <= panels; ++i) {
    pts.push_back(i == panels ? hi : lo + i * h);
  }
  double step = h;
  for (int j = 1; j <= levels; ++j) {
    step *= 0.5;
    pts.push_back(lo + step);
    pts.push_back(hi - step);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

struct Pass {
  double value = 0.0;
  double abs_value = 0.0;
  std::size_t evaluations = 0;
};

Pass run_pass(const std::function<double(double)>& g, const std::vector<double>& pts,
              const GaussLegendreRule& rule) {
  Pass pass;
  for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
    const double half = 0.5 * (pts[p + 1] - pts[p]);
    const double mid = 0.5 * (pts[p + 1] + pts[p]);
    double sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + half * rule.nodes[i];
      const double y = g(x);
      if (!std::isfinite(y)) {
        std::ostringstream msg;
        msg << "non-finite integrand sample at " << x;
        throw IntegrationError(msg.str());
      }
      sum += rule.weights[i] * y;
      abs_sum += rule.weights[i] * std::fabs(y);
    }
    pass.value += half * sum;
    pass.abs_value += half * abs_sum;
    pass.evaluations += rule.nodes.size();
  }
  return pass;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int points) {
  if (points < 1) {
    throw PreconditionError("Gauss-Legendre rule needs at least one point");
  }
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  const std::lock_guard lock(mutex);
  auto it = cache.find(points);
  if (it == cache.end()) {
    it = cache.emplace(points, compute_rule(points)).first;
  }
  return it->second;
}

void QuadratureSettings::validate() const {
  if (panels < 1) {
    throw PreconditionError("quadrature needs at least one panel");
  }
  if (points != 4 && points != 8 && points != 16) {
    throw PreconditionError("quadrature points per panel must be 4, 8 or 16");
  }
  if (!(rel_tol > 0.0) || grading_levels < 0 || max_evaluations == 0) {
    throw PreconditionError("invalid quadrature tolerance, grading or budget");
  }
}

QuadratureResult integrate_graded(const std::function<double(double)>& g, double lo, double hi,
                                  const QuadratureSettings& settings) {
  settings.validate();
  QuadratureResult result;
  if (lo == hi) {
    result.converged = true;
    return result;
  }
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw PreconditionError("integrate_graded needs finite lo < hi");
  }
  const GaussLegendreRule& rule = gauss_legendre(settings.points);

  int panels = settings.panels;
  Pass previous = run_pass(g, breakpoints(lo, hi, panels, settings.grading_levels), rule);
  result.evaluations = previous.evaluations;
  result.value = previous.value;
  result.abs_value = previous.abs_value;
  result.panels = panels;

  for (;;) {
    const auto pts = breakpoints(lo, hi, 2 * panels, settings.grading_levels);
    const std::size_t cost = (pts.size() - 1) * rule.nodes.size();
    if (result.evaluations + cost > settings.max_evaluations) {
      return result;
    }
    const Pass next = run_pass(g, pts, rule);
    panels *= 2;
    result.evaluations += next.evaluations;
    result.value = next.value;
    result.abs_value = next.abs_value;
    result.panels = panels;
    const double scale = std::max(std::fabs(next.value), next.abs_value);
    if (std::fabs(next.value - previous.value) <= settings.rel_tol * scale) {
      result.converged = true;
      return result;
    }
    previous = next;
  }
}

} // namespace fracon
