#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace fracon {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule with `points` nodes (any points >= 1; the integrator uses 4, 8 or 16).
const GaussLegendreRule& gauss_legendre(int points);

struct QuadratureSettings {
  int panels = 32;          // N: initial number of uniform panels
  int points = 8;           // m: Gauss points per panel, one of 4, 8, 16
  double rel_tol = 1e-9;    // successive-refinement agreement
  std::size_t max_evaluations = std::size_t{1} << 20;
  int grading_levels = 30;  // dyadic panels packed against each endpoint

  /// Throws PreconditionError unless panels >= 1 and points is 4, 8 or 16.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_value = 0.0;  // estimate of the integral of |g|
  std::size_t evaluations = 0;
  int panels = 0;          // uniform panel count of the accepted pass
  bool converged = false;
};

/// Composite Gauss-Legendre on [lo, hi] with panels graded geometrically
/// towards both endpoints, doubled until two passes agree within rel_tol
/// or the evaluation budget is spent. The grading resolves algebraic
/// endpoint behaviour such as (hi - v)^beta. Nodes never touch lo or hi.
///
/// Throws IntegrationError if g returns a non-finite value.
QuadratureResult integrate_graded(const std::function<double(double)>& g, double lo, double hi,
                                  const QuadratureSettings& settings = {});

} // namespace fracon
