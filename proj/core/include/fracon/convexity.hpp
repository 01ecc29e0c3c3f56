#pragma once

#include "fracon/fractal_scalar.hpp"
#include "fracon/function_spec.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fracon {

/// Both sides of the generalized strong eta-convexity inequality at (x, y, t):
///   lhs = f(tx + (1-t)y)
///   rhs = f(y) + t^alpha eta(f(x), f(y)) - c^alpha t^alpha (1-t)^alpha (x-y)^(2 alpha)
struct DefectParts {
  double lhs = 0.0;
  double rhs = 0.0;
  double defect() const noexcept { return rhs - lhs; }
};

DefectParts defect_parts(const FunctionSpec& f, const EtaSpec& eta, double c, const AlphaContext& ctx,
                         double x, double y, double t);

/// rhs - lhs; f is in eta-GSC^c_alpha iff this is >= 0 for every admissible triple.
double defect(const FunctionSpec& f, const EtaSpec& eta, double c, const AlphaContext& ctx,
              double x, double y, double t);

struct Counterexample {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
  FractalScalar lhs{0.0, 1.0};
  FractalScalar rhs{0.0, 1.0};
  double defect = 0.0;  // rhs - lhs
};

enum class ConvexityStatus { no_violation_found, violated };

const char* to_string(ConvexityStatus s) noexcept;

/// One of the two conditions every member of eta-GSC^c_alpha satisfies:
///   diagonal:    0 <= eta(f(x), f(x))
///   difference:  f(x) - f(y) <= eta(f(x), f(y))
struct NecessaryCondition {
  bool holds = true;
  double worst_margin = 0.0;  // min over the grid of (eta - required lower bound)
  double worst_x = 0.0;
  double worst_y = 0.0;
};

struct NecessaryConditions {
  NecessaryCondition diagonal;
  NecessaryCondition difference;
  double tolerance = 0.0;
  bool holds() const noexcept { return diagonal.holds && difference.holds; }
};

/// Checks both necessary conditions on a grid_n x grid_n lattice of the domain.
NecessaryConditions check_eta_necessary(const FunctionSpec& f, const EtaSpec& eta, const AlphaContext& ctx,
                                        int grid_n);

struct ConvexityReport {
  ConvexityStatus status = ConvexityStatus::no_violation_found;
  std::optional<Counterexample> witness;
  double min_defect = 0.0;
  double argmin_x = 0.0;
  double argmin_y = 0.0;
  double argmin_t = 0.0;
  int grid_n = 0;
  int refine_depth = 0;
  int refinement_levels = 0;  // levels actually run
  double tolerance = 0.0;
  std::size_t evaluations = 0;
  bool short_circuited = false;  // a necessary condition failed; grid search skipped
  NecessaryConditions necessary;
};

/// Counterexample search: defect on a grid_n^3 lattice over (x, y, t), then
/// refine_depth rounds of local refinement around the minimum, each shrinking
/// the spacing by 3. Violated iff the minimum is below
/// -1e-9 (1 + max |f| on the grid). NoViolationFound is not a proof.
///
/// Throws PreconditionError for grid_n < 8 or refine_depth < 0.
ConvexityReport certify_gsc(const FunctionSpec& f, const EtaSpec& eta, double c, const AlphaContext& ctx,
                            int grid_n, int refine_depth);

struct SymmetryReport {
  bool holds = true;
  bool nonnegative = true;
  double max_asymmetry = 0.0;
  double worst_x = 0.0;
  double min_weight = 0.0;
  double tolerance = 0.0;
};

/// w(x) = w(a+b-x) on a grid, within 1e-10 (1 + max |w|); also flags negative samples.
SymmetryReport check_symmetry(const WeightSpec& w, double a, double b, const AlphaContext& ctx, int grid_n);

/// max eta(f(x_i), f(x_j)) over the grid image of f: a lower estimate of the true supremum.
double estimate_eta_sup(const FunctionSpec& f, const EtaSpec& eta, const AlphaContext& ctx, int grid_n);

struct MinimumConditionViolation {
  double y = 0.0;
  double antecedent = 0.0;  // f^(alpha)(x*) (y-x*)^alpha / Gamma(1+alpha)
  double eta_value = 0.0;   // eta(f(y), f(x*))
  double bound = 0.0;       // c^alpha (y-x*)^(2 alpha)
};

struct MinimumConditionReport {
  double argmin = 0.0;
  double f_min = 0.0;
  double derivative = 0.0;
  bool exact_derivative = false;
  std::size_t points_checked = 0;
  std::size_t antecedent_held = 0;
  std::vector<MinimumConditionViolation> violations;
  bool holds() const noexcept { return violations.empty(); }
};

/// At the grid minimiser x* of f, checks for every grid y that
///   f^(alpha)(x*) (y-x*)^alpha / Gamma(1+alpha) >= 0  implies  eta(f(y), f(x*)) >= c^alpha (y-x*)^(2 alpha).
/// Antecedent slack 1e-12, consequent slack 1e-9. Meaningful only for f already in eta-GSC^c_alpha.
MinimumConditionReport minimum_condition_check(const FunctionSpec& f, const EtaSpec& eta, double c,
                                               const AlphaContext& ctx, int grid_n);

} // namespace fracon
