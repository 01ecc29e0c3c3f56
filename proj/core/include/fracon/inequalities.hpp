#pragma once

#include "fracon/calculus.hpp"
#include "fracon/fractal_scalar.hpp"
#include "fracon/function_spec.hpp"

#include <array>
#include <optional>

namespace fracon {

enum class LinkStatus { holds, fails };

const char* to_string(LinkStatus s) noexcept;

/// One "lhs <= rhs" link of a chain. gap = rhs - lhs; holds iff
/// gap >= -1e-9 max(1, |lhs|, |rhs|).
struct Link {
  LinkStatus status = LinkStatus::holds;
  double gap = 0.0;
  double tolerance = 0.0;
};

Link make_link(double lhs, double rhs);

enum class MetaSource { estimated, user };

const char* to_string(MetaSource s) noexcept;

struct InequalityOptions {
  std::optional<BackendKind> backend;  // empty: exact if f normalizes about a, else NumericRL
  QuadratureSettings quadrature;
  std::optional<double> m_eta;         // bound on eta's value; estimated from the grid when empty
  int eta_grid = 101;
};

/// Resolves InequalityOptions::backend for f on [a, b].
IntegralBackend resolve_backend(const FunctionSpec& f, double a, const AlphaContext& ctx,
                                const InequalityOptions& options);

/// Hermite-Hadamard chain T1 <= T2 <= T3 <= T4 with A = G(1+2a)/G(1+3a), B = G(1+a)/G(1+2a):
///   T1 = f((a+b)/2) - M/2^a
///   T2 = G(1+a)/(b-a)^a (aI_b f - (c/4)^a (b-a)^(3a) A)
///   T3 = (f(a)+f(b))/2^a + G(1+a)[(eta_ab+eta_ba)/2^a B - c^a (b-a)^(2a) (B-A)]
///   T4 = T3 with M B in place of the eta average.
/// A1 and A2 are the one-sided bounds f(b) + eta_ab G(1+a) B - ... and f(a) + eta_ba G(1+a) B - ...
struct HHReport {
  double alpha = 1.0;
  FractalScalar T1{0.0, 1.0};
  FractalScalar T2{0.0, 1.0};
  FractalScalar T3{0.0, 1.0};
  FractalScalar T4{0.0, 1.0};
  double A = 0.0;
  double B = 0.0;
  double m_eta = 0.0;
  MetaSource m_eta_source = MetaSource::estimated;
  FractalScalar A1{0.0, 1.0};
  FractalScalar A2{0.0, 1.0};
  FractalScalar integral{0.0, 1.0};  // aI_b f
  double eta_ab = 0.0;
  double eta_ba = 0.0;
  std::array<Link, 3> links{};
  BackendKind backend = BackendKind::numeric_rl;
  bool converged = true;

  bool all_hold() const noexcept;
};

HHReport hh_terms(const FunctionSpec& f, const EtaSpec& eta, double c, double a, double b, const AlphaContext& ctx,
                  const InequalityOptions& options = {});

/// Fejer chain F1 <= F2 <= F3 for a symmetric nonnegative weight w:
///   F1 = f((a+b)/2) m0 - L_eta + (c/4)^a m1
///   F2 = aI_b (f w)
///   F3 = (f(a)+f(b))/2^a m0 + R_eta - c^a m3
/// with moments m0 = aI_b w, m1 = aI_b (a+b-2x)^(2a) w, m2 = aI_b (b-x)^a w,
/// m3 = aI_b (b-x)^a (x-a)^a w, L_eta = 2^-a aI_b eta(f(a+b-x), f(x)) w and
/// R_eta = (eta_ab + eta_ba) / (2^a (b-a)^a) m2. Moments and L_eta always use NumericRL.
struct FejerReport {
  double alpha = 1.0;
  FractalScalar F1{0.0, 1.0};
  FractalScalar F2{0.0, 1.0};
  FractalScalar F3{0.0, 1.0};
  FractalScalar L_eta{0.0, 1.0};
  FractalScalar R_eta{0.0, 1.0};
  FractalScalar m0{0.0, 1.0};
  FractalScalar m1{0.0, 1.0};
  FractalScalar m2{0.0, 1.0};
  FractalScalar m3{0.0, 1.0};
  std::array<Link, 2> links{};
  BackendKind backend = BackendKind::numeric_rl;
  double max_asymmetry = 0.0;
  bool converged = true;

  bool all_hold() const noexcept;
};

/// Throws PreconditionError if w is asymmetric or negative on a 201-point grid.
FejerReport fejer_terms(const FunctionSpec& f, const EtaSpec& eta, double c, const WeightSpec& w, double a, double b,
                        const AlphaContext& ctx, const InequalityOptions& options = {});

/// w = 1 comparison between the two chains, everything scaled by G(1+a)/(b-a)^a:
///   (i)   Fejer middle integral vs the HH integral
///   (ii)  R_eta vs the HH eta term (eta_ab+eta_ba)/2^a B
///   (iii) L_eta <= M/2^a
/// The HH side uses the auto backend, the Fejer side NumericRL.
struct ConsistencyReport {
  double integral_fejer = 0.0;
  double integral_hh = 0.0;
  bool integral_agrees = false;
  double eta_fejer = 0.0;
  double eta_hh = 0.0;
  bool eta_agrees = false;
  double l_eta_scaled = 0.0;
  double m_bound = 0.0;
  bool bound_holds = false;
  double tolerance = 1e-9;

  bool holds() const noexcept { return integral_agrees && eta_agrees && bound_holds; }
};

ConsistencyReport hh_fejer_consistency(const FunctionSpec& f, const EtaSpec& eta, double c, double a, double b,
                                       const AlphaContext& ctx, const InequalityOptions& options = {});

} // namespace fracon
