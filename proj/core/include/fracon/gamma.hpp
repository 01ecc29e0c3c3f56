#pragma once

namespace fracon {

/// Gamma function for real arguments, backed by std::tgamma (reflection
/// handles negative non-integers). Positive integers give exact factorials.
///
/// Throws DomainError for NaN, zero and negative integers, and when the
/// result overflows a double.
double gamma(double x);

} // namespace fracon
