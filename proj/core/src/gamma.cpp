#include "fracon/gamma.hpp"

#include "fracon/errors.hpp"

#include <cmath>
#include <string>

namespace fracon {

double gamma(double x) {
  if (std::isnan(x)) {
    throw DomainError("gamma: argument is NaN");
  }
  if (x <= 0.0 && x == std::floor(x)) {
    throw DomainError("gamma: pole at non-positive integer " + std::to_string(x));
  }
  const double result = std::tgamma(x);
  if (!std::isfinite(result)) {
    throw DomainError("gamma: result overflows at x = " + std::to_string(x));
  }
  return result;
}

} // namespace fracon
