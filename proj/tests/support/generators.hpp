#pragma once

// Fixed-seed generators for property tests. Each test owns its Gen so the
// draw sequence does not depend on test execution order.

#include <cstdint>
#include <random>
#include <vector>

namespace gen {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Mixes magnitudes over several decades, both signs.
  double wide() {
    const double mag = std::pow(10.0, uniform(-3.0, 3.0));
    return integer(0, 1) ? mag : -mag;
  }

  std::vector<double> uniforms(std::size_t n, double lo, double hi) {
    std::vector<double> out(n);
    for (auto& v : out) {
      v = uniform(lo, hi);
    }
    return out;
  }

private:
  std::mt19937_64 rng_;
};

inline const std::vector<double>& test_alphas() {
  static const std::vector<double> a{0.3, 0.5, 0.9, 1.0};
  return a;
}

} // namespace gen
