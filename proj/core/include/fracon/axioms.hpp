#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fracon {

enum class Semantics { iso, magnitude };

const char* to_string(Semantics s) noexcept;

/// Outcome of one of the seven R^alpha field properties on random triples.
struct AxiomRow {
  int property = 0;        // 1..7
  std::string statement;   // ASCII rendering of the property
  bool holds = true;
  double max_relative_error = 0.0;
  /// Base triple (a, b, c) with the largest relative error, if any failed.
  std::optional<std::array<double, 3>> witness;
};

struct AxiomTable {
  double alpha = 1.0;
  Semantics semantics = Semantics::iso;
  std::size_t trials = 0;
  std::vector<AxiomRow> rows;

  int passed() const noexcept;
};

struct AxiomOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 20201;
  double relative_tolerance = 1e-12;
  /// Bases are drawn uniformly from [-base_range, base_range].
  double base_range = 10.0;
};

/// Checks properties 1-7 of R^alpha under the given representation.
/// Under iso semantics all seven hold; under magnitude semantics property 2
/// (a^alpha + b^alpha = (a+b)^alpha) diverges for alpha < 1.
AxiomTable check_axioms(Semantics semantics, double alpha, const AxiomOptions& options = {});

} // namespace fracon
