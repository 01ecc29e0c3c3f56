#pragma once

#include "cli/config.hpp"

#include <fracon/convexity.hpp>
#include <fracon/inequalities.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fracon::cli {

inline constexpr const char* kSweepHeader =
    "alpha,c,eta_id,f_id,a,b,T1,T2,T3,T4,A1,A2,link12,link23,link34,min_defect,status,message";

struct SweepRow {
  double alpha = 1.0;
  double c = 0.0;
  std::string eta_id;
  std::string f_id;
  double a = 0.0;
  double b = 1.0;
  std::optional<HHReport> hh;
  std::optional<ConvexityReport> convexity;
  std::string message;  // set for ERROR rows

  bool error() const noexcept { return !hh || !convexity; }
};

/// Rows in (alpha, c, eta, f) cartesian order; per-row failures become ERROR rows.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);

SweepRow sweep_row(const RunConfig& cfg, double alpha, double c, const std::string& eta_id, const std::string& f_id);

/// Header plus one line per row; numbers carry 12 significant digits.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

} // namespace fracon::cli
