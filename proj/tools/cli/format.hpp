#pragma once

#include <string>

namespace fracon::cli {

/// Shortest-form general notation with at most `digits` significant digits,
/// independent of the C locale (always '.' as decimal separator).
std::string format_number(double value, int digits);

/// Quotes a CSV cell when it contains a separator, quote or line break.
std::string csv_cell(const std::string& text);

} // namespace fracon::cli
