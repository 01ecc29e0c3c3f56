#include "cli/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace fracon::cli {

std::string format_number(double value, int digits) {
  if (value == 0.0) {
    return "0";  // folds -0 as well
  }
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
  return std::string(buf.data(), res.ptr);
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (const char ch : text) {
    if (ch == '"') {
      out += '"';
    }
    out += ch;
  }
  out += '"';
  return out;
}

} // namespace fracon::cli
