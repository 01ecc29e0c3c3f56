#include "cli/presets.hpp"

#include <algorithm>

namespace fracon::cli {

namespace {

std::optional<std::string> find(const std::vector<Preset>& table, std::string_view id) {
  const auto it = std::find_if(table.begin(), table.end(), [&](const Preset& p) { return p.id == id; });
  if (it == table.end()) {
    return std::nullopt;
  }
  return it->text;
}

} // namespace

const std::vector<Preset>& function_presets() {
  static const std::vector<Preset> table = {
      {"square", "x^(2a)"},
      {"negsquare", "-x^(2a)"},
      {"const", "1"},
      {"example23", "x^(2a) + c^(a)*x^(2a)"},
  };
  return table;
}

const std::vector<Preset>& eta_presets() {
  static const std::vector<Preset> table = {
      {"difference", "u - v"},
      {"example23", "2^a*u + v"},
  };
  return table;
}

std::optional<std::string> function_preset(std::string_view id) { return find(function_presets(), id); }

std::optional<std::string> eta_preset(std::string_view id) { return find(eta_presets(), id); }

std::string resolve_function(const std::string& spec) { return function_preset(spec).value_or(spec); }

std::string resolve_eta(const std::string& spec) { return eta_preset(spec).value_or(spec); }

} // namespace fracon::cli
