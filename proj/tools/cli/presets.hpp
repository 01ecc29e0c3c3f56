#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fracon::cli {

struct Preset {
  std::string id;
  std::string text;
};

const std::vector<Preset>& function_presets();
const std::vector<Preset>& eta_presets();

/// Preset text for `id`, or nothing if `id` is not a preset name.
std::optional<std::string> function_preset(std::string_view id);
std::optional<std::string> eta_preset(std::string_view id);

/// A preset id resolves to its expression; anything else is taken as DSL text.
std::string resolve_function(const std::string& spec);
std::string resolve_eta(const std::string& spec);

} // namespace fracon::cli
