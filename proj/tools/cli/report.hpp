#pragma once

#include "cli/config.hpp"

#include <fracon/axioms.hpp>
#include <fracon/convexity.hpp>
#include <fracon/inequalities.hpp>

#include <json.hpp>

#include <string>

namespace fracon::cli {

using Json = nlohmann::ordered_json;

const char* version() noexcept;

/// Top-level report object: {version, config_echo, results, diagnostics}.
Json envelope(Command cmd, const RunConfig& cfg, Json results, Json diagnostics);

Json config_echo(Command cmd, const RunConfig& cfg);

Json to_json(const ConvexityReport& r);
Json to_json(const HHReport& r);
Json to_json(const FejerReport& r);
Json to_json(const AxiomTable& t);
Json to_json(const Link& l);

/// Upper-case status words shared by text output and the sweep CSV.
const char* status_word(ConvexityStatus s) noexcept;

} // namespace fracon::cli
