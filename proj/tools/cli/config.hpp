#pragma once

#include <fracon/calculus.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracon::cli {

enum class Command { certify, hh, fejer, sweep, integrate, diff, axioms };

const char* to_string(Command cmd) noexcept;

enum class BackendChoice { exact, rl, automatic };

const char* to_string(BackendChoice b) noexcept;
std::optional<BackendChoice> parse_backend(const std::string& text);

/// Empty for automatic selection.
std::optional<BackendKind> to_kind(BackendChoice b) noexcept;

struct SweepSpec {
  std::vector<double> alphas{0.3, 0.5, 0.9, 1.0};
  std::vector<double> cs{0.0, 1.0};
  std::vector<std::string> etas{"difference", "example23"};
  std::vector<std::string> fs{"square", "negsquare", "const"};
  std::size_t budget = 100000;
  int threads = 1;

  std::size_t rows() const noexcept { return alphas.size() * cs.size() * etas.size() * fs.size(); }
};

struct RunConfig {
  double alpha = 1.0;
  double c = 0.0;
  double a = 0.0;
  double b = 1.0;
  std::string f = "x^(2a)";
  std::string eta = "u - v";
  std::string w = "1";
  int grid = 50;
  int refine = 3;
  BackendChoice backend = BackendChoice::automatic;
  std::optional<double> meta;
  std::optional<std::string> out;
  bool json = false;

  double at = 0.0;  // diff
  std::size_t trials = 1000;  // axioms
  std::uint64_t seed = 20201;

  SweepSpec sweep;
};

/// Every violation found while loading or validating, reported at once.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(std::vector<std::string> problems);

  const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
  std::vector<std::string> problems_;
};

/// Overlays the keys of a JSON config file onto `cfg`. Unknown keys and
/// wrongly typed values are collected and thrown as one ConfigError.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Same as apply_config_file for already loaded JSON text.
void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin);

/// Checks ranges and that every expression the command needs parses.
/// Throws ConfigError listing all problems.
void validate(const RunConfig& cfg, Command cmd);

/// "a,b" -> {a, b}; empty on malformed input.
std::optional<std::pair<double, double>> parse_interval(const std::string& text);

/// Comma separated list of reals; empty on malformed input.
std::optional<std::vector<double>> parse_real_list(const std::string& text);
std::vector<std::string> parse_word_list(const std::string& text);

} // namespace fracon::cli
