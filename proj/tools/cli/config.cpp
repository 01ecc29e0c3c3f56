#include "cli/config.hpp"

#include "cli/presets.hpp"

#include <fracon/errors.hpp>
#include <fracon/expr.hpp>

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fracon::cli {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    out += "\n  - " + item;
  }
  return out;
}

std::optional<double> parse_real(std::string_view text) {
  while (!text.empty() && text.front() == ' ') {
    text.remove_prefix(1);
  }
  while (!text.empty() && text.back() == ' ') {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

class Reader {
public:
  Reader(RunConfig& cfg, std::vector<std::string>& problems, std::string origin)
      : cfg_(cfg), problems_(problems), origin_(std::move(origin)) {}

  void read_top(const json& doc) {
    if (!doc.is_object()) {
      fail("", "top level must be a JSON object");
      return;
    }
    for (const auto& [key, value] : doc.items()) {
      if (key == "alpha") {
        real(key, value, cfg_.alpha);
      } else if (key == "c") {
        real(key, value, cfg_.c);
      } else if (key == "interval") {
        interval(key, value);
      } else if (key == "f") {
        text(key, value, cfg_.f);
      } else if (key == "eta") {
        text(key, value, cfg_.eta);
      } else if (key == "w") {
        text(key, value, cfg_.w);
      } else if (key == "grid") {
        integer(key, value, cfg_.grid);
      } else if (key == "refine") {
        integer(key, value, cfg_.refine);
      } else if (key == "backend") {
        std::string name;
        if (text(key, value, name)) {
          if (auto b = parse_backend(name)) {
            cfg_.backend = *b;
          } else {
            fail(key, "must be one of exact, rl, auto");
          }
        }
      } else if (key == "meta") {
        if (value.is_null()) {
          cfg_.meta.reset();
        } else {
          double m = 0.0;
          if (real(key, value, m)) {
            cfg_.meta = m;
          }
        }
      } else if (key == "out") {
        std::string path;
        if (text(key, value, path)) {
          cfg_.out = path;
        }
      } else if (key == "json") {
        if (value.is_boolean()) {
          cfg_.json = value.get<bool>();
        } else {
          fail(key, "must be a boolean");
        }
      } else if (key == "at") {
        real(key, value, cfg_.at);
      } else if (key == "trials") {
        count(key, value, cfg_.trials);
      } else if (key == "seed") {
        if (value.is_number_unsigned()) {
          cfg_.seed = value.get<std::uint64_t>();
        } else {
          fail(key, "must be a nonnegative integer");
        }
      } else if (key == "sweep") {
        read_sweep(value);
      } else {
        fail(key, "unknown key");
      }
    }
  }

private:
  void read_sweep(const json& doc) {
    if (!doc.is_object()) {
      fail("sweep", "must be an object");
      return;
    }
    for (const auto& [key, value] : doc.items()) {
      const std::string name = "sweep." + key;
      if (key == "alphas") {
        reals(name, value, cfg_.sweep.alphas);
      } else if (key == "cs") {
        reals(name, value, cfg_.sweep.cs);
      } else if (key == "etas") {
        words(name, value, cfg_.sweep.etas);
      } else if (key == "fs") {
        words(name, value, cfg_.sweep.fs);
      } else if (key == "budget") {
        count(name, value, cfg_.sweep.budget);
      } else if (key == "threads") {
        integer(name, value, cfg_.sweep.threads);
      } else {
        fail(name, "unknown key");
      }
    }
  }

  void fail(const std::string& key, const std::string& what) {
    problems_.push_back(origin_ + (key.empty() ? "" : ": " + key) + ": " + what);
  }

  bool real(const std::string& key, const json& v, double& out) {
    if (!v.is_number()) {
      fail(key, "must be a number");
      return false;
    }
    out = v.get<double>();
    return true;
  }

  bool integer(const std::string& key, const json& v, int& out) {
    if (!v.is_number_integer()) {
      fail(key, "must be an integer");
      return false;
    }
    out = v.get<int>();
    return true;
  }

  void count(const std::string& key, const json& v, std::size_t& out) {
    if (!v.is_number_unsigned()) {
      fail(key, "must be a nonnegative integer");
      return;
    }
    out = v.get<std::size_t>();
  }

  bool text(const std::string& key, const json& v, std::string& out) {
    if (!v.is_string()) {
      fail(key, "must be a string");
      return false;
    }
    out = v.get<std::string>();
    return true;
  }

  void interval(const std::string& key, const json& v) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      fail(key, "must be an array [a, b] of two numbers");
      return;
    }
    cfg_.a = v[0].get<double>();
    cfg_.b = v[1].get<double>();
  }

  void reals(const std::string& key, const json& v, std::vector<double>& out) {
    if (!v.is_array()) {
      fail(key, "must be an array of numbers");
      return;
    }
    std::vector<double> values;
    for (const auto& item : v) {
      if (!item.is_number()) {
        fail(key, "must be an array of numbers");
        return;
      }
      values.push_back(item.get<double>());
    }
    out = std::move(values);
  }

  void words(const std::string& key, const json& v, std::vector<std::string>& out) {
    if (!v.is_array()) {
      fail(key, "must be an array of strings");
      return;
    }
    std::vector<std::string> values;
    for (const auto& item : v) {
      if (!item.is_string()) {
        fail(key, "must be an array of strings");
        return;
      }
      values.push_back(item.get<std::string>());
    }
    out = std::move(values);
  }

  RunConfig& cfg_;
  std::vector<std::string>& problems_;
  std::string origin_;
};

void check_expr(std::vector<std::string>& problems, const std::string& label, const std::string& text, int arity) {
  try {
    (void)Expr::parse(text, arity, Bindings{{"c", 0.0}});
  } catch (const ParseError& e) {
    problems.push_back(label + " '" + text + "': " + e.what());
  }
}

bool valid_alpha(double alpha) { return std::isfinite(alpha) && alpha > 0.0 && alpha <= 1.0; }

bool valid_modulus(double c) { return std::isfinite(c) && c >= 0.0; }

} // namespace

const char* to_string(Command cmd) noexcept {
  switch (cmd) {
  case Command::certify: return "certify";
  case Command::hh: return "hh";
  case Command::fejer: return "fejer";
  case Command::sweep: return "sweep";
  case Command::integrate: return "integrate";
  case Command::diff: return "diff";
  case Command::axioms: return "axioms";
  }
  return "?";
}

const char* to_string(BackendChoice b) noexcept {
  switch (b) {
  case BackendChoice::exact: return "exact";
  case BackendChoice::rl: return "rl";
  case BackendChoice::automatic: return "auto";
  }
  return "?";
}

std::optional<BackendChoice> parse_backend(const std::string& text) {
  if (text == "exact") return BackendChoice::exact;
  if (text == "rl") return BackendChoice::rl;
  if (text == "auto") return BackendChoice::automatic;
  return std::nullopt;
}

std::optional<BackendKind> to_kind(BackendChoice b) noexcept {
  switch (b) {
  case BackendChoice::exact: return BackendKind::exact_monomial;
  case BackendChoice::rl: return BackendKind::numeric_rl;
  case BackendChoice::automatic: break;
  }
  return std::nullopt;
}

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error("invalid configuration:" + join(problems)), problems_(std::move(problems)) {}

void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin) {
  std::vector<std::string> problems;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError({origin + ": not valid JSON (" + e.what() + ")"});
  }
  Reader(cfg, problems, origin).read_top(doc);
  if (!problems.empty()) {
    throw ConfigError(std::move(problems));
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError({path + ": cannot open config file"});
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(cfg, buf.str(), path);
}

void validate(const RunConfig& cfg, Command cmd) {
  std::vector<std::string> p;
  const bool uses_interval = cmd != Command::axioms && cmd != Command::integrate && cmd != Command::diff;

  if (cmd != Command::sweep && !valid_alpha(cfg.alpha)) {
    p.push_back("alpha must lie in (0, 1]");
  }
  if (!valid_modulus(cfg.c)) {
    p.push_back("c must be finite and nonnegative");
  }
  if (!std::isfinite(cfg.a) || !std::isfinite(cfg.b)) {
    p.push_back("interval endpoints must be finite");
  } else if (uses_interval && !(cfg.a < cfg.b)) {
    p.push_back("interval needs a < b");
  }
  if (cmd == Command::certify || cmd == Command::sweep) {
    if (cfg.grid < 8) {
      p.push_back("grid must be at least 8");
    }
    if (cfg.refine < 0) {
      p.push_back("refine must be nonnegative");
    }
  }
  if (cfg.meta && !std::isfinite(*cfg.meta)) {
    p.push_back("meta must be finite");
  }
  if (cmd == Command::diff && !std::isfinite(cfg.at)) {
    p.push_back("at must be finite");
  }
  if (cmd == Command::axioms && cfg.trials == 0) {
    p.push_back("trials must be positive");
  }

  if (cmd == Command::sweep) {
    const SweepSpec& s = cfg.sweep;
    if (s.alphas.empty() || s.cs.empty() || s.etas.empty() || s.fs.empty()) {
      p.push_back("sweep lists alphas, cs, etas and fs must be nonempty");
    }
    for (const double al : s.alphas) {
      if (!valid_alpha(al)) {
        p.push_back("sweep alpha " + std::to_string(al) + " outside (0, 1]");
      }
    }
    for (const double c : s.cs) {
      if (!valid_modulus(c)) {
        p.push_back("sweep c " + std::to_string(c) + " must be finite and nonnegative");
      }
    }
    for (const auto& id : s.fs) {
      check_expr(p, "sweep f", resolve_function(id), 1);
    }
    for (const auto& id : s.etas) {
      check_expr(p, "sweep eta", resolve_eta(id), 2);
    }
    if (s.threads < 1) {
      p.push_back("sweep threads must be at least 1");
    }
    if (s.rows() > s.budget) {
      p.push_back("sweep has " + std::to_string(s.rows()) + " rows, over the budget of " +
                  std::to_string(s.budget));
    }
  } else if (cmd != Command::axioms) {
    check_expr(p, "f", resolve_function(cfg.f), 1);
    if (cmd == Command::certify || cmd == Command::hh || cmd == Command::fejer) {
      check_expr(p, "eta", resolve_eta(cfg.eta), 2);
    }
    if (cmd == Command::fejer) {
      check_expr(p, "w", cfg.w, 1);
    }
  }

  if (!p.empty()) {
    throw ConfigError(std::move(p));
  }
}

std::optional<std::pair<double, double>> parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    return std::nullopt;
  }
  const auto lo = parse_real(std::string_view(text).substr(0, comma));
  const auto hi = parse_real(std::string_view(text).substr(comma + 1));
  if (!lo || !hi) {
    return std::nullopt;
  }
  return std::make_pair(*lo, *hi);
}

std::optional<std::vector<double>> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& word : parse_word_list(text)) {
    const auto v = parse_real(word);
    if (!v) {
      return std::nullopt;
    }
    out.push_back(*v);
  }
  if (out.empty()) {
    return std::nullopt;
  }
  return out;
}

std::vector<std::string> parse_word_list(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (const char ch : text) {
    if (ch == ',') {
      out.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current += ch;
    }
  }
  if (!current.empty() || !out.empty()) {
    out.push_back(current);
  }
  return out;
}

} // namespace fracon::cli
