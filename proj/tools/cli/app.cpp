#include "cli/app.hpp"

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/report.hpp"

#include <CLI11.hpp>

#include <map>
#include <memory>

namespace fracon::cli {

namespace {

struct Flags {
  std::string config;
  double alpha = 0.0;
  double c = 0.0;
  std::string f;
  std::string expr;
  std::string eta;
  std::string w;
  std::string interval;
  int grid = 0;
  int refine = 0;
  std::string backend;
  double meta = 0.0;
  std::string out;
  double at = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string alphas;
  std::string cs;
  std::string etas;
  std::string fs;
  int threads = 1;
  std::size_t budget = 0;
  double lower = 0.0;
  double upper = 0.0;
};

class Subcommand {
public:
  Subcommand(CLI::App& app, Command cmd, const std::string& help, Flags& flags)
      : cmd_(cmd), sub_(app.add_subcommand(to_string(cmd), help)), flags_(flags) {}

  Command command() const noexcept { return cmd_; }
  CLI::App* app() const noexcept { return sub_; }

  Subcommand& with_model() {
    add("--alpha", flags_.alpha, "fractal order alpha in (0, 1]");
    add("--c", flags_.c, "modulus c >= 0 (bound to the constant `c` in expressions)");
    add("--f", flags_.f, "f(x): DSL expression or preset (square, negsquare, const, example23)");
    return *this;
  }

  Subcommand& with_eta() {
    add("--eta", flags_.eta, "eta(u, v): DSL expression or preset (difference, example23)");
    return *this;
  }

  Subcommand& with_interval() {
    add("--interval", flags_.interval, "interval a,b");
    return *this;
  }

  Subcommand& with_search() {
    add("--grid", flags_.grid, "lattice points per axis (>= 8)");
    add("--refine", flags_.refine, "local refinement rounds");
    return *this;
  }

  Subcommand& with_backend() {
    add("--backend", flags_.backend, "exact, rl or auto");
    return *this;
  }

  Subcommand& with_meta() {
    add("--meta", flags_.meta, "user bound M on eta over f([a,b]) x f([a,b])");
    return *this;
  }

  Subcommand& with_output(bool json = true) {
    sub_->add_option("--config", flags_.config, "JSON config file (flags override it)");
    add("--out", flags_.out, "write the report to this path");
    if (json) {
      options_["--json"] = sub_->add_flag("--json", "emit the JSON report instead of text");
    }
    return *this;
  }

  template <typename T>
  CLI::Option* add(const std::string& name, T& target, const std::string& help) {
    CLI::Option* opt = sub_->add_option(name, target, help);
    options_[name] = opt;
    return opt;
  }

  bool given(const std::string& name) const {
    const auto it = options_.find(name);
    return it != options_.end() && it->second->count() > 0;
  }

private:
  Command cmd_;
  CLI::App* sub_;
  Flags& flags_;
  std::map<std::string, CLI::Option*> options_;
};

RunConfig merge(const Subcommand& s, const Flags& fl) {
  RunConfig cfg;
  if (!fl.config.empty()) {
    apply_config_file(cfg, fl.config);
  }
  std::vector<std::string> problems;
  if (s.given("--alpha")) cfg.alpha = fl.alpha;
  if (s.given("--c")) cfg.c = fl.c;
  if (s.given("--f")) cfg.f = fl.f;
  if (s.given("expr")) cfg.f = fl.expr;
  if (s.given("--eta")) cfg.eta = fl.eta;
  if (s.given("--w")) cfg.w = fl.w;
  if (s.given("--grid")) cfg.grid = fl.grid;
  if (s.given("--refine")) cfg.refine = fl.refine;
  if (s.given("--meta")) cfg.meta = fl.meta;
  if (s.given("--out")) cfg.out = fl.out;
  if (s.given("--json")) cfg.json = true;
  if (s.given("--at")) cfg.at = fl.at;
  if (s.given("--trials")) cfg.trials = fl.trials;
  if (s.given("--seed")) cfg.seed = fl.seed;
  if (s.given("--threads")) cfg.sweep.threads = fl.threads;
  if (s.given("--budget")) cfg.sweep.budget = fl.budget;
  if (s.given("--interval")) {
    if (auto iv = parse_interval(fl.interval)) {
      cfg.a = iv->first;
      cfg.b = iv->second;
    } else {
      problems.push_back("--interval: expected a,b but got '" + fl.interval + "'");
    }
  }
  if (s.given("lower")) cfg.a = fl.lower;
  if (s.given("upper")) cfg.b = fl.upper;
  if (s.given("--backend")) {
    if (auto b = parse_backend(fl.backend)) {
      cfg.backend = *b;
    } else {
      problems.push_back("--backend: must be exact, rl or auto, got '" + fl.backend + "'");
    }
  }
  const auto reals = [&](const char* name, const std::string& text, std::vector<double>& target) {
    if (!s.given(name)) {
      return;
    }
    if (auto v = parse_real_list(text)) {
      target = *v;
    } else {
      problems.push_back(std::string(name) + ": expected a comma separated list of numbers");
    }
  };
  reals("--alphas", fl.alphas, cfg.sweep.alphas);
  reals("--cs", fl.cs, cfg.sweep.cs);
  if (s.given("--etas")) cfg.sweep.etas = parse_word_list(fl.etas);
  if (s.given("--fs")) cfg.sweep.fs = parse_word_list(fl.fs);
  if (!problems.empty()) {
    throw ConfigError(std::move(problems));
  }
  return cfg;
}

} // namespace

int app_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Local fractional calculus and generalized strongly eta-convex verification toolkit", "fracon");
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  Flags fl;

  std::vector<std::unique_ptr<Subcommand>> subs;
  const auto make = [&](Command cmd, const std::string& help) -> Subcommand& {
    subs.push_back(std::make_unique<Subcommand>(app, cmd, help, fl));
    return *subs.back();
  };

  make(Command::certify, "search for counterexamples to generalized strong eta-convexity")
      .with_model().with_eta().with_interval().with_search().with_output();
  make(Command::hh, "evaluate the Hermite-Hadamard chain T1 <= T2 <= T3 <= T4")
      .with_model().with_eta().with_interval().with_backend().with_meta().with_output();
  {
    Subcommand& s = make(Command::fejer, "evaluate the weighted Fejer chain F1 <= F2 <= F3");
    s.with_model().with_eta().with_interval().with_backend().with_meta().with_output();
    s.add("--w", fl.w, "symmetric nonnegative weight w(x)");
  }
  {
    Subcommand& s = make(Command::sweep, "HH terms and certification over alpha x c x eta x f, as CSV");
    s.with_interval().with_search().with_backend().with_meta().with_output(false);
    s.add("--alphas", fl.alphas, "comma separated alpha values");
    s.add("--cs", fl.cs, "comma separated moduli");
    s.add("--etas", fl.etas, "comma separated eta presets or expressions");
    s.add("--fs", fl.fs, "comma separated f presets or expressions");
    s.add("--threads", fl.threads, "worker threads; output order is unaffected");
    s.add("--budget", fl.budget, "maximum number of rows");
  }
  {
    Subcommand& s = make(Command::integrate, "local fractional integral aI_b f");
    s.add("expr", fl.expr, "integrand f(x)");
    s.add("lower", fl.lower, "lower limit");
    s.add("upper", fl.upper, "upper limit");
    s.with_model().with_interval().with_backend().with_output();
  }
  {
    Subcommand& s = make(Command::diff, "local fractional derivative of f at a point");
    s.add("expr", fl.expr, "f(x)");
    s.add("--at", fl.at, "evaluation point x0");
    s.with_model().with_interval().with_backend().with_output();
  }
  {
    Subcommand& s = make(Command::axioms, "R^alpha field properties under both semantics");
    s.add("--alpha", fl.alpha, "fractal order alpha in (0, 1]");
    s.add("--trials", fl.trials, "random triples per property");
    s.add("--seed", fl.seed, "random seed");
    s.with_output();
  }

  std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::config;
  }

  for (const auto& s : subs) {
    if (s->app()->parsed()) {
      try {
        return run(s->command(), merge(*s, fl), out, err);
      } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config;
      }
    }
  }
  return exit_code::config;
}

} // namespace fracon::cli
