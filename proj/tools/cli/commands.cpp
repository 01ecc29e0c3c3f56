#include "cli/commands.hpp"

#include "cli/format.hpp"
#include "cli/presets.hpp"
#include "cli/report.hpp"
#include "cli/sweep.hpp"

#include <fracon/axioms.hpp>
#include <fracon/calculus.hpp>
#include <fracon/convexity.hpp>
#include <fracon/errors.hpp>
#include <fracon/inequalities.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fracon::cli {

namespace {

struct Outcome {
  int code = exit_code::ok;
  Json results;
  Json diagnostics = Json::object();
  std::string text;
};

std::string num(double v) { return format_number(v, 15); }

Bindings constants(const RunConfig& cfg) { return {{"c", cfg.c}}; }

FunctionSpec make_f(const RunConfig& cfg, double lo, double hi) {
  return {Expr::parse(resolve_function(cfg.f), 1, constants(cfg)), Interval(lo, hi)};
}

EtaSpec make_eta(const RunConfig& cfg) { return EtaSpec(Expr::parse(resolve_eta(cfg.eta), 2, constants(cfg))); }

InequalityOptions inequality_options(const RunConfig& cfg) {
  InequalityOptions o;
  o.backend = to_kind(cfg.backend);
  o.m_eta = cfg.meta;
  return o;
}

std::string link_line(const char* label, const Link& l) {
  return std::string(label) + ": " + to_string(l.status) + " gap=" + num(l.gap) + "\n";
}

Json warnings(bool converged) {
  Json w = Json::array();
  if (!converged) {
    w.push_back("quadrature hit its evaluation budget before meeting the tolerance");
  }
  return w;
}

Outcome certify(const RunConfig& cfg) {
  const AlphaContext ctx(cfg.alpha);
  const FunctionSpec f = make_f(cfg, cfg.a, cfg.b);
  const EtaSpec eta = make_eta(cfg);
  const ConvexityReport r = certify_gsc(f, eta, cfg.c, ctx, cfg.grid, cfg.refine);

  Outcome o;
  o.code = r.status == ConvexityStatus::violated ? exit_code::violated : exit_code::ok;
  o.results = to_json(r);
  o.diagnostics["warnings"] = Json::array();
  o.diagnostics["note"] = "NO_VIOLATION_FOUND reflects a finite search, not a proof";

  std::ostringstream t;
  t << "certify: " << status_word(r.status) << "\n";
  t << "min_defect: " << num(r.min_defect) << " at x=" << num(r.argmin_x) << " y=" << num(r.argmin_y)
    << " t=" << num(r.argmin_t) << "\n";
  if (r.witness) {
    const Counterexample& w = *r.witness;
    t << "witness: x=" << num(w.x) << " y=" << num(w.y) << " t=" << num(w.t) << " lhs=" << num(w.lhs.value())
      << " rhs=" << num(w.rhs.value()) << " defect=" << num(w.defect) << "\n";
  } else {
    t << "witness: none\n";
  }
  t << "necessary: diagonal " << (r.necessary.diagonal.holds ? "HOLDS" : "FAILS") << " (worst margin "
    << num(r.necessary.diagonal.worst_margin) << "), difference "
    << (r.necessary.difference.holds ? "HOLDS" : "FAILS") << " (worst margin "
    << num(r.necessary.difference.worst_margin) << ")\n";
  t << "search: grid " << r.grid_n << "^3, refinement " << r.refinement_levels << "/" << r.refine_depth
    << ", evaluations " << r.evaluations << ", tolerance " << num(r.tolerance)
    << (r.short_circuited ? ", short-circuited" : "") << "\n";
  o.text = t.str();
  return o;
}

Outcome hh(const RunConfig& cfg) {
  const AlphaContext ctx(cfg.alpha);
  const FunctionSpec f = make_f(cfg, cfg.a, cfg.b);
  const HHReport r = hh_terms(f, make_eta(cfg), cfg.c, cfg.a, cfg.b, ctx, inequality_options(cfg));

  Outcome o;
  o.code = r.all_hold() ? exit_code::ok : exit_code::violated;
  o.results = to_json(r);
  o.diagnostics["warnings"] = warnings(r.converged);

  std::ostringstream t;
  t << "hh: alpha=" << num(cfg.alpha) << " c=" << num(cfg.c) << " interval=[" << num(cfg.a) << ", " << num(cfg.b)
    << "] backend=" << to_string(r.backend) << "\n";
  t << "T1 = " << num(r.T1.value()) << "\n";
  t << "T2 = " << num(r.T2.value()) << "\n";
  t << "T3 = " << num(r.T3.value()) << "\n";
  t << "T4 = " << num(r.T4.value()) << "\n";
  t << "A = " << num(r.A) << ", B = " << num(r.B) << "\n";
  t << "M_eta = " << num(r.m_eta) << " (" << to_string(r.m_eta_source) << ")\n";
  t << "A1 = " << num(r.A1.value()) << ", A2 = " << num(r.A2.value()) << "\n";
  t << link_line("T1 <= T2", r.links[0]) << link_line("T2 <= T3", r.links[1]) << link_line("T3 <= T4", r.links[2]);
  o.text = t.str();
  return o;
}

Outcome fejer(const RunConfig& cfg) {
  const AlphaContext ctx(cfg.alpha);
  const FunctionSpec f = make_f(cfg, cfg.a, cfg.b);
  const WeightSpec w(Expr::parse(cfg.w, 1, constants(cfg)), Interval(cfg.a, cfg.b));
  const FejerReport r = fejer_terms(f, make_eta(cfg), cfg.c, w, cfg.a, cfg.b, ctx, inequality_options(cfg));

  Outcome o;
  o.code = r.all_hold() ? exit_code::ok : exit_code::violated;
  o.results = to_json(r);
  o.diagnostics["warnings"] = warnings(r.converged);

  std::ostringstream t;
  t << "fejer: alpha=" << num(cfg.alpha) << " c=" << num(cfg.c) << " interval=[" << num(cfg.a) << ", "
    << num(cfg.b) << "] backend=" << to_string(r.backend) << "\n";
  t << "F1 = " << num(r.F1.value()) << "\n";
  t << "F2 = " << num(r.F2.value()) << "\n";
  t << "F3 = " << num(r.F3.value()) << "\n";
  t << "L_eta = " << num(r.L_eta.value()) << ", R_eta = " << num(r.R_eta.value()) << "\n";
  t << "m0 = " << num(r.m0.value()) << ", m1 = " << num(r.m1.value()) << ", m2 = " << num(r.m2.value())
    << ", m3 = " << num(r.m3.value()) << "\n";
  t << link_line("F1 <= F2", r.links[0]) << link_line("F2 <= F3", r.links[1]);
  o.text = t.str();
  return o;
}

Outcome integrate(const RunConfig& cfg) {
  const AlphaContext ctx(cfg.alpha);
  const double lo = std::min(cfg.a, cfg.b);
  const double hi = cfg.a == cfg.b ? lo + 1.0 : std::max(cfg.a, cfg.b);
  const FunctionSpec f = make_f(cfg, lo, hi);
  IntegralBackend backend = IntegralBackend::numeric();
  if (cfg.backend == BackendChoice::exact) {
    backend = IntegralBackend::exact();
  } else if (cfg.backend == BackendChoice::automatic) {
    backend = choose_backend(f, lo, ctx);
  }
  const IntegralResult r = lf_integral_detailed(f, cfg.a, cfg.b, ctx, backend);

  Outcome o;
  o.results = {{"value", r.value.value()},
               {"backend", to_string(r.backend)},
               {"evaluations", r.evaluations},
               {"converged", r.converged}};
  o.diagnostics["warnings"] = warnings(r.converged);
  o.text = num(r.value.value()) + "\nbackend: " + to_string(r.backend) + "\n";
  return o;
}

Outcome diff(const RunConfig& cfg) {
  const AlphaContext ctx(cfg.alpha);
  // The normal form is taken about the interval's left end, so x0 must not lie left of it.
  if (cfg.at < cfg.a) {
    throw PreconditionError("--at must not lie left of the interval start " + num(cfg.a));
  }
  const FunctionSpec f = make_f(cfg, cfg.a, std::max(cfg.b, cfg.at + 1.0));
  DerivativeMode mode = DerivativeMode::finite_difference;
  if (cfg.backend == BackendChoice::exact ||
      (cfg.backend == BackendChoice::automatic && f.gpoly(cfg.a, ctx))) {
    mode = DerivativeMode::exact_monomial;
  }
  const FractalScalar v = lf_derivative(f, cfg.at, ctx, mode);

  Outcome o;
  o.results = {{"value", v.value()}, {"mode", to_string(mode)}, {"at", cfg.at}, {"base_point", cfg.a}};
  if (mode == DerivativeMode::finite_difference) {
    o.results["step"] = finite_difference_step(cfg.alpha);
  }
  o.diagnostics["warnings"] = Json::array();
  o.text = num(v.value()) + "\nmode: " + to_string(mode) + "\n";
  return o;
}

Outcome axioms(const RunConfig& cfg) {
  AxiomOptions opts;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  const AxiomTable iso = check_axioms(Semantics::iso, cfg.alpha, opts);
  const AxiomTable mag = check_axioms(Semantics::magnitude, cfg.alpha, opts);

  Outcome o;
  o.code = iso.passed() == static_cast<int>(iso.rows.size()) ? exit_code::ok : exit_code::violated;
  o.results = {{"iso", to_json(iso)}, {"magnitude", to_json(mag)}};
  o.diagnostics["note"] = "magnitude rows that fail are expected divergences for alpha < 1";

  std::ostringstream t;
  t << "alpha = " << num(cfg.alpha) << ", trials = " << cfg.trials << ", seed = " << cfg.seed
    << ", relative tolerance = " << num(opts.relative_tolerance) << "\n";
  std::size_t width = 9;
  for (const AxiomRow& row : iso.rows) {
    width = std::max(width, row.statement.size());
  }
  const auto pad = [](std::string s, std::size_t n) {
    s.resize(std::max(n, s.size()), ' ');
    return s;
  };
  t << pad("property", 10) << pad("statement", width + 2) << pad("iso", 7) << "magnitude\n";
  for (std::size_t i = 0; i < iso.rows.size(); ++i) {
    t << pad(std::to_string(iso.rows[i].property), 10) << pad(iso.rows[i].statement, width + 2)
      << pad(iso.rows[i].holds ? "PASS" : "FAIL", 7) << (mag.rows[i].holds ? "PASS" : "DIVERGES") << "\n";
  }
  t << "iso: " << iso.passed() << "/" << iso.rows.size() << " magnitude: " << mag.passed() << "/"
    << mag.rows.size() << "\n";
  o.text = t.str();
  return o;
}

int sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<SweepRow> rows = run_sweep(cfg);
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *cfg.out << "\n";
      return exit_code::config;
    }
    write_csv(file, rows);
  } else {
    write_csv(out, rows);
  }
  const auto errors = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.error(); });
  if (errors > 0) {
    err << "sweep: " << errors << " of " << rows.size() << " rows failed\n";
    return exit_code::numeric;
  }
  return exit_code::ok;
}

Outcome dispatch(Command cmd, const RunConfig& cfg) {
  switch (cmd) {
  case Command::certify: return certify(cfg);
  case Command::hh: return hh(cfg);
  case Command::fejer: return fejer(cfg);
  case Command::integrate: return integrate(cfg);
  case Command::diff: return diff(cfg);
  case Command::axioms: return axioms(cfg);
  case Command::sweep: break;
  }
  throw std::logic_error("sweep is not dispatched here");
}

int emit(Command cmd, const RunConfig& cfg, const Outcome& o, std::ostream& out, std::ostream& err) {
  const std::string body =
      cfg.json ? envelope(cmd, cfg, o.results, o.diagnostics).dump(2) + "\n" : o.text;
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *cfg.out << "\n";
      return exit_code::config;
    }
    file << body;
  } else {
    out << body;
  }
  return o.code;
}

} // namespace

int run(Command cmd, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg, cmd);
    if (cmd == Command::sweep) {
      return sweep(cfg, out, err);
    }
    return emit(cmd, cfg, dispatch(cmd, cfg), out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::config;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::config;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << "\n";
    return exit_code::config;
  } catch (const NotPolynomialError& e) {
    err << "error: " << e.what() << " (use --backend rl)\n";
    return exit_code::config;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::config;
  } catch (const std::exception& e) {
    err << "error: numeric failure: " << e.what() << "\n";
    return exit_code::numeric;
  }
}

} // namespace fracon::cli
