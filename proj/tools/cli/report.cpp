#include "cli/report.hpp"

#include "cli/presets.hpp"

namespace fracon::cli {

namespace {

Json necessary_json(const NecessaryCondition& c) {
  Json j;
  j["holds"] = c.holds;
  j["worst_margin"] = c.worst_margin;
  j["worst_x"] = c.worst_x;
  j["worst_y"] = c.worst_y;
  return j;
}

} // namespace

const char* version() noexcept { return FRACON_VERSION; }

const char* status_word(ConvexityStatus s) noexcept {
  return s == ConvexityStatus::violated ? "VIOLATED" : "NO_VIOLATION_FOUND";
}

Json config_echo(Command cmd, const RunConfig& cfg) {
  Json j;
  j["command"] = to_string(cmd);
  if (cmd == Command::axioms) {
    j["alpha"] = cfg.alpha;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    return j;
  }
  if (cmd != Command::sweep) {
    j["alpha"] = cfg.alpha;
  }
  j["c"] = cfg.c;
  j["interval"] = Json::array({cfg.a, cfg.b});
  if (cmd == Command::sweep) {
    j["sweep"] = {{"alphas", cfg.sweep.alphas}, {"cs", cfg.sweep.cs},       {"etas", cfg.sweep.etas},
                  {"fs", cfg.sweep.fs},         {"budget", cfg.sweep.budget}, {"threads", cfg.sweep.threads}};
  } else {
    j["f"] = resolve_function(cfg.f);
  }
  if (cmd == Command::certify || cmd == Command::hh || cmd == Command::fejer) {
    j["eta"] = resolve_eta(cfg.eta);
  }
  if (cmd == Command::fejer) {
    j["w"] = cfg.w;
  }
  if (cmd == Command::certify || cmd == Command::sweep) {
    j["grid"] = cfg.grid;
    j["refine"] = cfg.refine;
  }
  if (cmd == Command::diff) {
    j["at"] = cfg.at;
  }
  j["backend"] = to_string(cfg.backend);
  j["meta"] = cfg.meta ? Json(*cfg.meta) : Json(nullptr);
  return j;
}

Json envelope(Command cmd, const RunConfig& cfg, Json results, Json diagnostics) {
  Json j;
  j["version"] = version();
  j["config_echo"] = config_echo(cmd, cfg);
  j["results"] = std::move(results);
  j["diagnostics"] = std::move(diagnostics);
  return j;
}

Json to_json(const Link& l) {
  Json j;
  j["status"] = to_string(l.status);
  j["gap"] = l.gap;
  j["tolerance"] = l.tolerance;
  return j;
}

Json to_json(const ConvexityReport& r) {
  Json j;
  j["status"] = status_word(r.status);
  j["min_defect"] = r.min_defect;
  j["argmin"] = {{"x", r.argmin_x}, {"y", r.argmin_y}, {"t", r.argmin_t}};
  if (r.witness) {
    const Counterexample& w = *r.witness;
    j["witness"] = {{"x", w.x},           {"y", w.y},           {"t", w.t},
                    {"lhs", w.lhs.value()}, {"rhs", w.rhs.value()}, {"defect", w.defect}};
  } else {
    j["witness"] = nullptr;
  }
  j["tolerance"] = r.tolerance;
  j["grid_n"] = r.grid_n;
  j["refine_depth"] = r.refine_depth;
  j["refinement_levels"] = r.refinement_levels;
  j["evaluations"] = r.evaluations;
  j["short_circuited"] = r.short_circuited;
  j["necessary"] = {{"diagonal", necessary_json(r.necessary.diagonal)},
                    {"difference", necessary_json(r.necessary.difference)},
                    {"tolerance", r.necessary.tolerance}};
  return j;
}

Json to_json(const HHReport& r) {
  Json j;
  j["T1"] = r.T1.value();
  j["T2"] = r.T2.value();
  j["T3"] = r.T3.value();
  j["T4"] = r.T4.value();
  j["A"] = r.A;
  j["B"] = r.B;
  j["M_eta"] = r.m_eta;
  j["M_eta_source"] = to_string(r.m_eta_source);
  j["A1"] = r.A1.value();
  j["A2"] = r.A2.value();
  j["integral"] = r.integral.value();
  j["eta_ab"] = r.eta_ab;
  j["eta_ba"] = r.eta_ba;
  j["links"] = Json::array({to_json(r.links[0]), to_json(r.links[1]), to_json(r.links[2])});
  j["all_hold"] = r.all_hold();
  j["backend"] = to_string(r.backend);
  return j;
}

Json to_json(const FejerReport& r) {
  Json j;
  j["F1"] = r.F1.value();
  j["F2"] = r.F2.value();
  j["F3"] = r.F3.value();
  j["L_eta"] = r.L_eta.value();
  j["R_eta"] = r.R_eta.value();
  j["m0"] = r.m0.value();
  j["m1"] = r.m1.value();
  j["m2"] = r.m2.value();
  j["m3"] = r.m3.value();
  j["links"] = Json::array({to_json(r.links[0]), to_json(r.links[1])});
  j["all_hold"] = r.all_hold();
  j["backend"] = to_string(r.backend);
  j["max_asymmetry"] = r.max_asymmetry;
  return j;
}

Json to_json(const AxiomTable& t) {
  Json rows = Json::array();
  for (const AxiomRow& row : t.rows) {
    Json jr;
    jr["property"] = row.property;
    jr["statement"] = row.statement;
    jr["holds"] = row.holds;
    jr["max_relative_error"] = row.max_relative_error;
    jr["witness"] = row.witness ? Json(*row.witness) : Json(nullptr);
    rows.push_back(std::move(jr));
  }
  Json j;
  j["semantics"] = to_string(t.semantics);
  j["alpha"] = t.alpha;
  j["trials"] = t.trials;
  j["passed"] = t.passed();
  j["rows"] = std::move(rows);
  return j;
}

} // namespace fracon::cli
