#include "cli/sweep.hpp"

#include "cli/format.hpp"
#include "cli/presets.hpp"
#include "cli/report.hpp"

#include <fracon/errors.hpp>

#include <atomic>
#include <thread>

namespace fracon::cli {

namespace {

std::string num(double v) { return format_number(v, 12); }

} // namespace

SweepRow sweep_row(const RunConfig& cfg, double alpha, double c, const std::string& eta_id, const std::string& f_id) {
  SweepRow row;
  row.alpha = alpha;
  row.c = c;
  row.eta_id = eta_id;
  row.f_id = f_id;
  row.a = cfg.a;
  row.b = cfg.b;
  try {
    const Bindings constants{{"c", c}};
    const AlphaContext ctx(alpha);
    const FunctionSpec f(Expr::parse(resolve_function(f_id), 1, constants), Interval(cfg.a, cfg.b));
    const EtaSpec eta(Expr::parse(resolve_eta(eta_id), 2, constants));
    InequalityOptions options;
    options.backend = to_kind(cfg.backend);
    options.m_eta = cfg.meta;
    row.hh = hh_terms(f, eta, c, cfg.a, cfg.b, ctx, options);
    row.convexity = certify_gsc(f, eta, c, ctx, cfg.grid, cfg.refine);
  } catch (const std::exception& e) {
    row.hh.reset();
    row.convexity.reset();
    row.message = e.what();
  }
  return row;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  struct Job {
    double alpha;
    double c;
    const std::string* eta;
    const std::string* f;
  };
  const SweepSpec& s = cfg.sweep;
  std::vector<Job> jobs;
  jobs.reserve(s.rows());
  for (const double alpha : s.alphas) {
    for (const double c : s.cs) {
      for (const auto& eta : s.etas) {
        for (const auto& f : s.fs) {
          jobs.push_back({alpha, c, &eta, &f});
        }
      }
    }
  }

  std::vector<SweepRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      rows[i] = sweep_row(cfg, jobs[i].alpha, jobs[i].c, *jobs[i].eta, *jobs[i].f);
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, s.threads));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(threads, jobs.size()); ++t) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << num(r.alpha) << ',' << num(r.c) << ',' << csv_cell(r.eta_id) << ',' << csv_cell(r.f_id) << ','
        << num(r.a) << ',' << num(r.b) << ',';
    if (r.error()) {
      out << ",,,,,,,,,,ERROR," << csv_cell(r.message) << '\n';
      continue;
    }
    const HHReport& h = *r.hh;
    out << num(h.T1.value()) << ',' << num(h.T2.value()) << ',' << num(h.T3.value()) << ',' << num(h.T4.value())
        << ',' << num(h.A1.value()) << ',' << num(h.A2.value()) << ',' << to_string(h.links[0].status) << ','
        << to_string(h.links[1].status) << ',' << to_string(h.links[2].status) << ','
        << num(r.convexity->min_defect) << ',' << status_word(r.convexity->status) << ',' << '\n';
  }
}

} // namespace fracon::cli
