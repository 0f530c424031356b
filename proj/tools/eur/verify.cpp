#include <algorithm>
#include <cmath>
#include <sstream>

#include <eur/bounds.hpp>
#include <eur/critique.hpp>
#include <eur/error.hpp>
#include <eur/oracle/grid.hpp>
#include <eur/oracle/qubit.hpp>
#include <eur/oracle/random_states.hpp>
#include <eur/oracle/shape.hpp>

#include "eur/cli.hpp"
#include "eur/commands.hpp"
#include "eur/format.hpp"

namespace eur::cli {
namespace {

struct Tally {
  int passed = 0;
  int failed = 0;

  void line(std::ostream& out, bool ok, const std::string& text) {
    out << (ok ? "PASS " : "FAIL ") << text << '\n';
    ++(ok ? passed : failed);
  }
};

std::string num(double v) { return format_number(v); }

std::vector<double> or_default(const std::vector<double>& given, std::vector<double> defaults) {
  return given.empty() ? defaults : given;
}

void grid_suite(const VerifyOptions& opts, Tally& tally, std::ostream& out) {
  const double tol = opts.tol.value_or(2e-3);
  oracle::GridOptions grid_opts;
  grid_opts.points_per_axis = opts.grid;
  for (double cv : or_default(opts.c_values, {0.75, 0.8, 0.9, 0.99, 0.3, 0.5, 0.65})) {
    const Overlap c(cv);
    const oracle::OracleReport r = oracle::grid_min(c, grid_opts);
    std::ostringstream text;
    text << "grid c=" << num(cv) << " grid_min=" << num(r.oracle_min);
    bool ok = false;
    if (cv >= kInvSqrt2) {
      ok = std::abs(r.gap) <= tol;
      text << " b_vs=" << num(r.analytic_ref) << " gap=" << num(r.gap);
    } else {
      const double mu = b_mu(c);
      ok = r.oracle_min <= r.analytic_ref + tol && r.oracle_min < mu;
      text << " m_inf=" << num(r.analytic_ref) << " gap=" << num(r.gap) << " b_mu=" << num(mu);
    }
    text << " tol=" << num(tol) << " resolution=" << r.resolution;
    tally.line(out, ok, text.str());
  }
}

void qubit_suite(const VerifyOptions& opts, Tally& tally, std::ostream& out) {
  const double tol = opts.tol.value_or(1e-6);
  for (double cv : or_default(opts.c_values, {0.71, 0.75, 0.80, 0.8336, 0.87, 0.95, 0.99})) {
    const oracle::OracleReport r = oracle::qubit_min(Overlap(cv));
    std::ostringstream text;
    text << "qubit c=" << num(cv) << " qubit_min=" << num(r.oracle_min)
         << " b_vs=" << num(r.analytic_ref) << " gap=" << num(r.gap) << " tol=" << num(tol);
    tally.line(out, std::abs(r.gap) <= tol, text.str());
  }
}

void delta_m_inf_checks(Tally& tally, std::ostream& out) {
  const int samples = 1000;
  double prev = 0.0;
  double min_delta = INFINITY;
  bool decreasing = true;
  int first_bad = -1;
  for (int k = 1; k <= samples; ++k) {
    const Overlap c(kInvSqrt2 * k / (samples + 1));
    const double delta = b_mu(c) - m_inf(c);
    min_delta = std::min(min_delta, delta);
    if (k > 1 && !(delta < prev) && decreasing) {
      decreasing = false;
      first_bad = k;
    }
    prev = delta;
  }
  tally.line(out, min_delta > 0.0,
             "shape delta_m_inf_positive samples=" + std::to_string(samples) +
                 " min=" + num(min_delta));
  tally.line(out, decreasing,
             "shape delta_m_inf_decreasing samples=" + std::to_string(samples) +
                 (decreasing ? std::string() : " first_violation=" + std::to_string(first_bad)));
  std::ostringstream info;
  info << "INFO shape delta_m_inf near 1/sqrt2:";
  for (int k = 3; k <= 8; ++k) {
    const Overlap c(kInvSqrt2 - std::pow(10.0, -k));
    info << " k=" << k << ':' << num(b_mu(c) - m_inf(c));
  }
  info << " (limit is 0, not ln 2)";
  out << info.str() << '\n';
}

void shape_suite(const VerifyOptions& opts, Tally& tally, std::ostream& out) {
  for (double cv : or_default(opts.c_values, {0.5, 0.8, 0.9})) {
    const oracle::ShapeSummary s = oracle::shape_check(Overlap(cv));
    for (const auto& clause : s.clauses) {
      std::string text = "shape c=" + num(cv) + ' ' + clause.name;
      if (!clause.detail.empty()) text += ' ' + clause.detail;
      tally.line(out, clause.passed, text);
    }
  }
  delta_m_inf_checks(tally, out);
}

void random_suite(const VerifyOptions& opts, Tally& tally, std::ostream& out) {
  const double tol = opts.tol.value_or(oracle::kBoundSlack);
  for (int dim = 2; dim <= 5; ++dim) {
    const oracle::RandomCheckSummary s = oracle::random_state_check(dim, 10000, opts.seed);
    std::ostringstream text;
    text << "random dim=" << dim << " samples=" << s.samples << " seed=" << s.seed
         << " violations=" << s.violations << " min_margin=" << num(s.min_margin)
         << " at_sample=" << s.min_margin_sample << " overlap_range=[" << num(s.min_overlap)
         << ", " << num(s.max_overlap) << "] tol=" << num(tol);
    tally.line(out, s.min_margin >= -tol, text.str());
  }
}

void critique_suite(const VerifyOptions& opts, Tally& tally, std::ostream& out) {
  for (double cv : or_default(opts.c_values, {0.3, 0.5, 0.6})) {
    const Overlap c(cv);
    if (!(cv < kInvSqrt2)) throw DomainError("critique requires an overlap in (0, 1/sqrt2)");
    const CritiqueReport report = critique_report(c);
    for (const auto& r : report.roots) {
      out << "INFO critique c=" << num(cv) << " alpha=" << num(r.alpha)
          << " p_a=" << num(r.probs.p_a) << " p_b=" << num(r.probs.p_b) << " interval=("
          << num(report.interval.lo) << ", " << num(report.interval.hi)
          << ") violated=" << violation_label(r.violated) << '\n';
    }
    std::ostringstream text;
    text << "critique c=" << num(cv) << " roots=" << report.roots.size()
         << " all_inadmissible=" << (report.all_inadmissible() ? "true" : "false");
    tally.line(out, !report.roots.empty() && report.all_inadmissible(), text.str());
  }
}

}  // namespace

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  using Suite = void (*)(const VerifyOptions&, Tally&, std::ostream&);
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"grid", grid_suite},   {"qubit", qubit_suite},       {"shape", shape_suite},
      {"random", random_suite}, {"critique", critique_suite},
  };
  Tally tally;
  bool matched = false;
  for (const auto& [name, fn] : suites) {
    if (opts.suite == name || opts.suite == "all") {
      fn(opts, tally, out);
      matched = true;
    }
  }
  if (!matched) throw DomainError("unknown suite: " + opts.suite);
  out << "verify " << opts.suite << ": " << tally.passed << " passed, " << tally.failed
      << " failed\n";
  return tally.failed == 0 ? kOk : kVerification;
}

}  // namespace eur::cli
