#include "eur/commands.hpp"

#include <cmath>
#include <fstream>

#include <eur/bounds.hpp>
#include <eur/critique.hpp>
#include <eur/error.hpp>

#include "eur/cli.hpp"
#include "eur/format.hpp"

namespace eur::cli {
namespace {

Value opt(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

std::string csv_cell(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

Document constants_document() {
  const RootResult& cs = c_star();
  const RootResult cd = c_dagger();
  const double cs_residual = cs.root * std::log((1.0 + cs.root) / (1.0 - cs.root)) - 2.0;
  const double cd_residual = f_bound(Overlap(cd.root)) - b_mu(Overlap(cd.root));
  Document doc;
  doc.fields = {
      {"c_star", cs.root},
      {"c_star_residual", cs_residual},
      {"c_star_bracket_lo", cs.bracket_lo},
      {"c_star_bracket_hi", cs.bracket_hi},
      {"c_star_iterations", static_cast<long long>(cs.iterations)},
      {"c_dagger", cd.root},
      {"c_dagger_residual", cd_residual},
      {"c_dagger_bracket_lo", cd.bracket_lo},
      {"c_dagger_bracket_hi", cd.bracket_hi},
      {"c_dagger_iterations", static_cast<long long>(cd.iterations)},
  };
  return doc;
}

}  // namespace

SweepRow compute_row(Overlap c) {
  SweepRow row{};
  row.c = c.c();
  row.theta = c.theta();
  row.b_mu = b_mu(c);
  row.f = f_bound(c);
  row.g = g_bound(c);
  row.lattice = lattice_bound(c);
  if (c.c() < kInvSqrt2) row.m_inf = m_inf(c);
  if (c.c() >= kInvSqrt2 && c.c() <= c_star().root) row.h1 = h1_bound(c);
  const BoundReport report = b_vs(c);
  row.b_vs = report.nats;
  row.region = report.region;
  row.witness = report.witness;
  return row;
}

SweepRow to_bits(SweepRow row) {
  row.b_mu = eur::to_bits(row.b_mu);
  row.f = eur::to_bits(row.f);
  row.g = eur::to_bits(row.g);
  row.lattice = eur::to_bits(row.lattice);
  if (row.m_inf) row.m_inf = eur::to_bits(*row.m_inf);
  if (row.h1) row.h1 = eur::to_bits(*row.h1);
  row.b_vs = eur::to_bits(row.b_vs);
  return row;
}

std::string csv_line(const SweepRow& row) {
  std::string line;
  line += format_number(row.c) + ',';
  line += format_number(row.theta) + ',';
  line += format_number(row.b_mu) + ',';
  line += format_number(row.f) + ',';
  line += format_number(row.g) + ',';
  line += format_number(row.lattice) + ',';
  line += csv_cell(row.m_inf) + ',';
  line += csv_cell(row.h1) + ',';
  line += format_number(row.b_vs) + ',';
  line += std::string(region_name(row.region));
  return line;
}

std::vector<double> sweep_points(const SweepRange& range) {
  if (!(range.from > 0.0 && range.from < range.to && range.to <= 1.0)) {
    throw DomainError("sweep range must satisfy 0 < from < to <= 1");
  }
  if (!(range.step > 0.0)) throw DomainError("sweep step must be positive");
  const double span = (range.to - range.from) / range.step;
  if (span > 1e7) throw DomainError("sweep step too small: more than 1e7 rows");
  const auto n = static_cast<long>(std::floor(span + 1e-9)) + 1;
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    points.push_back(std::min(range.from + static_cast<double>(k) * range.step, range.to));
  }
  return points;
}

int cmd_eval(double c_value, bool bits, bool json, std::ostream& out) {
  const Overlap c(c_value);
  SweepRow row = compute_row(c);
  if (bits) row = to_bits(row);
  Document doc;
  doc.fields = {
      {"c", row.c},
      {"theta", row.theta},
      {"unit", std::string(bits ? "bits" : "nats")},
      {"b_mu", row.b_mu},
      {"f", row.f},
      {"g", row.g},
      {"lattice", row.lattice},
      {"m_inf", opt(row.m_inf)},
      {"h1", opt(row.h1)},
      {"b_vs", row.b_vs},
      {"region", std::string(region_name(row.region))},
      {"witness_p_a", row.witness ? Value(row.witness->p_a) : Value(std::monostate{})},
      {"witness_p_b", row.witness ? Value(row.witness->p_b) : Value(std::monostate{})},
  };
  if (json) {
    write_json(out, doc);
  } else {
    write_text(out, doc);
  }
  return kOk;
}

int cmd_constants(bool json, std::ostream& out) {
  const Document doc = constants_document();
  if (json) {
    write_json(out, doc);
  } else {
    write_text(out, doc);
  }
  return kOk;
}

int cmd_sweep(const SweepRange& range, const std::optional<std::string>& path, bool bits,
              std::ostream& out) {
  const std::vector<double> points = sweep_points(range);
  std::string csv = std::string(kSweepHeader) + '\n';
  for (double c : points) {
    SweepRow row = compute_row(Overlap(c));
    if (bits) row = to_bits(row);
    csv += csv_line(row) + '\n';
  }
  if (!path) {
    out << csv;
    return kOk;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open output file: " + *path);
  file << csv;
  file.close();
  if (!file) throw DomainError("failed writing output file: " + *path);
  return kOk;
}

int cmd_critique(double c_value, bool json, std::ostream& out) {
  const Overlap c(c_value);
  if (!(c.c() < kInvSqrt2)) throw DomainError("critique requires an overlap in (0, 1/sqrt2)");
  const CritiqueReport report = critique_report(c);
  Document doc;
  doc.fields = {
      {"c", report.c},
      {"theta", report.theta},
      {"interval_lo", report.interval.lo},
      {"interval_hi", report.interval.hi},
      {"root_count", static_cast<long long>(report.roots.size())},
      {"all_inadmissible", report.all_inadmissible()},
  };
  doc.list_key = "roots";
  for (const auto& r : report.roots) {
    doc.items.push_back({
        {"alpha", r.alpha},
        {"residual", r.residual},
        {"p_a", r.probs.p_a},
        {"p_b", r.probs.p_b},
        {"implied_overlap", r.implied_overlap},
        {"admissible", r.admissible},
        {"violated", std::string(violation_label(r.violated))},
    });
  }
  if (json) {
    write_json(out, doc);
  } else {
    write_text(out, doc);
  }
  return kOk;
}

}  // namespace eur::cli
