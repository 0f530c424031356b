#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <eur/types.hpp>
#include <eur/vs_bound.hpp>

namespace eur::cli {

/// One sample of every bound at a given overlap; entropies in nats.
struct SweepRow {
  double c;
  double theta;
  double b_mu;
  double f;
  double g;
  double lattice;
  std::optional<double> m_inf;  // only for c < 1/sqrt2
  std::optional<double> h1;     // only for 1/sqrt2 <= c <= c*
  double b_vs;
  RegionTag region;
  std::optional<ProbPair> witness;
};

SweepRow compute_row(Overlap c);

/// Divides every entropy column by ln 2.
SweepRow to_bits(SweepRow row);

inline constexpr const char* kSweepHeader = "c,theta,b_mu,f,g,lattice,m_inf,h1,b_vs,region";

std::string csv_line(const SweepRow& row);

struct SweepRange {
  double from;
  double to;
  double step;
};

/// Sample overlaps from + k*step, k = 0..n-1, n = floor((to-from)/step + 1e-9) + 1.
/// Throws DomainError unless 0 < from < to <= 1 and step > 0.
std::vector<double> sweep_points(const SweepRange& range);

int cmd_eval(double c, bool bits, bool json, std::ostream& out);
int cmd_constants(bool json, std::ostream& out);
int cmd_sweep(const SweepRange& range, const std::optional<std::string>& path, bool bits,
              std::ostream& out);
int cmd_critique(double c, bool json, std::ostream& out);

struct VerifyOptions {
  std::string suite;
  std::vector<double> c_values;  // empty: suite defaults
  std::optional<double> tol;     // empty: suite default
  int grid = 2001;
  std::uint64_t seed = 20240607;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out);

}  // namespace eur::cli
