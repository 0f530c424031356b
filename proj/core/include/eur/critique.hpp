#pragma once

#include <string_view>
#include <vector>

#include "eur/types.hpp"

namespace eur {

/// Residual of the trigonometric stationarity equation obtained with
/// P_A = cos^2(alpha), P_B = cos^2(theta - alpha):
///   sin(2a) ln((1+cos 2a)/(1-cos 2a))
///     + sin(2(a-t)) ln((1+cos 2(a-t)) / (2(1-cos^2(a-t)))).
/// Throws DomainError at alpha = theta/2, theta/2 + pi/4 or where a log
/// argument is not positive.
double eqsin_residual(double alpha, double theta);

inline constexpr double kEqsinDefaultStep = 1e-4;

/// All roots of eqsin_residual in (-pi/4, pi/2), excluding theta/2 and
/// theta/2 + pi/4 together with 1e-6 neighbourhoods. Sign changes on a grid
/// of `scan_step` are refined to 1e-12; roots closer than scan_step are merged.
std::vector<double> eqsin_roots(double theta, double scan_step = kEqsinDefaultStep);

enum class Violation { None, MultiplicityRange, AdmissibleInterval, OverlapIdentity };

std::string_view violation_label(Violation v) noexcept;

struct CritiqueRoot {
  double alpha;
  double residual;
  ProbPair probs;          // (cos^2 alpha, cos^2(theta - alpha))
  double implied_overlap;  // sqrt(P_A P_B) - sqrt((1-P_A)(1-P_B))
  bool admissible;
  Violation violated;      // first failing check, in the order listed in Violation
};

struct CritiqueReport {
  double c;
  double theta;
  AdmissibleInterval interval;
  std::vector<CritiqueRoot> roots;

  [[nodiscard]] bool all_inadmissible() const noexcept;
};

/// Maps every nontrivial stationary angle to (P_A, P_B) and checks it
/// against the multiplicity-one range, the admissible interval for P_A and
/// the overlap identity. Requires 0 < c < 1/sqrt2.
CritiqueReport critique_report(Overlap c, double scan_step = kEqsinDefaultStep);

}  // namespace eur
