#include "eur/critique.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "eur/constraint.hpp"
#include "eur/root.hpp"

namespace eur {
namespace {

constexpr double kExclusionRadius = 1e-6;
constexpr double kRootTol = 1e-12;
constexpr double kResidualTol = 1e-10;
constexpr double kIdentityTol = 1e-9;

// sin(2x) ln(cot^2 x); (1+cos 2x)/(1-cos 2x) is written as cos^2/sin^2.
double stationarity_term(double x) {
  const double cos_x = std::cos(x);
  const double sin_x = std::sin(x);
  const double num = cos_x * cos_x;
  const double den = sin_x * sin_x;
  if (!(num > 0.0 && den > 0.0)) {
    throw DomainError("eqsin_residual: logarithm argument is not positive");
  }
  return std::sin(2.0 * x) * std::log(num / den);
}

bool near_excluded(double alpha, double theta, double radius) {
  return std::abs(alpha - theta / 2.0) <= radius ||
         std::abs(alpha - (theta / 2.0 + std::numbers::pi / 4.0)) <= radius;
}

double residual_or_nan(double alpha, double theta) {
  try {
    return eqsin_residual(alpha, theta);
  } catch (const DomainError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

double eqsin_residual(double alpha, double theta) {
  if (near_excluded(alpha, theta, 4.0 * std::numeric_limits<double>::epsilon())) {
    throw DomainError("eqsin_residual: alpha must differ from theta/2 and theta/2 + pi/4");
  }
  return stationarity_term(alpha) + stationarity_term(alpha - theta);
}

std::vector<double> eqsin_roots(double theta, double scan_step) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2.0)) {
    throw DomainError("eqsin_roots requires 0 < theta < pi/2");
  }
  if (!(scan_step > 0.0)) throw DomainError("scan step must be positive");

  const double start = -std::numbers::pi / 4.0;
  const double stop = std::numbers::pi / 2.0;
  const auto f = [theta](double a) { return eqsin_residual(a, theta); };

  std::vector<double> roots;
  double prev_alpha = std::numeric_limits<double>::quiet_NaN();
  double prev_value = std::numeric_limits<double>::quiet_NaN();
  for (long k = 1;; ++k) {
    const double alpha = start + static_cast<double>(k) * scan_step;
    if (alpha >= stop) break;
    const double value = residual_or_nan(alpha, theta);
    if (std::isnan(value)) continue;
    if (!std::isnan(prev_value) && (prev_value < 0.0) != (value < 0.0)) {
      try {
        const auto r = find_root(f, prev_alpha, alpha, {.abs_tol = kRootTol});
        if (!near_excluded(r.root, theta, kExclusionRadius) &&
            std::abs(eqsin_residual(r.root, theta)) <= kResidualTol) {
          roots.push_back(r.root);
        }
      } catch (const DomainError&) {
        // The refinement landed on a point where a logarithm is singular.
      }
    }
    prev_alpha = alpha;
    prev_value = value;
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> distinct;
  for (double r : roots) {
    if (distinct.empty() || r - distinct.back() >= scan_step) distinct.push_back(r);
  }
  return distinct;
}

std::string_view violation_label(Violation v) noexcept {
  switch (v) {
    case Violation::None: return "none";
    case Violation::MultiplicityRange: return "multiplicity_range";
    case Violation::AdmissibleInterval: return "admissible_interval";
    case Violation::OverlapIdentity: return "overlap_identity";
  }
  return "?";
}

bool CritiqueReport::all_inadmissible() const noexcept {
  return std::all_of(roots.begin(), roots.end(),
                     [](const CritiqueRoot& r) { return !r.admissible; });
}

CritiqueReport critique_report(Overlap c, double scan_step) {
  if (!(c.c() < kInvSqrt2)) throw DomainError("critique requires 0 < c < 1/sqrt(2)");

  CritiqueReport report{c.c(), c.theta(), admissible_interval(c), {}};
  for (double alpha : eqsin_roots(c.theta(), scan_step)) {
    const double cos_a = std::cos(alpha);
    const double cos_b = std::cos(c.theta() - alpha);
    const ProbPair probs{cos_a * cos_a, cos_b * cos_b};
    const double implied =
        std::sqrt(probs.p_a * probs.p_b) - std::sqrt((1.0 - probs.p_a) * (1.0 - probs.p_b));

    Violation violated = Violation::None;
    const auto in_m1_range = [](double p) { return p > 0.5 && p <= 1.0; };
    if (!in_m1_range(probs.p_a) || !in_m1_range(probs.p_b)) {
      violated = Violation::MultiplicityRange;
    } else if (!report.interval.contains(probs.p_a)) {
      violated = Violation::AdmissibleInterval;
    } else if (std::abs(implied - c.c()) > kIdentityTol) {
      violated = Violation::OverlapIdentity;
    }
    report.roots.push_back({alpha, eqsin_residual(alpha, c.theta()), probs, implied,
                            violated == Violation::None, violated});
  }
  return report;
}

}  // namespace eur
