#include "eur/oracle/shape.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "eur/constraint.hpp"
#include "eur/sign_analysis.hpp"
#include "eur/vs_bound.hpp"

namespace eur::oracle {
namespace {

constexpr double kInset = 1e-9;           // relative to the interval width
constexpr double kSymmetryTol = 1e-8;
constexpr double kCurvatureStep = 1e-4;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Strict sign changes along a sequence, skipping exact zeros.
int count_sign_changes(const std::vector<double>& values) {
  int changes = 0;
  int last = 0;
  for (double v : values) {
    const int s = sign_of(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::string at(double x) {
  std::ostringstream os;
  os.precision(12);
  os << "P_A=" << x;
  return os.str();
}

}  // namespace

bool ShapeSummary::passed() const noexcept {
  return std::all_of(clauses.begin(), clauses.end(), [](const ShapeClause& cl) { return cl.passed; });
}

int count_e1_sign_changes(Overlap c, double step) {
  const auto interval = admissible_interval(c);
  std::vector<double> values;
  for (long k = 1;; ++k) {
    const double p = interval.lo + static_cast<double>(k) * step;
    if (p >= interval.hi) break;
    values.push_back(detail::e1_raw(p, c));
  }
  return count_sign_changes(values);
}

int expected_e1_zeros(Overlap c) {
  return (c.c() > kInvSqrt2 && c.c() < c_star().root) ? 3 : 1;
}

ShapeSummary shape_check(Overlap c, int grid) {
  if (grid < 1000) throw DomainError("shape_check needs at least 1000 grid points");
  if (c.c() >= 1.0) throw DomainError("shape_check requires c < 1 (the interval is empty at c = 1)");

  const auto interval = admissible_interval(c);
  const double lo = interval.lo;
  const double width = interval.width();
  const double mid = (1.0 + c.c()) / 2.0;

  std::vector<double> xs(static_cast<std::size_t>(grid));
  std::vector<double> n_vals(xs.size()), k_vals(xs.size()), e_vals(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = lo + width * static_cast<double>(i + 1) / static_cast<double>(grid + 1);
    n_vals[i] = detail::n_raw(xs[i], c);
    k_vals[i] = detail::k_raw(xs[i], c);
    e_vals[i] = detail::e1_raw(xs[i], c);
  }

  ShapeSummary out{c.c(), grid, count_sign_changes(e_vals), expected_e1_zeros(c),
                   Extremum::Flat, {}};

  // (a) N strictly decreasing, one sign change, located at (1+c)/2.
  {
    ShapeClause clause{"n_decreasing_unique_zero", true, ""};
    for (std::size_t i = 0; i + 1 < xs.size() && clause.passed; ++i) {
      if (!(n_vals[i + 1] < n_vals[i])) {
        clause = {clause.name, false, "N not decreasing at " + at(xs[i + 1])};
      }
    }
    if (clause.passed) {
      if (count_sign_changes(n_vals) != 1) {
        clause = {clause.name, false, "N has more than one sign change"};
      } else {
        const auto it = std::find_if(n_vals.begin(), n_vals.end(), [](double v) { return v <= 0.0; });
        const auto idx = static_cast<std::size_t>(it - n_vals.begin());
        const double left = idx == 0 ? lo : xs[idx - 1];
        if (!(left <= mid && mid <= xs[idx])) {
          clause = {clause.name, false, "N changes sign away from (1+c)/2, near " + at(xs[idx])};
        }
      }
    }
    out.clauses.push_back(clause);
  }

  // (b) K increasing up to (1+c)/2 and decreasing after it.
  {
    ShapeClause clause{"k_unimodal", true, ""};
    for (std::size_t i = 0; i + 1 < xs.size() && clause.passed; ++i) {
      if (xs[i + 1] <= mid && !(k_vals[i + 1] > k_vals[i])) {
        clause = {clause.name, false, "K not increasing at " + at(xs[i + 1])};
      } else if (xs[i] >= mid && !(k_vals[i + 1] < k_vals[i])) {
        clause = {clause.name, false, "K not decreasing at " + at(xs[i + 1])};
      }
    }
    out.clauses.push_back(clause);
  }

  // (c) K has the same limit at both ends.
  {
    ShapeClause clause{"k_endpoint_symmetry", true, ""};
    const double eps = kInset * width;
    if (c.c() < kInvSqrt2) {
      const double k_lo = detail::k_raw(lo + eps, c);
      const double k_hi = detail::k_raw(interval.hi - eps, c);
      const double limit = k_endpoint_value(c);
      if (std::abs(k_lo - k_hi) > kSymmetryTol || std::abs(k_lo - limit) > kSymmetryTol) {
        std::ostringstream os;
        os.precision(12);
        os << "K(lo+eps)=" << k_lo << " K(hi-eps)=" << k_hi << " limit=" << limit;
        clause = {clause.name, false, os.str()};
      }
    } else {
      // Both one-sided limits are -infinity: K must fall without bound at
      // either end, and K(p) = K(P_B(p)) pairs points near opposite ends.
      double prev_lo = detail::k_raw(lo + 1e-3 * width, c);
      double prev_hi = detail::k_raw(interval.hi - 1e-3 * width, c);
      for (double rel : {1e-6, 1e-9}) {
        const double k_lo = detail::k_raw(lo + rel * width, c);
        const double k_hi = detail::k_raw(interval.hi - rel * width, c);
        if (!(k_lo < prev_lo && k_hi < prev_hi)) {
          clause = {clause.name, false, "K does not diverge towards the ends at inset " +
                                            std::to_string(rel)};
        }
        prev_lo = k_lo;
        prev_hi = k_hi;
      }
      const double p = lo + 1e-3 * width;
      const double mirror = p_b_of_p_a(MaxProb(p), c).value();
      const double k_p = detail::k_raw(p, c);
      const double k_m = detail::k_raw(mirror, c);
      if (std::abs(k_p - k_m) > kSymmetryTol * std::max(1.0, std::abs(k_p))) {
        clause = {clause.name, false, "K(p) != K(P_B(p)) at " + at(p)};
      }
    }
    out.clauses.push_back(clause);
  }

  // (d) Number of zeros of E_1.
  {
    ShapeClause clause{"e1_sign_changes", out.e1_sign_changes == out.expected_e1_sign_changes, ""};
    clause.detail = "found " + std::to_string(out.e1_sign_changes) + ", expected " +
                    std::to_string(out.expected_e1_sign_changes);
    out.clauses.push_back(clause);
  }

  // (e) Character of the symmetric stationary point.
  {
    const double m0 = detail::m1_objective_raw(mid, c);
    const double m_left = detail::m1_objective_raw(mid - kCurvatureStep, c);
    const double m_right = detail::m1_objective_raw(mid + kCurvatureStep, c);
    if (m_left < m0 && m_right < m0) out.m1_character = Extremum::Maximum;
    else if (m_left > m0 && m_right > m0) out.m1_character = Extremum::Minimum;

    const Extremum expected = c.c() < c_star().root ? Extremum::Maximum : Extremum::Minimum;
    const double second_diff = m_left - 2.0 * m0 + m_right;
    const bool curvature_ok =
        expected == Extremum::Maximum ? second_diff < 0.0 : second_diff > 0.0;
    ShapeClause clause{"m1_extremum_character", out.m1_character == expected && curvature_ok, ""};
    std::ostringstream os;
    os.precision(6);
    os << "second difference " << second_diff << ", expected "
       << (expected == Extremum::Maximum ? "maximum" : "minimum");
    clause.detail = os.str();
    out.clauses.push_back(clause);
  }

  return out;
}

}  // namespace eur::oracle
