#include "eur/sign_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eur/constraint.hpp"

namespace eur {
namespace {

// Point on the saturated constraint with both complements computed directly.
struct CurvePoint {
  double p_a, q_a, p_b, q_b;
};

CurvePoint curve_point(double p_a, const Overlap& c) {
  const double root = c.s() * std::sqrt(1.0 - p_a) + c.c() * std::sqrt(p_a);
  const double q_b = p_b_complement(p_a, c);
  return {p_a, 1.0 - p_a, std::min(root * root, 1.0), q_b};
}

double logit(double p, double q) {
  if (!(p > 0.0 && q > 0.0)) throw SingularValueError("logarithm of a nonpositive ratio");
  return std::log(p / q);
}

// sqrt(p q) ln(p/q), the building block of E and of the multiplier.
double weighted_logit(double p, double q) { return std::sqrt(p * q) * logit(p, q); }

// 2 sqrt(p q) ln(p/q) - (q - p)/sqrt(p q), the per-side term of N.
double n_term(double p, double q) {
  const double root = std::sqrt(p * q);
  return 2.0 * root * logit(p, q) - (q - p) / root;
}

void require_interior(double p_a, const Overlap& c) {
  const auto interval = admissible_interval(c);
  if (!(p_a - interval.lo >= kEndpointGuard && interval.hi - p_a >= kEndpointGuard)) {
    throw DomainError(
        "p_a must lie strictly inside the admissible interval (at least 1e-9 from either end); "
        "use the closed-form endpoint limits instead");
  }
}

}  // namespace

namespace detail {

double e1_raw(double p_a, const Overlap& c) {
  const auto pt = curve_point(p_a, c);
  return weighted_logit(pt.p_b, pt.q_b) - weighted_logit(pt.p_a, pt.q_a);
}

double k_raw(double p_a, const Overlap& c) {
  const auto pt = curve_point(p_a, c);
  return (pt.q_b - pt.p_b) * logit(pt.p_b, pt.q_b) + (pt.q_a - pt.p_a) * logit(pt.p_a, pt.q_a) +
         4.0;
}

double n_raw(double p_a, const Overlap& c) {
  const auto pt = curve_point(p_a, c);
  return n_term(pt.p_b, pt.q_b) - n_term(pt.p_a, pt.q_a);
}

}  // namespace detail

double e_function(MaxProb p_a, Overlap c, Multiplicity m) {
  require_interior(p_a.value(), c);
  if (m.m == 1) return detail::e1_raw(p_a.value(), c);

  const auto pt = curve_point(p_a.value(), c);
  const double rest = pt.q_b - (m.m - 1) * pt.p_b;  // 1 - M P_B
  return m.m * std::sqrt(pt.p_b * pt.q_b) * logit(pt.p_b, rest) -
         weighted_logit(pt.p_a, pt.q_a);
}

double k_function(MaxProb p_a, Overlap c) {
  require_interior(p_a.value(), c);
  return detail::k_raw(p_a.value(), c);
}

double n_function(MaxProb p_a, Overlap c) {
  require_interior(p_a.value(), c);
  return detail::n_raw(p_a.value(), c);
}

double r_function(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("r_function requires 0 < x < 1");
  const double q = 1.0 - x;
  return std::log(x / q) + (q - x) / (2.0 * x * q);
}

double k_endpoint_value(Overlap c) {
  if (c.c() >= kInvSqrt2) throw DomainError("k_endpoint_value requires 0 < c < 1/sqrt(2)");
  const double plus = c.s() + c.c();
  const double minus = c.s() - c.c();
  const double one_minus_s = minus * minus;  // 1 - 2c sqrt(1-c^2)
  if (one_minus_s <= 1e-15) return -std::numeric_limits<double>::infinity();
  const double s = 2.0 * c.c() * c.s();
  return -s * 2.0 * std::log(plus / minus) + 4.0;
}

double k_max_value(Overlap c) {
  if (c.c() == 1.0) return -std::numeric_limits<double>::infinity();
  return -2.0 * c.c() * std::log((1.0 + c.c()) / (1.0 - c.c())) + 4.0;
}

EndpointLimits e1_endpoint_limits(Overlap c) {
  const double sq = c.s();
  double lower = 0.0;
  if (c.c() < kInvSqrt2) {
    // sqrt(P(1-P)) at P = (1+s)/2 is (1-2c^2)/2 and ln(P/(1-P)) is twice the log below.
    lower = (sq - c.c()) * (sq + c.c()) * std::log((sq + c.c()) / (sq - c.c()));
  } else if (sq > 0.0) {
    lower = -c.c() * sq * std::log(c.c2() / (sq * sq));
  }
  return {lower, -lower};
}

double kkt_multiplier(MaxProb prob) {
  const double p = prob.value();
  if (!(p > 0.5 && p < 1.0)) throw DomainError("kkt_multiplier requires 1/2 < p < 1");
  return 2.0 * weighted_logit(p, 1.0 - p);
}

KktMultipliers kkt_multipliers(MaxProb p_a, Overlap c) {
  const auto interval = admissible_interval(c);
  if (!interval.contains_open(p_a.value())) {
    throw DomainError("p_a must lie inside the admissible interval");
  }
  const auto pt = curve_point(p_a.value(), c);
  return {2.0 * weighted_logit(pt.p_a, pt.q_a), 2.0 * weighted_logit(pt.p_b, pt.q_b)};
}

}  // namespace eur
