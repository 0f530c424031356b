#include "eur/constraint.hpp"

#include <cmath>

#include "eur/entropy.hpp"

namespace eur {
namespace {

void require_on_curve(double p_a, const Overlap& c) {
  if (!(p_a >= c.c2() && p_a <= 1.0)) {
    throw DomainError("p_a must lie in [c^2, 1] for the saturated constraint");
  }
}

double p_b_raw(double p_a, const Overlap& c) {
  const double root = c.s() * std::sqrt(1.0 - p_a) + c.c() * std::sqrt(p_a);
  return root * root;
}

}  // namespace

MaxProb p_b_of_p_a(MaxProb p_a, Overlap c) {
  require_on_curve(p_a.value(), c);
  return MaxProb(std::min(1.0, p_b_raw(p_a.value(), c)));
}

double p_b_complement(double p_a, Overlap c) {
  require_on_curve(p_a, c);
  // sqrt(1 - P_B) = sqrt(p_a (1-c^2)) - c sqrt(1-p_a), rationalized.
  const double denom = std::sqrt(p_a) * c.s() + c.c() * std::sqrt(1.0 - p_a);
  const double root = (p_a - c.c2()) / denom;
  return root * root;
}

AdmissibleInterval admissible_interval(Overlap c) {
  if (c.c() < kInvSqrt2) {
    const double sum = c.c() + c.s();
    return {0.5, sum * sum / 2.0};
  }
  return {c.c2(), 1.0};
}

double m1_objective(MaxProb p_a, Overlap c) {
  const auto interval = admissible_interval(c);
  if (!interval.contains(p_a.value())) {
    throw DomainError("p_a must lie in the admissible interval");
  }
  return detail::m1_objective_raw(p_a.value(), c);
}

namespace detail {

double m1_objective_raw(double p_a, const Overlap& c) {
  const double p_b = p_b_raw(p_a, c);
  const double q_b = p_b_complement(p_a, c);
  return binary_entropy(p_a) + binary_entropy(std::min(p_b, 1.0), q_b);
}

}  // namespace detail
}  // namespace eur
