#include "eur/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "eur/entropy.hpp"

namespace eur {

double b_mu(Overlap c) { return -2.0 * std::log(c.c()); }

double f_bound(Overlap overlap) {
  const double c = overlap.c();
  const double up = 1.0 + c;
  const double down = 1.0 - c;  // exact for c >= 1/2
  double value = -up * std::log(up / 2.0);
  if (down > 0.0) value -= down * std::log(down / 2.0);
  return std::max(0.0, value);
}

double g_bound(Overlap overlap) {
  const double c2 = overlap.c2();
  auto k = static_cast<long long>(std::floor(1.0 / c2));
  if (k < 1) k = 1;
  while (static_cast<double>(k) * c2 > 1.0 && k > 1) --k;
  while (static_cast<double>(k + 1) * c2 <= 1.0) ++k;
  const double mass = static_cast<double>(k) * c2;
  const double rest = 1.0 - mass;
  return -mass * std::log(c2) - (rest > 0.0 ? rest * std::log(rest) : 0.0);
}

double lattice_bound(Overlap overlap) {
  const double c = overlap.c();
  if (c == 1.0) return 0.0;
  const double c2 = c * c;
  // Smallest M >= 2 with M c^2 >= 1, i.e. 1/sqrt(M) <= c < 1/sqrt(M-1).
  auto m = static_cast<long long>(std::ceil(1.0 / c2));
  m = std::max(m, 2LL);
  while (m > 2 && static_cast<double>(m - 1) * c2 >= 1.0) --m;
  while (static_cast<double>(m) * c2 < 1.0) ++m;
  return std::log(static_cast<double>(m));
}

double m_inf(Overlap overlap) {
  const double c = overlap.c();
  if (c > kInvSqrt2) throw DomainError("m_inf is defined for 0 < c <= 1/sqrt(2)");
  const double s = overlap.s();
  // 1 +- 2c sqrt(1-c^2) = (sqrt(1-c^2) +- c)^2, free of cancellation near 1/sqrt2.
  const double plus = (s + c) * (s + c) / 2.0;
  const double minus = (s - c) * (s - c) / 2.0;
  return -plus * std::log(plus / 2.0) - (minus > 0.0 ? minus * std::log(minus / 2.0) : 0.0);
}

double eqc_overlap(MaxProb p_a, MaxProb p_b) {
  const double a = p_a.value();
  const double b = p_b.value();
  return std::sqrt(a * b) - std::sqrt((1.0 - a) * (1.0 - b));
}

double ineq_c_max(Multiplicity m_a, Multiplicity m_b) {
  const double a = m_a.m;
  const double b = m_b.m;
  return (1.0 - (a - 1.0) * (b - 1.0)) / std::sqrt(a * b);
}

double ineq_c_max_corollary(Multiplicity m_a, Multiplicity m_b) {
  return 1.0 / std::sqrt(static_cast<double>(std::max(m_a.m, m_b.m)));
}

}  // namespace eur
