#include "eur/entropy.hpp"

#include <cmath>

namespace eur {
namespace {

// x ln x with the 0 ln 0 = 0 convention.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability must lie in [0, 1]");
  // Work from the larger probability; its complement is exact, so
  // binary_entropy(p) and binary_entropy(1 - p) see the same pair.
  const double big = p >= 0.5 ? p : 1.0 - p;
  return binary_entropy(1.0 - big, big);
}

double binary_entropy(double p, double q) {
  if (!(p >= 0.0 && q >= 0.0)) throw DomainError("probabilities must be nonnegative");
  return -xlogx(p) - xlogx(q);
}

Multiplicity multiplicity_of(MaxProb prob) {
  const double p = prob.value();
  // Start from floor(1/p) and settle on the integer with m p <= 1 < (m+1) p
  // as evaluated in floating point, so exact reciprocals map to m.
  auto m = static_cast<long long>(std::floor(1.0 / p));
  if (m < 1) m = 1;
  while (static_cast<double>(m) * p > 1.0 && m > 1) --m;
  while (static_cast<double>(m + 1) * p <= 1.0) ++m;
  return Multiplicity(static_cast<int>(m));
}

double h_min(MaxProb prob) {
  const double p = prob.value();
  const double m = multiplicity_of(prob).m;
  const double mp = m * p;
  const double rest = 1.0 - mp;
  return -mp * std::log(p) - (rest > 0.0 ? rest * std::log(rest) : 0.0);
}

}  // namespace eur
