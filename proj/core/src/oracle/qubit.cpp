#include "eur/oracle/qubit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "eur/entropy.hpp"
#include "eur/oracle/parallel.hpp"
#include "eur/vs_bound.hpp"

namespace eur::oracle {
namespace {

double wrap_angle(double phi) {
  phi = std::fmod(phi, std::numbers::pi);
  return phi < 0.0 ? phi + std::numbers::pi : phi;
}

// Golden-section search for a minimum of f on [a, b].
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double x = (a + b) / 2.0;
  return {x, f(x)};
}

}  // namespace

double qubit_entropy_sum(double phi, Overlap c) {
  const double ca = std::cos(phi);
  const double sa = std::sin(phi);
  const double cb = std::cos(c.theta() - phi);
  const double sb = std::sin(c.theta() - phi);
  return binary_entropy(ca * ca, sa * sa) + binary_entropy(cb * cb, sb * sb);
}

OracleReport qubit_min(Overlap c, const QubitOptions& opts) {
  if (c.c() < kInvSqrt2) {
    throw DomainError("qubit oracle requires c >= 1/sqrt(2): no qubit basis pair has a smaller overlap");
  }
  if (opts.coarse_points < 2) throw DomainError("qubit oracle needs at least 2 coarse points");

  const auto n = static_cast<std::size_t>(opts.coarse_points);
  const double step = std::numbers::pi / static_cast<double>(n);
  const unsigned parts = detail::resolve_partitions(opts.partitions, n);

  struct Best {
    double value = std::numeric_limits<double>::infinity();
    std::size_t k = 0;
  };
  std::vector<Best> partial(parts);
  detail::for_each_partition(n, parts, [&](unsigned part, std::size_t begin, std::size_t end) {
    Best best;
    for (std::size_t k = begin; k < end; ++k) {
      const double v = qubit_entropy_sum(static_cast<double>(k) * step, c);
      if (v < best.value) best = {v, k};
    }
    partial[part] = best;
  });
  Best coarse;
  for (const auto& b : partial) {
    if (b.value < coarse.value || (b.value == coarse.value && b.k < coarse.k)) coarse = b;
  }

  const double center = static_cast<double>(coarse.k) * step;
  auto [phi, value] = golden_min([&](double x) { return qubit_entropy_sum(x, c); },
                                 center - step, center + step, opts.phi_tol);
  if (!(value < coarse.value)) {
    phi = center;
    value = coarse.value;
  }

  std::ostringstream resolution;
  resolution << n << " coarse + golden section to " << opts.phi_tol;
  const double ref = b_vs(c).nats;
  return {c.c(), value, ref, value - ref, StateAngle{wrap_angle(phi)}, resolution.str()};
}

}  // namespace eur::oracle
