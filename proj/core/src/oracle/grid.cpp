#include "eur/oracle/grid.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/entropy.hpp"
#include "eur/oracle/parallel.hpp"
#include "eur/vs_bound.hpp"

namespace eur::oracle {
namespace {

// Tolerance on the Landau-Pollak test so boundary points are not lost to rounding.
constexpr double kFeasibilitySlack = 1e-12;

struct Axis {
  std::vector<double> p;
  std::vector<double> entropy;  // h_min(p)
  std::vector<double> angle;    // arccos sqrt(p)
};

// Axis values num / den for num in [first, last], restricted to (0, 1].
Axis make_axis(long long first, long long last, long long den) {
  Axis axis;
  for (long long num = std::max(first, 1LL); num <= std::min(last, den); ++num) {
    const double p = static_cast<double>(num) / static_cast<double>(den);
    axis.p.push_back(p);
    axis.entropy.push_back(h_min(MaxProb(p)));
    axis.angle.push_back(std::acos(std::sqrt(p)));
  }
  return axis;
}

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  std::size_t j = 0;

  // Lexicographic on (value, i, j): the merge is independent of partitioning.
  [[nodiscard]] bool better_than(const Best& o) const {
    if (value != o.value) return value < o.value;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

Best scan(const Axis& a, const Axis& b, double theta, unsigned partitions) {
  const std::size_t rows = a.p.size();
  const unsigned parts = detail::resolve_partitions(partitions, rows);
  std::vector<Best> partial(parts);
  detail::for_each_partition(rows, parts, [&](unsigned part, std::size_t begin, std::size_t end) {
    Best best;
    const double threshold = theta - kFeasibilitySlack;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < b.p.size(); ++j) {
        if (a.angle[i] + b.angle[j] < threshold) continue;
        const double v = a.entropy[i] + b.entropy[j];
        if (v < best.value) best = {v, i, j};
      }
    }
    partial[part] = best;
  });
  Best best;
  for (const auto& p : partial) {
    if (p.better_than(best)) best = p;
  }
  return best;
}

}  // namespace

OracleReport grid_min(Overlap c, const GridOptions& opts) {
  if (opts.points_per_axis < 100) throw DomainError("grid oracle needs at least 100 points per axis");
  const long long den = opts.points_per_axis - 1;
  const Axis coarse = make_axis(1, den, den);
  const Best coarse_best = scan(coarse, coarse, c.theta(), opts.partitions);
  if (!std::isfinite(coarse_best.value)) throw VerificationError("grid oracle found no feasible point");

  double best_value = coarse_best.value;
  ProbPair argmin{coarse.p[coarse_best.i], coarse.p[coarse_best.j]};
  std::string resolution =
      std::to_string(opts.points_per_axis) + "x" + std::to_string(opts.points_per_axis);

  if (opts.refine) {
    // Nested fine lattice num / (den * factor) around the coarse argmin.
    const long long factor = opts.refine_factor;
    const long long half = static_cast<long long>(opts.refine_halfwidth) * factor;
    const long long fine_den = den * factor;
    const long long ia = static_cast<long long>(coarse_best.i + 1) * factor;
    const long long ib = static_cast<long long>(coarse_best.j + 1) * factor;
    const Axis fa = make_axis(ia - half, ia + half, fine_den);
    const Axis fb = make_axis(ib - half, ib + half, fine_den);
    const Best fine_best = scan(fa, fb, c.theta(), opts.partitions);
    if (fine_best.value < best_value) {
      best_value = fine_best.value;
      argmin = {fa.p[fine_best.i], fb.p[fine_best.j]};
    }
    resolution += " + local " + std::to_string(fa.p.size()) + "x" + std::to_string(fb.p.size()) +
                  " at 1/" + std::to_string(fine_den);
  }

  const double ref = c.c() >= kInvSqrt2 ? b_vs(c).nats : m_inf(c);
  return {c.c(), best_value, ref, best_value - ref, argmin, resolution};
}

}  // namespace eur::oracle
