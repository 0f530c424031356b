#pragma once

#include <optional>
#include <string_view>

#include "eur/root.hpp"
#include "eur/types.hpp"

namespace eur {

/// Critical overlap where the asymmetric (H1) and symmetric (F) branches
/// merge: the root of c ln((1+c)/(1-c)) = 2 on (1/sqrt2, 1). Computed once
/// per process; every region decision uses this memoized value.
const RootResult& c_star();

/// Uncached solve of the same equation.
RootResult solve_c_star();

/// Overlap at which the symmetric maximum F(c) crosses the MU bound:
/// root of f_bound(c) - b_mu(c) on (0.1, 1/sqrt2).
RootResult c_dagger();

enum class RegionTag { Mu, H1, F };

std::string_view region_name(RegionTag tag) noexcept;

struct Region {
  RegionTag tag;
  double c_star;
  double lower_boundary;  // 1/sqrt2
  double upper_boundary;  // c*
};

/// MuRegion for c < 1/sqrt2, H1Region for 1/sqrt2 <= c < c*, FRegion otherwise.
Region classify_region(Overlap c);

struct H1Result {
  double value;      // nats
  ProbPair witness;  // (r, P_B(r)), r < (1+c)/2
  int iterations;
};

/// Minimum of the M = 1 objective for 1/sqrt2 <= c <= c*, attained at the
/// asymmetric zero of E_1 below (1+c)/2 (and, symmetrically, at its image).
H1Result h1_solve(Overlap c);

double h1_bound(Overlap c);

struct BoundReport {
  std::string_view name;
  double nats;
  RegionTag region;
  std::optional<ProbPair> witness;
};

/// Piecewise improved bound: -2 ln c, H1(c) or F(c) by region.
BoundReport b_vs(Overlap c);

}  // namespace eur
