#pragma once

#include "eur/types.hpp"

namespace eur {

/// -p ln p - (1-p) ln(1-p), with 0 ln 0 = 0. Throws DomainError for p outside [0, 1].
/// Symmetric bitwise: the pair is formed from max(p, 1-p), so for p below
/// 1/2 the small probability is 1 - fl(1-p). Use the two-argument form when
/// p is tiny and its own digits matter.
double binary_entropy(double p);

/// -p ln p - q ln q for a pair whose complement q = 1 - p was computed
/// independently (keeps precision when p is within rounding of 1).
double binary_entropy(double p, double q);

/// The integer m with 1/(m+1) < p <= 1/m. Exact reciprocals map to m.
Multiplicity multiplicity_of(MaxProb p);

/// Minimal Shannon entropy of a distribution whose largest probability is p:
/// the distribution (p, ..., p, 1 - m p, 0, ...) with m = multiplicity_of(p).
double h_min(MaxProb p);

}  // namespace eur
