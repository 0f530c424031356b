#pragma once

#include "eur/types.hpp"

namespace eur {

/// P_B as a function of P_A on the saturated Landau-Pollak curve:
/// (sqrt((1-c^2)(1-p_a)) + c sqrt(p_a))^2. Requires c^2 <= p_a <= 1.
/// The map is an involution on the admissible interval.
MaxProb p_b_of_p_a(MaxProb p_a, Overlap c);

/// 1 - P_B(p_a) evaluated without cancellation:
/// ((p_a - c^2) / (sqrt(p_a (1-c^2)) + c sqrt(1-p_a)))^2.
double p_b_complement(double p_a, Overlap c);

/// Range of P_A for which both P_A and P_B(P_A) have multiplicity one.
/// The boundary c = 1/sqrt(2) belongs to the (c^2, 1) branch.
AdmissibleInterval admissible_interval(Overlap c);

/// binary_entropy(p_a) + binary_entropy(P_B(p_a)) along the saturated
/// constraint. p_a must lie in the closed admissible interval.
double m1_objective(MaxProb p_a, Overlap c);

namespace detail {
// Unchecked kernel: p_a in [c^2, 1].
double m1_objective_raw(double p_a, const Overlap& c);
}  // namespace detail

}  // namespace eur
