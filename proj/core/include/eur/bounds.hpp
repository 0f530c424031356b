#pragma once

#include "eur/types.hpp"

namespace eur {

// Closed-form bound functions of the overlap. All values in nats.

/// Maassen-Uffink bound -2 ln c.
double b_mu(Overlap c);

/// Entropy sum at the symmetric stationary point P_A = P_B = (1+c)/2:
/// -(1+c) ln((1+c)/2) - (1-c) ln((1-c)/2). Equals 2 * binary_entropy((1+c)/2).
/// Results are clamped at zero; for c > 1 - 1e-12 the value is below 1e-10
/// and carries only a few significant digits.
double f_bound(Overlap c);

/// Entropy sum of the boundary candidate (P_A, P_B) = (1, c^2):
/// the entropy of (c^2, ..., c^2, 1 - k c^2) with k = floor(1/c^2).
double g_bound(Overlap c);

/// Minimal entropy sum over lattice points (1/M_A, 1/M_B): 0 at c = 1,
/// otherwise ln M with 1/sqrt(M) <= c < 1/sqrt(M-1).
double lattice_bound(Overlap c);

/// Endpoint infimum of the M = 1 objective for c < 1/sqrt(2):
/// ln 2 + binary_entropy((1 + s)/2) with s = 2 c sqrt(1 - c^2).
/// Defined on (0, 1/sqrt(2)]; the upper end is the limit value ln 2.
double m_inf(Overlap c);

/// Overlap implied by a saturated Landau-Pollak inequality:
/// sqrt(p_a p_b) - sqrt((1-p_a)(1-p_b)).
double eqc_overlap(MaxProb p_a, MaxProb p_b);

/// Largest overlap compatible with multiplicities (m_a, m_b):
/// (1 - (m_a-1)(m_b-1)) / sqrt(m_a m_b).
double ineq_c_max(Multiplicity m_a, Multiplicity m_b);

/// Corollary once one multiplicity is unity: 1/sqrt(max(m_a, m_b)).
double ineq_c_max_corollary(Multiplicity m_a, Multiplicity m_b);

}  // namespace eur
