#pragma once

#include "eur/oracle/report.hpp"

namespace eur::oracle {

/// Evaluates the boundary families of the minimization: (1, c^2), worth
/// g_bound(c), and the lattice points (1/M_A, 1/M_B), worth lattice_bound(c).
/// Returns their minimum against b_vs(c). Requires 1/sqrt2 < c <= 1; throws
/// VerificationError if the minimum falls below b_vs(c).
OracleReport boundary_case_min(Overlap c);

}  // namespace eur::oracle
