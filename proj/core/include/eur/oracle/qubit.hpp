#pragma once

#include "eur/oracle/report.hpp"

namespace eur::oracle {

struct QubitOptions {
  int coarse_points = 100000;
  double phi_tol = 1e-10;
  unsigned partitions = 0;
};

/// H(A) + H(B) for the qubit state (cos phi, sin phi) when the B basis is
/// the A basis rotated by theta = arccos c.
double qubit_entropy_sum(double phi, Overlap c);

/// Exact minimum of the entropy sum over two-dimensional pure states:
/// coarse scan of phi in [0, pi) followed by golden-section refinement.
/// Requires c >= 1/sqrt2, the smallest overlap a qubit basis pair can have.
OracleReport qubit_min(Overlap c, const QubitOptions& opts = {});

}  // namespace eur::oracle
