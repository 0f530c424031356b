#pragma once

#include <string>
#include <variant>

#include "eur/types.hpp"

namespace eur::oracle {

struct StateAngle {
  double phi;  // |psi> = (cos phi, sin phi) in the A eigenbasis
};

using Argmin = std::variant<ProbPair, StateAngle>;

/// Result of a brute-force minimization checked against a closed form.
struct OracleReport {
  double c;
  double oracle_min;
  double analytic_ref;
  double gap;  // oracle_min - analytic_ref
  Argmin argmin;
  std::string resolution;
};

}  // namespace eur::oracle
