#pragma once

#include <string>
#include <vector>

#include "eur/types.hpp"

namespace eur::oracle {

enum class Extremum { Maximum, Minimum, Flat };

struct ShapeClause {
  std::string name;
  bool passed;
  std::string detail;
};

struct ShapeSummary {
  double c;
  int grid;
  int e1_sign_changes;
  int expected_e1_sign_changes;
  Extremum m1_character;
  std::vector<ShapeClause> clauses;

  [[nodiscard]] bool passed() const noexcept;
};

/// Number of strict sign changes of E_1 on the grid lo + k*step,
/// k = 1, 2, ... strictly inside the admissible interval.
int count_e1_sign_changes(Overlap c, double step);

/// Expected number of zeros of E_1 inside the interval: 3 for
/// 1/sqrt2 < c < c*, otherwise 1.
int expected_e1_zeros(Overlap c);

/// Samples the open admissible interval at `grid` points and checks:
///  (a) N strictly decreasing with a single sign change at (1+c)/2;
///  (b) K increasing before (1+c)/2 and decreasing after;
///  (c) K takes the same value at both ends;
///  (d) E_1 sign-change count per region;
///  (e) M_1 has a maximum at (1+c)/2 for c < c* and a minimum above.
/// Failed clauses carry the offending sample in `detail`.
ShapeSummary shape_check(Overlap c, int grid = 10000);

}  // namespace eur::oracle
