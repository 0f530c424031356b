#pragma once

#include "eur/oracle/report.hpp"

namespace eur::oracle {

struct GridOptions {
  int points_per_axis = 2001;
  bool refine = true;
  int refine_factor = 100;    // fine step = coarse step / refine_factor
  int refine_halfwidth = 10;  // fine window: +- this many coarse steps
  unsigned partitions = 0;    // 0: one per hardware thread
};

/// Minimizes h_min(P_A) + h_min(P_B) over the grid P = i/(n-1), i = 1..n-1,
/// on both axes, keeping only points that satisfy the Landau-Pollak
/// inequality arccos sqrt(P_A) + arccos sqrt(P_B) >= arccos c. All
/// multiplicities are allowed. An optional finer pass is run around the
/// coarse argmin.
///
/// The reference is b_vs(c) for c >= 1/sqrt2 and m_inf(c) below, where the
/// relaxed infimum has no closed form.
OracleReport grid_min(Overlap c, const GridOptions& opts = {});

}  // namespace eur::oracle
