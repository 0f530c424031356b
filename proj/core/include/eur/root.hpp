#pragma once

#include <functional>

namespace eur {

struct RootOptions {
  double abs_tol = 1e-13;       // on the argument
  double residual_tol = 0.0;    // stop early once |f(x)| <= residual_tol
  int max_iter = 200;
};

struct RootResult {
  double root;
  double bracket_lo;  // final bracket, lo <= root <= hi
  double bracket_hi;
  double residual;    // f(root)
  int iterations;
};

/// Brent's method: inverse quadratic / secant steps safeguarded by
/// bisection. Works for either sign orientation of f(lo), f(hi).
/// Throws BracketError if f(lo) and f(hi) share a sign, ConvergenceError if
/// max_iter is exhausted.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     const RootOptions& opts = {});

}  // namespace eur
