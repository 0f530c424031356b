#include "eur/root.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "eur/error.hpp"

namespace eur {

// Classic zeroin: b is the current best estimate, a the previous one and
// [b, c] always brackets the root.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     const RootOptions& opts) {
  if (!(lo < hi)) throw BracketError("find_root requires lo < hi");
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (std::isnan(fa) || std::isnan(fb)) throw BracketError("function is NaN at a bracket end");
  if (fa == 0.0) return {a, a, a, 0.0, 0};
  if (fb == 0.0) return {b, b, b, 0.0, 0};
  if ((fa > 0.0) == (fb > 0.0)) {
    throw BracketError("root not bracketed: f(lo) and f(hi) have the same sign");
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;

  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * eps * std::abs(b) + 0.5 * opts.abs_tol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0 || std::abs(fb) <= opts.residual_tol) {
      const auto [blo, bhi] = b < c ? std::pair{b, c} : std::pair{c, b};
      return {b, blo, bhi, fb, iter};
    }

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;  // secant
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));  // inverse quadratic
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
    if (std::isnan(fb)) throw ConvergenceError("function returned NaN inside the bracket");
  }
  throw ConvergenceError("find_root did not converge within " + std::to_string(opts.max_iter) +
                         " iterations");
}

}  // namespace eur
