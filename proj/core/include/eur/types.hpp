#pragma once

#include <cmath>
#include <numbers>

#include "eur/error.hpp"

namespace eur {

inline constexpr double kLn2 = std::numbers::ln2;
// 1/sqrt(2) rounded to nearest; the H1 region starts here.
inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
// Inputs to the singular auxiliary functions must stay this far from the
// ends of the admissible interval; limits are available in closed form.
inline constexpr double kEndpointGuard = 1e-9;

/// Overlap c = max |<a_i|b_j>| between the eigenbases of two observables,
/// together with the angle theta = arccos(c). Construction validates
/// 0 < c <= 1.
class Overlap {
 public:
  explicit Overlap(double c) : c_(c) {
    if (!(c > 0.0 && c <= 1.0)) {
      throw DomainError("overlap must lie in (0, 1]");
    }
    theta_ = std::acos(c);
  }

  static Overlap from_angle(double theta) {
    if (!(theta >= 0.0 && theta < std::numbers::pi / 2.0)) {
      throw DomainError("overlap angle must lie in [0, pi/2)");
    }
    Overlap o(std::cos(theta));
    o.theta_ = theta;
    return o;
  }

  [[nodiscard]] double c() const noexcept { return c_; }
  [[nodiscard]] double theta() const noexcept { return theta_; }
  [[nodiscard]] double c2() const noexcept { return c_ * c_; }
  // sqrt(1 - c^2); (1 - c) is exact for c >= 1/2.
  [[nodiscard]] double s() const noexcept { return std::sqrt((1.0 - c_) * (1.0 + c_)); }

 private:
  double c_;
  double theta_ = 0.0;
};

/// Largest outcome probability P_I of a distribution, 0 < p <= 1.
class MaxProb {
 public:
  explicit MaxProb(double p) : p_(p) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw DomainError("maximum probability must lie in (0, 1]");
    }
  }
  [[nodiscard]] double value() const noexcept { return p_; }

 private:
  double p_;
};

/// Number of repeated maximal probabilities in the entropy-minimizing
/// distribution for a fixed maximum probability.
struct Multiplicity {
  int m = 1;

  explicit Multiplicity(int value) : m(value) {
    if (value < 1) throw DomainError("multiplicity must be a positive integer");
  }
  friend bool operator==(Multiplicity, Multiplicity) = default;
};

/// Open interval (P_A^-, P_A^+) of maximum probabilities for which the
/// saturated Landau-Pollak constraint admits multiplicity one on both sides.
struct AdmissibleInterval {
  double lo;
  double hi;

  [[nodiscard]] double width() const noexcept { return hi - lo; }
  [[nodiscard]] bool contains(double p) const noexcept { return p >= lo && p <= hi; }
  [[nodiscard]] bool contains_open(double p) const noexcept { return p > lo && p < hi; }
};

struct ProbPair {
  double p_a;
  double p_b;
};

inline double to_bits(double nats) noexcept { return nats / kLn2; }

}  // namespace eur
