#pragma once

#include "eur/types.hpp"

namespace eur {

// Auxiliary functions that carry the sign of successive derivatives of the
// M = 1 objective along the saturated constraint:
//
//   d M_1 / dP_A = E_1 / sqrt(P_A (1-P_A))
//   d E_1 / dP_A = -K / (2 sqrt(P_A (1-P_A)))
//   d K   / dP_A = N / sqrt(P_A (1-P_A))
//
// The public evaluators require P_A strictly inside the admissible interval,
// at least kEndpointGuard away from either end. Use the *_limits helpers for
// endpoint values.

/// E_M(P_A) = M sqrt(P_B(1-P_B)) ln(P_B/(1 - M P_B)) - sqrt(P_A(1-P_A)) ln(P_A/(1-P_A)).
double e_function(MaxProb p_a, Overlap c, Multiplicity m);

/// K(P_A) = (1-2P_B) ln(P_B/(1-P_B)) + (1-2P_A) ln(P_A/(1-P_A)) + 4.
double k_function(MaxProb p_a, Overlap c);

/// N(P_A); strictly decreasing with its only zero at (1+c)/2.
double n_function(MaxProb p_a, Overlap c);

/// R(x) = ln(x/(1-x)) + (1-2x)/(2x(1-x)); negative on (1/2, 1).
double r_function(double x);

/// Common value of K at both ends of the interval for c < 1/sqrt(2):
/// -s ln((1+s)/(1-s)) + 4 with s = 2c sqrt(1-c^2). Returns -infinity once
/// s >= 1 - 1e-15.
double k_endpoint_value(Overlap c);

/// Value of K at (1+c)/2, its maximum: -2c ln((1+c)/(1-c)) + 4.
double k_max_value(Overlap c);

struct EndpointLimits {
  double at_lower;
  double at_upper;
};

/// Closed-form one-sided limits of E_1 at P_A^- and P_A^+ (they are opposite).
EndpointLimits e1_endpoint_limits(Overlap c);

/// Lagrange multiplier of the Landau-Pollak constraint recovered from the
/// stationarity condition with M = 1: 2 sqrt(p(1-p)) ln(p/(1-p)), p in (1/2, 1).
double kkt_multiplier(MaxProb p);

struct KktMultipliers {
  double a_side;
  double b_side;
};

/// Multipliers recovered from the A and B stationarity equations at
/// (p_a, P_B(p_a)). They agree exactly when E_1(p_a) = 0.
KktMultipliers kkt_multipliers(MaxProb p_a, Overlap c);

namespace detail {
// Unchecked kernels shared with the solvers and oracles. p_a must lie
// strictly inside the closed interval [c^2, 1] with 1 - P_B > 0.
double e1_raw(double p_a, const Overlap& c);
double k_raw(double p_a, const Overlap& c);
double n_raw(double p_a, const Overlap& c);
}  // namespace detail

}  // namespace eur
