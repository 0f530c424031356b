#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <eur/bounds.hpp>
#include <eur/entropy.hpp>
#include <eur/error.hpp>

#include "reference.hpp"

using namespace eur;

TEST(BMu, Examples) {
  EXPECT_EQ(b_mu(Overlap(1.0)), 0.0);
  EXPECT_NEAR(b_mu(Overlap(kInvSqrt2)), kLn2, 1e-15);
  EXPECT_NEAR(b_mu(Overlap(0.5)), 2 * kLn2, 1e-15);
}

TEST(FBound, Examples) {
  EXPECT_EQ(f_bound(Overlap(1.0)), 0.0);
  EXPECT_NEAR(f_bound(Overlap(kInvSqrt2)), ref::kFInvSqrt2, 1e-14);
  EXPECT_NEAR(f_bound(Overlap(0.9)), ref::kF09, 1e-14);
}

TEST(FBound, TwiceBinaryEntropyOfMidpoint) {
  for (int k = 1; k < 100; ++k) {
    const double c = k / 100.0;
    EXPECT_NEAR(f_bound(Overlap(c)), 2 * binary_entropy((1 + c) / 2), 1e-14) << c;
  }
}

TEST(GBound, Examples) {
  EXPECT_EQ(g_bound(Overlap(1.0)), 0.0);
  EXPECT_NEAR(g_bound(Overlap(0.9)), ref::kG09, 1e-14);
  EXPECT_NEAR(g_bound(Overlap(0.9)), binary_entropy(0.81), 1e-14);
  EXPECT_NEAR(g_bound(Overlap(0.8)), ref::kG08, 1e-14);
  EXPECT_NEAR(g_bound(Overlap(kInvSqrt2)), kLn2, 1e-14);
}

TEST(LatticeBound, Examples) {
  EXPECT_EQ(lattice_bound(Overlap(1.0)), 0.0);
  EXPECT_NEAR(lattice_bound(Overlap(0.8)), kLn2, 1e-15);
  EXPECT_NEAR(lattice_bound(Overlap(0.5)), std::log(4.0), 1e-15);
  EXPECT_NEAR(lattice_bound(Overlap(0.4)), std::log(7.0), 1e-15);
}

TEST(LatticeBound, MatchesDefiningInequality) {
  for (int k = 1; k < 1000; ++k) {
    const double c = k / 1000.0;
    const double v = lattice_bound(Overlap(c));
    const int m = static_cast<int>(std::lround(std::exp(v)));
    EXPECT_LE(1.0 / std::sqrt(m), c + 1e-15) << c;
    if (m > 1) EXPECT_LT(c, 1.0 / std::sqrt(m - 1)) << c;
  }
}

TEST(MInf, Examples) {
  EXPECT_NEAR(m_inf(Overlap(0.5)), ref::kMInf05, 1e-14);
  EXPECT_NEAR(m_inf(Overlap(0.6)), ref::kMInf06, 1e-14);
  EXPECT_NEAR(m_inf(Overlap(0.6)), kLn2 + binary_entropy(0.98), 1e-14);
  EXPECT_NEAR(m_inf(Overlap(1e-9)), 2 * kLn2, 1e-8);
  EXPECT_NEAR(m_inf(Overlap(kInvSqrt2)), kLn2, 1e-12);
  EXPECT_THROW(m_inf(Overlap(0.71)), DomainError);
}

TEST(MInf, IdentityWithBinaryEntropy) {
  for (int k = 1; k < 1000; ++k) {
    const double c = kInvSqrt2 * k / 1000.0;
    const double s = 2 * c * std::sqrt(1 - c * c);
    EXPECT_NEAR(m_inf(Overlap(c)), kLn2 + binary_entropy((1 + s) / 2), 1e-13) << c;
  }
}

TEST(EqcOverlap, Examples) {
  EXPECT_EQ(eqc_overlap(MaxProb(1.0), MaxProb(1.0)), 1.0);
  for (double c : {0.3, 0.6, 0.8, 0.95}) {
    EXPECT_NEAR(eqc_overlap(MaxProb((1 + c) / 2), MaxProb((1 + c) / 2)), c, 1e-15);
    EXPECT_NEAR(eqc_overlap(MaxProb(1.0), MaxProb(c * c)), c, 1e-15);
  }
}

TEST(IneqCMax, Examples) {
  EXPECT_EQ(ineq_c_max(Multiplicity(1), Multiplicity(1)), 1.0);
  EXPECT_EQ(ineq_c_max(Multiplicity(1), Multiplicity(4)), 0.5);
  EXPECT_EQ(ineq_c_max(Multiplicity(2), Multiplicity(2)), 0.0);
  EXPECT_LT(ineq_c_max(Multiplicity(3), Multiplicity(2)), 0.0);
  EXPECT_EQ(ineq_c_max_corollary(Multiplicity(1), Multiplicity(4)), 0.5);
  EXPECT_EQ(ineq_c_max_corollary(Multiplicity(9), Multiplicity(1)), 1.0 / 3.0);
}

TEST(IneqCMax, CorollaryAgreesWhenOneSideIsUnity) {
  for (int m = 1; m <= 30; ++m) {
    EXPECT_DOUBLE_EQ(ineq_c_max(Multiplicity(1), Multiplicity(m)),
                     ineq_c_max_corollary(Multiplicity(1), Multiplicity(m)));
    EXPECT_DOUBLE_EQ(ineq_c_max(Multiplicity(m), Multiplicity(1)),
                     ineq_c_max_corollary(Multiplicity(m), Multiplicity(1)));
  }
}

TEST(Types, OverlapValidation) {
  EXPECT_THROW(Overlap(0.0), DomainError);
  EXPECT_THROW(Overlap(1.5), DomainError);
  EXPECT_THROW(Overlap(std::nan("")), DomainError);
  EXPECT_NO_THROW(Overlap(1.0));
  EXPECT_THROW(MaxProb(0.0), DomainError);
  EXPECT_THROW(Multiplicity(0), DomainError);
  const Overlap o = Overlap::from_angle(std::numbers::pi / 3);
  EXPECT_NEAR(o.c(), 0.5, 1e-15);
  EXPECT_EQ(o.theta(), std::numbers::pi / 3);
}
