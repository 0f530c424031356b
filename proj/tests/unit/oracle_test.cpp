#include <cmath>
#include <numbers>
#include <random>
#include <variant>

#include <gtest/gtest.h>

#include <eur/bounds.hpp>
#include <eur/error.hpp>
#include <eur/oracle/boundary.hpp>
#include <eur/oracle/grid.hpp>
#include <eur/oracle/qubit.hpp>
#include <eur/oracle/random_states.hpp>
#include <eur/oracle/shape.hpp>
#include <eur/vs_bound.hpp>

#include "reference.hpp"

using namespace eur;
using namespace eur::oracle;

TEST(Grid, MatchesBoundAboveInvSqrt2) {
  for (double c : {0.75, 0.8, 0.9, 0.99}) {
    const auto r = grid_min(Overlap(c));
    EXPECT_NEAR(r.oracle_min, b_vs(Overlap(c)).nats, 2e-3) << c;
    EXPECT_EQ(r.analytic_ref, b_vs(Overlap(c)).nats);
    EXPECT_GE(r.gap, -1e-12) << c;
  }
}

TEST(Grid, BelowMuBoundUnderInvSqrt2) {
  for (double c : {0.3, 0.5, 0.65}) {
    const auto r = grid_min(Overlap(c));
    EXPECT_LE(r.oracle_min, m_inf(Overlap(c)) + 2e-3) << c;
    EXPECT_LT(r.oracle_min, b_mu(Overlap(c))) << c;
    EXPECT_EQ(r.analytic_ref, m_inf(Overlap(c)));
  }
}

TEST(Grid, ArgminIsFeasible) {
  for (double c : {0.5, 0.8, 0.9}) {
    const auto r = grid_min(Overlap(c));
    const auto pair = std::get<ProbPair>(r.argmin);
    const double lhs = std::acos(std::sqrt(pair.p_a)) + std::acos(std::sqrt(pair.p_b));
    EXPECT_GE(lhs, std::acos(c) - 1e-12) << c;
  }
}

TEST(Grid, NestedGridsNeverIncrease) {
  for (double c : {0.5, 0.77, 0.9}) {
    GridOptions opts;
    opts.refine = false;
    opts.points_per_axis = 301;
    double prev = grid_min(Overlap(c), opts).oracle_min;
    for (int n : {601, 1201, 2401}) {
      opts.points_per_axis = n;
      const double v = grid_min(Overlap(c), opts).oracle_min;
      EXPECT_LE(v, prev + 1e-12) << c << ' ' << n;
      prev = v;
    }
  }
}

TEST(Grid, RefinementOnlyImproves) {
  GridOptions coarse;
  coarse.refine = false;
  GridOptions fine;
  for (double c : {0.65, 0.8, 0.8336}) {
    EXPECT_LE(grid_min(Overlap(c), fine).oracle_min, grid_min(Overlap(c), coarse).oracle_min);
  }
}

TEST(Grid, IndependentOfPartitionCount) {
  GridOptions opts;
  opts.points_per_axis = 801;
  opts.partitions = 1;
  const auto one = grid_min(Overlap(0.77), opts);
  for (unsigned parts : {2u, 3u, 7u}) {
    opts.partitions = parts;
    const auto many = grid_min(Overlap(0.77), opts);
    EXPECT_EQ(one.oracle_min, many.oracle_min);
    EXPECT_EQ(std::get<ProbPair>(one.argmin).p_a, std::get<ProbPair>(many.argmin).p_a);
    EXPECT_EQ(std::get<ProbPair>(one.argmin).p_b, std::get<ProbPair>(many.argmin).p_b);
  }
}

TEST(Grid, RejectsTinyGrid) {
  GridOptions opts;
  opts.points_per_axis = 50;
  EXPECT_THROW(grid_min(Overlap(0.8), opts), DomainError);
}

TEST(Qubit, Examples) {
  const auto one = qubit_min(Overlap(1.0));
  EXPECT_NEAR(one.oracle_min, 0.0, 1e-12);
  const auto r = qubit_min(Overlap(0.9));
  EXPECT_NEAR(r.oracle_min, ref::kF09, 1e-6);
  const double phi = std::get<StateAngle>(r.argmin).phi;
  const double half = std::acos(0.9) / 2;
  const double folded = std::fmod(phi, std::numbers::pi / 2);
  EXPECT_NEAR(std::min(std::abs(folded - half), std::abs(folded - (std::numbers::pi / 2 - half))),
              0.0, 1e-4);
  EXPECT_NEAR(qubit_min(Overlap(0.8)).oracle_min, h1_bound(Overlap(0.8)), 1e-6);
  EXPECT_THROW(qubit_min(Overlap(0.6)), DomainError);
}

TEST(Qubit, MatchesBoundAcrossRange) {
  const double lo = kInvSqrt2 + 1e-3, hi = 1 - 1e-3;
  for (int i = 0; i < 20; ++i) {
    const double c = lo + (hi - lo) * i / 19.0;
    const auto r = qubit_min(Overlap(c));
    EXPECT_NEAR(r.oracle_min, b_vs(Overlap(c)).nats, 1e-6) << c;
  }
}

TEST(Qubit, StatesSatisfyLandauPollak) {
  const double c = 0.8;
  const double theta = std::acos(c);
  for (int i = 0; i < 20000; ++i) {
    const double phi = std::numbers::pi * i / 20000.0;
    const double a = std::max(std::pow(std::cos(phi), 2), std::pow(std::sin(phi), 2));
    const double b =
        std::max(std::pow(std::cos(theta - phi), 2), std::pow(std::sin(theta - phi), 2));
    EXPECT_GE(std::acos(std::sqrt(a)) + std::acos(std::sqrt(b)), theta - 1e-12) << phi;
  }
}

TEST(Qubit, EntropySumAgainstExplicitProbabilities) {
  const double c = 0.75;
  const double theta = std::acos(c);
  for (double phi : {0.1, 0.5, 1.3, 2.9}) {
    const double a = std::pow(std::cos(phi), 2);
    const double b = std::pow(std::cos(phi - theta), 2);
    const auto h = [](double p) { return -p * std::log(p) - (1 - p) * std::log(1 - p); };
    EXPECT_NEAR(qubit_entropy_sum(phi, Overlap(c)), h(a) + h(b), 1e-14);
  }
}

TEST(Qubit, IndependentOfPartitionCount) {
  QubitOptions opts;
  opts.partitions = 1;
  const auto one = qubit_min(Overlap(0.77), opts);
  opts.partitions = 5;
  const auto five = qubit_min(Overlap(0.77), opts);
  EXPECT_EQ(one.oracle_min, five.oracle_min);
  EXPECT_EQ(std::get<StateAngle>(one.argmin).phi, std::get<StateAngle>(five.argmin).phi);
}

TEST(RandomStates, UnitaryAndNormalized) {
  std::mt19937_64 rng(7);
  for (int dim = 2; dim <= 6; ++dim) {
    const auto u = random_unitary(dim, rng);
    EXPECT_LT(unitarity_defect(u), 1e-13);
    const double c = measured_overlap(u);
    EXPECT_GE(c, 1 / std::sqrt(dim) - 1e-12);
    EXPECT_LE(c, 1.0 + 1e-12);
    const auto psi = random_state(dim, rng);
    double norm = 0;
    for (const auto& a : psi) norm += std::norm(a);
    EXPECT_NEAR(norm, 1.0, 1e-14);
  }
}

TEST(RandomStates, ShannonEntropy) {
  const double uniform[] = {0.25, 0.25, 0.25, 0.25};
  EXPECT_NEAR(shannon_entropy(uniform), std::log(4.0), 1e-15);
  const double degenerate[] = {1.0, 0.0, 1e-310};
  EXPECT_EQ(shannon_entropy(degenerate), 0.0);
}

TEST(RandomStates, EigenvectorOfA) {
  std::mt19937_64 rng(11);
  GeneralState s{{1.0, 0.0, 0.0}, random_unitary(3, rng)};
  const double sum = entropy_sum(s);
  EXPECT_GE(sum, 0.0);
  EXPECT_GE(sum, b_vs(Overlap(measured_overlap(s.basis_b))).nats - kBoundSlack);
}

TEST(RandomStates, NoViolations) {
  for (int dim = 2; dim <= 5; ++dim) {
    const auto s = random_state_check(dim, 10000, 42);
    EXPECT_EQ(s.violations, 0) << dim;
    EXPECT_GE(s.min_margin, -1e-9) << dim;
    EXPECT_FALSE(s.first_violation.has_value());
    EXPECT_NO_THROW(require_no_violations(s));
  }
}

TEST(RandomStates, ReproducibleAndPartitionIndependent) {
  const auto a = random_state_check(3, 2000, 99, 1);
  const auto b = random_state_check(3, 2000, 99, 4);
  const auto c = random_state_check(3, 2000, 99, 1);
  for (const auto* other : {&b, &c}) {
    EXPECT_EQ(a.min_margin, other->min_margin);
    EXPECT_EQ(a.min_margin_sample, other->min_margin_sample);
    EXPECT_EQ(a.min_margin_overlap, other->min_margin_overlap);
    EXPECT_EQ(a.min_overlap, other->min_overlap);
    EXPECT_EQ(a.max_overlap, other->max_overlap);
    EXPECT_EQ(a.violations, other->violations);
  }
  const auto d = random_state_check(3, 2000, 100, 1);
  EXPECT_NE(a.min_margin, d.min_margin);
}

TEST(RandomStates, ViolationIsReported) {
  RandomCheckSummary s{2, 10, 5, 1, -0.1, 3, 0.8, 3, 0.75, 0.9};
  EXPECT_THROW(require_no_violations(s), VerificationError);
}

TEST(Shape, Examples) {
  const auto a = shape_check(Overlap(0.5));
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.e1_sign_changes, 1);
  EXPECT_EQ(a.m1_character, Extremum::Maximum);
  const auto b = shape_check(Overlap(0.8));
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(b.e1_sign_changes, 3);
  EXPECT_EQ(b.m1_character, Extremum::Maximum);
  const auto c = shape_check(Overlap(0.9));
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.e1_sign_changes, 1);
  EXPECT_EQ(c.m1_character, Extremum::Minimum);
  for (const auto& clause : c.clauses) EXPECT_TRUE(clause.passed) << clause.name << clause.detail;
}

TEST(Shape, ExpectedZeros) {
  EXPECT_EQ(expected_e1_zeros(Overlap(0.5)), 1);
  EXPECT_EQ(expected_e1_zeros(Overlap(0.75)), 3);
  EXPECT_EQ(expected_e1_zeros(Overlap(0.9)), 1);
  EXPECT_EQ(count_e1_sign_changes(Overlap(0.8), 1e-5), 3);
}

TEST(Shape, RejectsCoarseGrid) { EXPECT_THROW(shape_check(Overlap(0.5), 10), DomainError); }

TEST(Boundary, Examples) {
  const auto a = boundary_case_min(Overlap(0.9));
  EXPECT_NEAR(a.oracle_min, ref::kG09, 1e-14);
  EXPECT_GT(a.oracle_min, ref::kF09);
  const auto one = boundary_case_min(Overlap(1.0));
  EXPECT_EQ(one.oracle_min, 0.0);
  EXPECT_EQ(one.analytic_ref, 0.0);
  const auto b = boundary_case_min(Overlap(0.8));
  EXPECT_GT(g_bound(Overlap(0.8)), h1_bound(Overlap(0.8)));
  EXPECT_GE(b.gap, 0.0);
  EXPECT_THROW(boundary_case_min(Overlap(0.7)), DomainError);
}
