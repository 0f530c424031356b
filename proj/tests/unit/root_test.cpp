#include <cmath>

#include <gtest/gtest.h>

#include <eur/error.hpp>
#include <eur/root.hpp>

using namespace eur;

TEST(FindRoot, SquareRootOfTwo) {
  RootOptions opts;
  opts.abs_tol = 1e-12;
  const auto r = find_root([](double x) { return x * x - 2; }, 1.0, 2.0, opts);
  EXPECT_NEAR(r.root, std::sqrt(2.0), 1e-12);
  EXPECT_LE(r.bracket_lo, r.root);
  EXPECT_GE(r.bracket_hi, r.root);
  EXPECT_LE(std::abs(r.residual), 1e-11);
  EXPECT_GT(r.iterations, 0);
}

TEST(FindRoot, IdentityOnSymmetricBracket) {
  const auto r = find_root([](double x) { return x; }, -1.0, 1.0);
  EXPECT_NEAR(r.root, 0.0, 1e-13);
}

TEST(FindRoot, EitherOrientation) {
  const auto up = find_root([](double x) { return std::exp(x) - 3; }, 0.0, 2.0);
  const auto down = find_root([](double x) { return 3 - std::exp(x); }, 0.0, 2.0);
  EXPECT_NEAR(up.root, std::log(3.0), 1e-13);
  EXPECT_NEAR(down.root, std::log(3.0), 1e-13);
}

TEST(FindRoot, RootAtBracketEnd) {
  const auto r = find_root([](double x) { return x - 1; }, 1.0, 3.0);
  EXPECT_EQ(r.root, 1.0);
  EXPECT_EQ(r.residual, 0.0);
}

TEST(FindRoot, ReversedBracketRejected) {
  EXPECT_THROW(find_root([](double x) { return std::cos(x); }, 3.0, 1.0), BracketError);
}

TEST(FindRoot, SteepAndFlatFunctions) {
  const auto steep = find_root([](double x) { return std::tanh(1e4 * (x - 0.3)); }, 0.0, 1.0);
  EXPECT_NEAR(steep.root, 0.3, 1e-13);
  const auto flat = find_root([](double x) { return std::pow(x - 0.25, 3); }, 0.0, 1.0);
  EXPECT_NEAR(flat.root, 0.25, 1e-4);
}

TEST(FindRoot, ResidualToleranceStopsEarly) {
  RootOptions opts;
  opts.abs_tol = 0.0;
  opts.residual_tol = 1e-3;
  const auto r = find_root([](double x) { return x - 0.123456789; }, 0.0, 1.0, opts);
  EXPECT_LE(std::abs(r.residual), 1e-3);
}

TEST(FindRoot, Errors) {
  EXPECT_THROW(find_root([](double x) { return x * x + 1; }, -1.0, 1.0), BracketError);
  EXPECT_THROW(find_root([](double x) { return x; }, std::nan(""), 1.0), BracketError);
  RootOptions opts;
  opts.abs_tol = 0.0;
  opts.max_iter = 3;
  EXPECT_THROW(find_root([](double x) { return std::cbrt(x - 0.1); }, -5.0, 7.0, opts),
               ConvergenceError);
}
