#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace eur::oracle {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

  [[nodiscard]] int size() const noexcept { return n_; }
  Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const Complex& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }

  static ComplexMatrix identity(int n);

 private:
  int n_;
  std::vector<Complex> data_;
};

/// A pure state written in the A eigenbasis together with the B eigenbasis
/// (columns of basis_b, also in A coordinates).
struct GeneralState {
  std::vector<Complex> amplitudes;
  ComplexMatrix basis_b;

  [[nodiscard]] int dim() const noexcept { return basis_b.size(); }
};

/// Orthonormalizes the columns of a matrix of independent standard normal
/// real and imaginary parts (modified Gram-Schmidt).
ComplexMatrix random_unitary(int dim, std::mt19937_64& rng);

std::vector<Complex> random_state(int dim, std::mt19937_64& rng);

/// max_{i,j} |<a_i|b_j>| = max |basis_b(i, j)|.
double measured_overlap(const ComplexMatrix& basis_b);

/// Largest deviation of basis_b^dagger basis_b from the identity.
double unitarity_defect(const ComplexMatrix& basis_b);

/// Shannon entropy in nats; probabilities below 1e-300 contribute zero.
double shannon_entropy(std::span<const double> probs);

/// H(A) + H(B) for the state.
double entropy_sum(const GeneralState& state);

struct RandomCheckSummary {
  int dim;
  int samples;
  std::uint64_t seed;
  int violations;
  double min_margin;       // min over samples of H(A)+H(B) - b_vs(c)
  int min_margin_sample;
  double min_margin_overlap;
  std::optional<int> first_violation;
  double min_overlap;
  double max_overlap;
};

inline constexpr double kBoundSlack = 1e-9;

/// Draws `samples` random (basis, state) pairs and checks
/// H(A) + H(B) >= b_vs(c) - 1e-9 with c measured from the basis pair.
/// Sample k uses a generator seeded from (seed, k), so the summary is
/// independent of `partitions`.
RandomCheckSummary random_state_check(int dim, int samples, std::uint64_t seed,
                                      unsigned partitions = 0);

/// Throws VerificationError naming the first violating sample and the seed.
void require_no_violations(const RandomCheckSummary& summary);

}  // namespace eur::oracle
