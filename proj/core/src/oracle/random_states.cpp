#include "eur/oracle/random_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "eur/error.hpp"
#include "eur/oracle/parallel.hpp"
#include "eur/vs_bound.hpp"

namespace eur::oracle {
namespace {

Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

std::mt19937_64 sample_generator(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw DomainError("dimension must be positive");
  ComplexMatrix u(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) u(i, j) = gaussian(rng);

  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (int i = 0; i < dim; ++i) proj += std::conj(u(i, k)) * u(i, j);
      for (int i = 0; i < dim; ++i) u(i, j) -= proj * u(i, k);
    }
    double norm = 0.0;
    for (int i = 0; i < dim; ++i) norm += std::norm(u(i, j));
    norm = std::sqrt(norm);
    for (int i = 0; i < dim; ++i) u(i, j) /= norm;
  }
  return u;
}

std::vector<Complex> random_state(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw DomainError("dimension must be positive");
  std::vector<Complex> psi(static_cast<std::size_t>(dim));
  double norm = 0.0;
  for (auto& a : psi) {
    a = gaussian(rng);
    norm += std::norm(a);
  }
  norm = std::sqrt(norm);
  for (auto& a : psi) a /= norm;
  return psi;
}

double measured_overlap(const ComplexMatrix& basis_b) {
  double c = 0.0;
  for (int i = 0; i < basis_b.size(); ++i)
    for (int j = 0; j < basis_b.size(); ++j) c = std::max(c, std::abs(basis_b(i, j)));
  return c;
}

double unitarity_defect(const ComplexMatrix& basis_b) {
  const int n = basis_b.size();
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Complex dot = 0.0;
      for (int i = 0; i < n; ++i) dot += std::conj(basis_b(i, j)) * basis_b(i, k);
      worst = std::max(worst, std::abs(dot - (j == k ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double shannon_entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p >= 1e-300) h -= p * std::log(p);
  }
  return h;
}

double entropy_sum(const GeneralState& state) {
  const int n = state.dim();
  if (static_cast<int>(state.amplitudes.size()) != n) {
    throw DomainError("state and basis dimensions differ");
  }
  std::vector<double> pa(static_cast<std::size_t>(n));
  std::vector<double> pb(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pa[i] = std::norm(state.amplitudes[i]);
  for (int j = 0; j < n; ++j) {
    Complex amp = 0.0;
    for (int i = 0; i < n; ++i) amp += std::conj(state.basis_b(i, j)) * state.amplitudes[i];
    pb[j] = std::norm(amp);
  }
  return shannon_entropy(pa) + shannon_entropy(pb);
}

RandomCheckSummary random_state_check(int dim, int samples, std::uint64_t seed,
                                      unsigned partitions) {
  if (dim < 2) throw DomainError("random_state_check requires dim >= 2");
  if (samples < 1) throw DomainError("random_state_check requires samples >= 1");

  struct Partial {
    int violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    int min_sample = -1;
    double min_sample_c = 0.0;
    int first_violation = std::numeric_limits<int>::max();
    double min_c = std::numeric_limits<double>::infinity();
    double max_c = 0.0;
  };

  const auto n = static_cast<std::size_t>(samples);
  const unsigned parts = detail::resolve_partitions(partitions, n);
  std::vector<Partial> partial(parts);
  detail::for_each_partition(n, parts, [&](unsigned part, std::size_t begin, std::size_t end) {
    Partial acc;
    for (std::size_t k = begin; k < end; ++k) {
      auto rng = sample_generator(seed, k);
      GeneralState state{{}, random_unitary(dim, rng)};
      state.amplitudes = random_state(dim, rng);
      const double c = std::min(1.0, measured_overlap(state.basis_b));
      const double margin = entropy_sum(state) - b_vs(Overlap(c)).nats;
      const int idx = static_cast<int>(k);
      if (margin < -kBoundSlack) {
        ++acc.violations;
        acc.first_violation = std::min(acc.first_violation, idx);
      }
      if (margin < acc.min_margin) {
        acc.min_margin = margin;
        acc.min_sample = idx;
        acc.min_sample_c = c;
      }
      acc.min_c = std::min(acc.min_c, c);
      acc.max_c = std::max(acc.max_c, c);
    }
    partial[part] = acc;
  });

  RandomCheckSummary out{dim, samples, seed, 0, std::numeric_limits<double>::infinity(), -1, 0.0,
                         std::nullopt, std::numeric_limits<double>::infinity(), 0.0};
  int first = std::numeric_limits<int>::max();
  for (const auto& p : partial) {
    out.violations += p.violations;
    first = std::min(first, p.first_violation);
    // Ties go to the lower sample index, matching a serial scan.
    if (p.min_margin < out.min_margin ||
        (p.min_margin == out.min_margin && p.min_sample < out.min_margin_sample)) {
      out.min_margin = p.min_margin;
      out.min_margin_sample = p.min_sample;
      out.min_margin_overlap = p.min_sample_c;
    }
    out.min_overlap = std::min(out.min_overlap, p.min_c);
    out.max_overlap = std::max(out.max_overlap, p.max_c);
  }
  if (first != std::numeric_limits<int>::max()) out.first_violation = first;
  return out;
}

void require_no_violations(const RandomCheckSummary& summary) {
  if (summary.violations == 0) return;
  std::ostringstream msg;
  msg << summary.violations << " sample(s) violate H(A)+H(B) >= b_vs(c) - 1e-9 (dim "
      << summary.dim << ", seed " << summary.seed << ", first violating sample "
      << summary.first_violation.value_or(-1) << ")";
  throw VerificationError(msg.str());
}

}  // namespace eur::oracle
