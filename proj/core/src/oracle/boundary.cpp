#include "eur/oracle/boundary.hpp"

#include <cmath>
#include <sstream>

#include "eur/bounds.hpp"
#include "eur/vs_bound.hpp"

namespace eur::oracle {

OracleReport boundary_case_min(Overlap c) {
  if (!(c.c() > kInvSqrt2)) throw DomainError("boundary cases require 1/sqrt(2) < c <= 1");

  const double g = g_bound(c);
  const double lattice = lattice_bound(c);
  const double ref = b_vs(c).nats;

  // Lattice witness (1, 1/M) with M the smallest integer satisfying M c^2 >= 1.
  const double m = c.c() == 1.0 ? 1.0 : std::round(std::exp(lattice));
  const bool g_wins = g <= lattice;
  const double best = g_wins ? g : lattice;
  const ProbPair witness = g_wins ? ProbPair{1.0, c.c2()} : ProbPair{1.0, 1.0 / m};

  if (best < ref - 1e-12) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "boundary candidate " << best << " falls below b_vs(" << c.c() << ") = " << ref;
    throw VerificationError(msg.str());
  }
  return {c.c(), best, ref, best - ref, witness, "closed form"};
}

}  // namespace eur::oracle
