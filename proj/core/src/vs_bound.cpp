#include "eur/vs_bound.hpp"

#include <cmath>

#include "eur/bounds.hpp"
#include "eur/constraint.hpp"
#include "eur/entropy.hpp"
#include "eur/sign_analysis.hpp"

namespace eur {
namespace {

// Inset of the E_1 bracket from the ends, relative to the interval width.
constexpr double kBracketInset = 1e-9;

}  // namespace

RootResult solve_c_star() {
  // c ln((1+c)/(1-c)) - 2 is increasing on (0, 1), negative at 1/sqrt2
  // (about -1.25) and unbounded as c -> 1.
  const auto g = [](double c) { return c * std::log((1.0 + c) / (1.0 - c)) - 2.0; };
  return find_root(g, kInvSqrt2, 0.99, {.abs_tol = 0.0});
}

const RootResult& c_star() {
  static const RootResult cached = solve_c_star();
  return cached;
}

RootResult c_dagger() {
  const auto g = [](double c) { return f_bound(Overlap(c)) - b_mu(Overlap(c)); };
  return find_root(g, 0.1, kInvSqrt2, {.abs_tol = 0.0});
}

std::string_view region_name(RegionTag tag) noexcept {
  switch (tag) {
    case RegionTag::Mu: return "MuRegion";
    case RegionTag::H1: return "H1Region";
    case RegionTag::F: return "FRegion";
  }
  return "?";
}

Region classify_region(Overlap c) {
  const double cs = c_star().root;
  RegionTag tag = RegionTag::F;
  if (c.c() < kInvSqrt2) {
    tag = RegionTag::Mu;
  } else if (c.c() < cs) {
    tag = RegionTag::H1;
  }
  return {tag, cs, kInvSqrt2, cs};
}

H1Result h1_solve(Overlap c) {
  const double cs = c_star().root;
  if (!(c.c() >= kInvSqrt2 && c.c() <= cs)) {
    throw DomainError("h1_bound requires 1/sqrt(2) <= c <= c*");
  }
  const double lo = c.c2();
  const double mid = (1.0 + c.c()) / 2.0;
  const double width = 1.0 - lo;

  // Endpoint branch: as c -> 1/sqrt2 the asymmetric zero merges with P_A^-,
  // where P_B = 1 and the objective is binary_entropy(c^2).
  const auto endpoint = [&] { return H1Result{binary_entropy(lo), {lo, 1.0}, 0}; };
  // Symmetric branch: as c -> c* it merges with (1+c)/2.
  const auto symmetric = [&] { return H1Result{f_bound(c), {mid, mid}, 0}; };

  if (c.c() == cs) return symmetric();
  const double bracket_lo = lo + kBracketInset * width;
  if (bracket_lo >= mid || !(detail::e1_raw(bracket_lo, c) < 0.0)) return endpoint();

  // E_1 < 0 near P_A^-, then positive on (r, (1+c)/2). Walk towards the
  // midpoint until the sign flips; the spacing there shrinks like
  // sqrt(c* - c), so halving finds it quickly.
  const double min_offset = kBracketInset * width;
  double offset = (mid - bracket_lo) / 2.0;
  double bracket_hi = mid - offset;
  while (!(detail::e1_raw(bracket_hi, c) > 0.0)) {
    offset /= 2.0;
    if (offset < min_offset) return symmetric();
    bracket_hi = mid - offset;
  }

  const auto root = find_root([&](double p) { return detail::e1_raw(p, c); }, bracket_lo,
                              bracket_hi, {.abs_tol = 0.0});
  const double r = root.root;
  return {detail::m1_objective_raw(r, c), {r, p_b_of_p_a(MaxProb(r), c).value()},
          root.iterations};
}

double h1_bound(Overlap c) { return h1_solve(c).value; }

BoundReport b_vs(Overlap c) {
  const auto region = classify_region(c);
  switch (region.tag) {
    case RegionTag::Mu:
      return {"b_mu", b_mu(c), region.tag, std::nullopt};
    case RegionTag::H1: {
      const auto h1 = h1_solve(c);
      return {"h1", h1.value, region.tag, h1.witness};
    }
    case RegionTag::F: {
      const double mid = (1.0 + c.c()) / 2.0;
      return {"f", f_bound(c), region.tag, ProbPair{mid, mid}};
    }
  }
  return {"b_mu", b_mu(c), RegionTag::Mu, std::nullopt};
}

}  // namespace eur
