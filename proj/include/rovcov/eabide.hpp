#pragma once

// Exact coverage law for EABIDE: each of k agents fills m memory cells with
// independent uniform draws over n nodes, so repeated nodes are possible.
//
//   R(k,m,t)    = t! S(mk,t) = sum_{i=0}^{t-1} (-1)^i C(t,i) (t-i)^{mk}
//   Pr(T* = t)  = C(n,t) R(k,m,t) / n^{mk}
//
// Every memory cell behaves like an ABIDE agent with m = 1, so the law
// coincides with ABIDE at (n, 1, km); see reduce_to_abide.

#include <cassert>

#include "rovcov/combinatorics.hpp"
#include "rovcov/coverage.hpp"

namespace rovcov::eabide {

/// R via the direct alternating sum.
inline Natural r_count_direct(count_t k, count_t m, count_t t) {
  const count_t draws = checked_product(m, k);
  if (t == 0) return draws == 0 ? Natural(1) : Natural(0);
  if (t > draws) return 0;
  return alternating_cover_sum(t, 1, [&](count_t j) { return ipow(Natural(j), draws); });
}

/// Number of sequences of mk draws over t labelled nodes that hit every node,
/// i.e. the ways k agents with m cells each cover exactly a fixed t-set.
inline Natural r_count(count_t k, count_t m, count_t t) {
  const count_t draws = checked_product(m, k);
  if (t == 0) return draws == 0 ? Natural(1) : Natural(0);
  if (t > draws) return 0;
  Natural value = factorial(t) * stirling2(draws, t);
  assert(value == r_count_direct(k, m, t));
  return value;
}

inline CoverageDistribution::MassMap masses(const Params& p, count_t lo, count_t hi) {
  p.validate(Scheme::eabide);
  lo = std::max<count_t>(lo, 1);
  hi = std::min(hi, p.max_coverage());
  CoverageDistribution::MassMap out;
  if (lo > hi) return out;

  const count_t draws = checked_product(p.m, p.k);
  const Natural denominator = ipow(Natural(p.n), draws);
  const std::vector<Natural> stirling = stirling2_row(draws, hi);
  Natural t_factorial = factorial(lo);
  for (count_t t = lo; t <= hi; ++t) {
    if (t > lo) t_factorial *= t;
    const Natural r = t_factorial * stirling[t];
    assert(r == r_count_direct(p.k, p.m, t));
    out.emplace(t, ExactProbability(binomial(p.n, t) * r, denominator));
  }
  return out;
}

/// Pr(T* = t); exact zero outside [1, min(km, n)].
inline ExactProbability coverage_probability_star(const Params& p, count_t t) {
  p.validate(Scheme::eabide);
  if (t < 1 || t > p.max_coverage()) return ExactProbability();
  const count_t draws = checked_product(p.m, p.k);
  return ExactProbability(binomial(p.n, t) * r_count(p.k, p.m, t), ipow(Natural(p.n), draws));
}

inline CoverageDistribution coverage_distribution_star(const Params& p) {
  return CoverageDistribution(p, Scheme::eabide, masses(p, 1, p.max_coverage()));
}

/// (n, m, k) -> (n, 1, km)
inline Params reduce_to_abide(const Params& p) {
  p.validate(Scheme::eabide);
  return Params{p.n, 1, checked_product(p.m, p.k)};
}

inline Rational mean_coverage_star(const Params& p) { return coverage_distribution_star(p).mean(); }

/// E[T*] = n (1 - (1 - 1/n)^{mk})
inline Rational mean_coverage_star_closed_form(const Params& p) {
  p.validate(Scheme::eabide);
  const count_t draws = checked_product(p.m, p.k);
  const Rational miss(ipow(Natural(p.n - 1), draws), ipow(Natural(p.n), draws));
  return Rational(p.n) * (1 - miss);
}

}  // namespace rovcov::eabide
