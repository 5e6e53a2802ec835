#pragma once

// Exact coverage law for ABIDE: k agents, each holding data from exactly m
// distinct nodes drawn uniformly from n. T = |S_1 ∪ ... ∪ S_k|.
//
//   Q(k,m,t)   = sum_{i=0}^{t-m} (-1)^i C(t,i) C(t-i,m)^k
//   Pr(T = t)  = C(n,t) Q(k,m,t) / C(n,m)^k

#include <vector>

#include "rovcov/combinatorics.hpp"
#include "rovcov/coverage.hpp"

namespace rovcov::abide {

/// Number of k x t binary matrices with exactly m ones per row and no zero
/// column. Zero for t < m.
inline Natural q_count(count_t k, count_t m, count_t t) {
  if (m == 0) return t == 0 ? Natural(1) : Natural(0);
  return alternating_cover_sum(t, m, [&](count_t j) { return ipow(binomial(j, m), k); });
}

/// Masses Pr(T = t) for t in [lo, hi] clipped to the support. The
/// denominator C(n,m)^k and the powers C(j,m)^k are shared across t.
inline CoverageDistribution::MassMap masses(const Params& p, count_t lo, count_t hi) {
  p.validate();
  lo = std::max(lo, p.m);
  hi = std::min(hi, p.max_coverage());
  CoverageDistribution::MassMap out;
  if (lo > hi) return out;

  const Natural denominator = ipow(binomial(p.n, p.m), p.k);
  std::vector<Natural> powers(hi + 1);
  for (count_t j = p.m; j <= hi; ++j) powers[j] = ipow(binomial(j, p.m), p.k);

  for (count_t t = lo; t <= hi; ++t) {
    const Natural q = alternating_cover_sum(t, p.m, [&](count_t j) -> const Natural& { return powers[j]; });
    out.emplace(t, ExactProbability(binomial(p.n, t) * q, denominator));
  }
  return out;
}

/// Pr(T = t); exact zero outside [m, min(km, n)].
inline ExactProbability coverage_probability(const Params& p, count_t t) {
  p.validate();
  if (t < p.m || t > p.max_coverage()) return ExactProbability();
  return ExactProbability(binomial(p.n, t) * q_count(p.k, p.m, t), ipow(binomial(p.n, p.m), p.k));
}

inline CoverageDistribution coverage_distribution(const Params& p) {
  return CoverageDistribution(p, Scheme::abide, masses(p, p.m, p.max_coverage()));
}

/// E[T] summed over the distribution.
inline Rational mean_coverage(const Params& p) { return coverage_distribution(p).mean(); }

/// E[T] = n (1 - ((n-m)/n)^k), by linearity over per-node miss probabilities.
inline Rational mean_coverage_closed_form(const Params& p) {
  p.validate();
  const Rational miss(ipow(Natural(p.n - p.m), p.k), ipow(Natural(p.n), p.k));
  return Rational(p.n) * (1 - miss);
}

}  // namespace rovcov::abide
