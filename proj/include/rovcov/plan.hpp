#pragma once

// Agent-count planning: the fewest agents k such that the fused data covers
// at least t_min distinct nodes with probability >= confidence.

#include <optional>
#include <stdexcept>
#include <string>

#include "rovcov/law.hpp"

namespace rovcov::plan {

/// Pr(T >= t_min). Sums whichever side of the support is shorter.
inline ExactProbability tail_probability(const Params& p, Scheme scheme, count_t t_min) {
  p.validate(scheme);
  const count_t lo = support_min(p, scheme);
  const count_t hi = support_max(p, scheme);
  if (t_min <= lo) return ExactProbability::one();
  if (t_min > hi) return ExactProbability();

  Rational sum = 0;
  if (t_min - lo < hi - t_min + 1) {
    for (const auto& [t, mass] : coverage_masses(p, scheme, lo, t_min - 1)) sum += mass.value();
    return ExactProbability(Rational(1 - sum));
  }
  for (const auto& [t, mass] : coverage_masses(p, scheme, t_min, hi)) sum += mass.value();
  return ExactProbability(sum);
}

/// min(1, E[T] / t_min) from the closed-form mean.
inline ExactProbability markov_bound(const Params& p, Scheme scheme, count_t t_min) {
  if (t_min < 1) throw std::invalid_argument("t_min must satisfy t_min ≥ 1");
  const Rational bound = mean_closed_form(p, scheme) / Rational(t_min);
  return bound >= 1 ? ExactProbability::one() : ExactProbability(bound);
}

struct PlanQuery {
  count_t n = 1;
  count_t m = 1;
  count_t t_min = 1;
  Rational confidence = Rational(1, 2);
  Scheme scheme = Scheme::abide;
  count_t k_max = 1'000'000;

  void validate() const {
    Params{n, m, 1}.validate(scheme);
    if (t_min < 1) throw std::invalid_argument("t must satisfy t ≥ 1");
    if (confidence <= 0 || confidence >= 1) throw std::invalid_argument("confidence must satisfy 0 < confidence < 1");
    if (k_max < 1) throw std::invalid_argument("k_max must satisfy k_max ≥ 1");
  }
};

struct PlanResult {
  bool feasible = false;
  count_t k = 0;                                  // meaningful when feasible
  std::optional<ExactProbability> tail;           // at k, or at k_max when infeasible
  std::optional<ExactProbability> tail_previous;  // at k - 1 when k > 1
  std::string reason;                             // set when infeasible
  count_t evaluations = 0;
};

/// Smallest k <= k_max with tail >= confidence. Doubles k until the target is
/// met, then bisects; valid because the tail is nondecreasing in k.
inline PlanResult min_agents(const PlanQuery& q) {
  q.validate();
  PlanResult result;
  if (q.t_min > q.n) {
    result.reason = "t exceeds n: t ≤ n=" + std::to_string(q.n) + " required";
    return result;
  }

  auto tail_at = [&](count_t k) {
    ++result.evaluations;
    return tail_probability(Params{q.n, q.m, k}, q.scheme, q.t_min);
  };

  count_t below = 0;  // largest k known to miss the target (0: none)
  count_t k = 1;
  ExactProbability tail = tail_at(k);
  while (tail.value() < q.confidence) {
    if (k == q.k_max) {
      result.reason = "no k ≤ k_max=" + std::to_string(q.k_max) + " reaches the requested confidence";
      result.tail = tail;
      return result;
    }
    below = k;
    k = k > q.k_max / 2 ? q.k_max : 2 * k;
    tail = tail_at(k);
  }

  count_t above = k;
  ExactProbability above_tail = tail;
  while (above - below > 1) {
    const count_t mid = below + (above - below) / 2;
    ExactProbability mid_tail = tail_at(mid);
    if (mid_tail.value() >= q.confidence) {
      above = mid;
      above_tail = mid_tail;
    } else {
      below = mid;
    }
  }

  result.feasible = true;
  result.k = above;
  result.tail = above_tail;
  if (above > 1) result.tail_previous = tail_probability(Params{q.n, q.m, above - 1}, q.scheme, q.t_min);
  return result;
}

}  // namespace rovcov::plan
