#pragma once

// The original nested-sum formula for Pr(T = t) under ABIDE, stated for
// k >= 4. Agent 1 fixes the first m nodes; agent j (2 <= j <= k-1) then
// overlaps the running union in m_j nodes, and the last agent's overlap is
// forced by t. Exponential in k, kept only as an independent oracle.

#include <cstdint>
#include <stdexcept>
#include <stop_token>

#include "rovcov/combinatorics.hpp"
#include "rovcov/coverage.hpp"

namespace rovcov::legacy {

class unsupported_parameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class cancelled : public std::runtime_error {
 public:
  cancelled() : std::runtime_error("legacy evaluation cancelled") {}
};

struct Options {
  /// Maximum number of visited branches of the index tuple (m_2, ..., m_{k-1}).
  std::uint64_t term_budget = 10'000'000;
  std::stop_token stop;
};

namespace detail {

struct Walker {
  std::int64_t n, m, k, t;
  const Options& opts;
  std::uint64_t visited = 0;
  Natural sum = 0;

  // `agent` is the 1-based index of the next agent whose overlap is chosen;
  // `covered` is (agent-1) m - (m_2 + ... + m_{agent-1}).
  void walk(std::int64_t agent, std::int64_t covered, const Natural& partial) {
    if (opts.stop.stop_requested()) throw cancelled();
    if (++visited > opts.term_budget) {
      throw budget_exceeded("legacy formula exceeded its term budget of " + std::to_string(opts.term_budget));
    }
    if (agent == k) {
      // overlap of the last agent: km - t - (m_2 + ... + m_{k-1}) = m - (t - covered)
      const Natural last = binomial_signed(covered, m - (t - covered)) * binomial_signed(n - covered, t - covered);
      sum += partial * last;
      return;
    }
    for (std::int64_t overlap = 0; overlap <= m; ++overlap) {
      const Natural factor = binomial_signed(covered, overlap) * binomial_signed(n - covered, m - overlap);
      if (factor == 0) continue;
      walk(agent + 1, covered + m - overlap, partial * factor);
    }
  }
};

}  // namespace detail

/// Pr(T = t) by the nested sum over m_2, ..., m_{k-1} in [0, m], divided by
/// C(n,m)^{k-1}. Binomials with out-of-range arguments are zero.
inline ExactProbability legacy_probability(const Params& p, count_t t, const Options& opts = {}) {
  p.validate();
  if (p.k < 4) throw unsupported_parameter("legacy formula is stated only for k ≥ 4");
  if (p.n > static_cast<count_t>(INT32_MAX) || p.k > 4096 || t > static_cast<count_t>(INT32_MAX)) {
    throw unsupported_parameter("legacy formula parameters out of range");
  }
  detail::Walker w{static_cast<std::int64_t>(p.n), static_cast<std::int64_t>(p.m), static_cast<std::int64_t>(p.k),
                   static_cast<std::int64_t>(t), opts};
  w.walk(2, w.m, Natural(1));
  return ExactProbability(w.sum, ipow(binomial(p.n, p.m), p.k - 1));
}

}  // namespace rovcov::legacy
