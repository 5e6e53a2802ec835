#pragma once

// Cross-checks between independent evaluation routes, run by `rovcov verify`.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rovcov/law.hpp"
#include "rovcov/legacy.hpp"
#include "rovcov/rational_io.hpp"
#include "rovcov/simulate.hpp"

namespace rovcov::verify {

struct CheckReport {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

namespace detail {

// Test builds compile with ROVCOV_INJECT_FAULT to prove mismatches are caught.
inline Rational tamper(const Rational& v) {
#ifdef ROVCOV_INJECT_FAULT
  return v + Rational(1, 1000000007);
#else
  return v;
#endif
}

inline std::string describe(const Params& p) {
  std::ostringstream os;
  os << "n=" << p.n << " m=" << p.m << " k=" << p.k;
  return os.str();
}

inline void expect_equal(CheckReport& r, const std::string& where, const Rational& lhs, const Rational& rhs) {
  ++r.cases;
  if (lhs != rhs && r.failures.size() < 20) {
    r.failures.push_back(where + ": " + rational_string(lhs) + " != " + rational_string(rhs));
  }
}

}  // namespace detail

/// Recurrence vs inclusion-exclusion S(N,K); t! S(mk,t) vs the direct sum.
inline CheckReport check_stirling(count_t n_max, count_t draws_max) {
  CheckReport r{"stirling", 0, {}};
  for (count_t N = 0; N <= n_max; ++N) {
    const auto row = stirling2_row(N);
    for (count_t K = 0; K <= N; ++K) {
      detail::expect_equal(r, "S(" + std::to_string(N) + "," + std::to_string(K) + ")",
                           detail::tamper(Rational(row[K])), Rational(stirling2_inclusion_exclusion(N, K)));
    }
  }
  for (count_t d = 1; d <= draws_max; ++d) {
    for (count_t t = 1; t <= d; ++t) {
      detail::expect_equal(r, "R(1," + std::to_string(d) + "," + std::to_string(t) + ")",
                           Rational(factorial(t) * stirling2_recurrence(d, t)),
                           Rational(eabide::r_count_direct(1, d, t)));
    }
  }
  return r;
}

/// Distribution mean vs closed form, both schemes; also checks normalization.
inline CheckReport check_means(count_t n_max, count_t m_max, count_t k_max) {
  CheckReport r{"mean-identity", 0, {}};
  for (count_t n = 1; n <= n_max; ++n) {
    for (count_t m = 1; m <= m_max; ++m) {
      for (count_t k = 1; k <= k_max; ++k) {
        const Params p{n, m, k};
        for (Scheme s : {Scheme::abide, Scheme::eabide}) {
          if (s == Scheme::abide && m > n) continue;
          const auto d = exact_distribution(p, s);
          const std::string where = std::string(to_string(s)) + " " + detail::describe(p);
          detail::expect_equal(r, where + " mean", detail::tamper(d.mean()), mean_closed_form(p, s));
          detail::expect_equal(r, where + " total", d.total(), Rational(1));
        }
      }
    }
  }
  return r;
}

/// EABIDE(n, m, k) against ABIDE(n, 1, km).
inline CheckReport check_corollary(count_t n_max, count_t m_max, count_t k_max) {
  CheckReport r{"scheme-reduction", 0, {}};
  for (count_t n = 1; n <= n_max; ++n) {
    for (count_t m = 1; m <= m_max; ++m) {
      for (count_t k = 1; k <= k_max; ++k) {
        const Params p{n, m, k};
        const auto star = eabide::coverage_distribution_star(p);
        const auto base = abide::coverage_distribution(eabide::reduce_to_abide(p));
        for (count_t t = 0; t <= n; ++t) {
          detail::expect_equal(r, detail::describe(p) + " t=" + std::to_string(t),
                               detail::tamper(star.mass(t).value()), base.mass(t).value());
        }
      }
    }
  }
  return r;
}

/// Nested-sum formula vs the inclusion-exclusion law at fixed k >= 4.
inline CheckReport check_legacy(count_t k, count_t n_max, count_t m_max, const legacy::Options& opts = {}) {
  CheckReport r{"legacy-formula", 0, {}};
  for (count_t n = 1; n <= n_max; ++n) {
    for (count_t m = 1; m <= std::min(n, m_max); ++m) {
      const Params p{n, m, k};
      const auto d = abide::coverage_distribution(p);
      Rational total = 0;
      for (count_t t = 0; t <= std::min(n, k * m) + 1; ++t) {
        const Rational lhs = legacy::legacy_probability(p, t, opts).value();
        total += lhs;
        detail::expect_equal(r, detail::describe(p) + " t=" + std::to_string(t), detail::tamper(lhs),
                             d.mass(t).value());
      }
      detail::expect_equal(r, detail::describe(p) + " total", total, Rational(1));
    }
  }
  return r;
}

struct SimulationCase {
  Params params;
  Scheme scheme;
};

inline const std::vector<SimulationCase>& default_simulation_cases() {
  static const std::vector<SimulationCase> cases = {
      {{10, 2, 3}, Scheme::abide},  {{50, 5, 10}, Scheme::abide},  {{20, 4, 2}, Scheme::abide},
      {{10, 2, 3}, Scheme::eabide}, {{50, 5, 10}, Scheme::eabide}, {{20, 4, 2}, Scheme::eabide},
  };
  return cases;
}

/// Total variation between exact and simulated laws must not exceed `threshold`.
inline CheckReport check_simulation(const std::vector<SimulationCase>& cases, std::uint64_t trials,
                                    std::uint64_t seed, const Rational& threshold, unsigned workers = 1) {
  CheckReport r{"simulation", 0, {}};
  for (const auto& c : cases) {
    const auto sim = simulate::run_simulation(c.params, c.scheme, trials, seed, workers);
    const Rational tv = simulate::total_variation(exact_distribution(c.params, c.scheme), sim);
    ++r.cases;
    if (detail::tamper(tv) > threshold) {
      r.failures.push_back(std::string(to_string(c.scheme)) + " " + detail::describe(c.params) +
                           ": total variation " + to_decimal(tv, 6) + " > " + to_decimal(threshold, 6));
    }
  }
  return r;
}

}  // namespace rovcov::verify
