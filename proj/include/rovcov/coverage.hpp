#pragma once

// Shared domain types: problem parameters, scheme tag and the exact coverage
// distribution produced by both schemes.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rovcov/combinatorics.hpp"

namespace rovcov {

/// ABIDE: each agent holds m distinct nodes. EABIDE: each agent holds m
/// independent uniform draws, duplicates allowed.
enum class Scheme { abide, eabide };

inline std::string_view to_string(Scheme s) { return s == Scheme::abide ? "abide" : "eabide"; }

inline Scheme parse_scheme(std::string_view s) {
  if (s == "abide" || s == "ABIDE") return Scheme::abide;
  if (s == "eabide" || s == "EABIDE") return Scheme::eabide;
  throw std::invalid_argument("scheme must be 'abide' or 'eabide'");
}

/// n nodes, m memory slots per agent, k agents.
struct Params {
  count_t n = 1;
  count_t m = 1;
  count_t k = 1;

  /// ABIDE needs m distinct nodes, so m <= n; EABIDE draws with replacement
  /// and accepts any m >= 1.
  void validate(Scheme scheme = Scheme::abide) const {
    if (n < 1) throw std::invalid_argument("n must satisfy n ≥ 1");
    if (scheme == Scheme::abide && (m < 1 || m > n)) throw std::invalid_argument("m must satisfy 1 ≤ m ≤ n");
    if (m < 1) throw std::invalid_argument("m must satisfy m ≥ 1");
    if (k < 1) throw std::invalid_argument("k must satisfy k ≥ 1");
  }

  /// min(k m, n) without overflowing k m
  count_t max_coverage() const { return k >= (n + m - 1) / m ? n : std::min(k * m, n); }

  friend bool operator==(const Params&, const Params&) = default;
};

/// Smallest coverage size with nonzero mass.
inline count_t support_min(const Params& p, Scheme s) { return s == Scheme::abide ? p.m : 1; }
inline count_t support_max(const Params& p, Scheme) { return p.max_coverage(); }

class CoverageDistribution {
 public:
  using MassMap = std::map<count_t, ExactProbability>;

  CoverageDistribution(Params params, Scheme scheme, MassMap mass)
      : params_(params), scheme_(scheme), mass_(std::move(mass)) {}

  const Params& params() const { return params_; }
  Scheme scheme() const { return scheme_; }
  const MassMap& masses() const { return mass_; }

  /// Zero outside the support.
  ExactProbability mass(count_t t) const {
    auto it = mass_.find(t);
    return it == mass_.end() ? ExactProbability() : it->second;
  }

  Rational total() const {
    Rational sum = 0;
    for (const auto& [t, p] : mass_) sum += p.value();
    return sum;
  }

  Rational mean() const {
    Rational sum = 0;
    for (const auto& [t, p] : mass_) sum += Rational(t) * p.value();
    return sum;
  }

  /// Smallest t attaining the largest mass.
  count_t mode() const {
    count_t best_t = 0;
    const ExactProbability* best = nullptr;
    for (const auto& [t, p] : mass_) {
      if (best == nullptr || *best < p) {
        best = &p;
        best_t = t;
      }
    }
    return best_t;
  }

  /// Pr(T >= t_min)
  ExactProbability tail(count_t t_min) const {
    Rational sum = 0;
    for (auto it = mass_.lower_bound(t_min); it != mass_.end(); ++it) sum += it->second.value();
    return ExactProbability(sum);
  }

  friend bool operator==(const CoverageDistribution& a, const CoverageDistribution& b) {
    return a.params_ == b.params_ && a.scheme_ == b.scheme_ && a.mass_ == b.mass_;
  }

 private:
  Params params_;
  Scheme scheme_;
  MassMap mass_;
};

}  // namespace rovcov
