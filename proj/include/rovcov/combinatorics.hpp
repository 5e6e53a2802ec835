#pragma once

// Exact combinatorial primitives: binomials, factorials, integer powers,
// Stirling numbers of the second kind and an exact probability type.
// Everything here is integer arithmetic; floating point only appears in
// rendering helpers (see rational_io.hpp).

#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rovcov {

/// Arbitrary-precision integer. Used for counts, which are nonnegative by
/// construction; signed so inclusion-exclusion partial sums can dip below 0.
using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using count_t = std::uint64_t;

/// m * k with an explicit error instead of wraparound. The result is used as
/// an exponent, so anything beyond 32 bits could never be materialized.
inline count_t checked_product(count_t a, count_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint32_t>::max() / a) {
    throw std::overflow_error("product of memory size and agent count exceeds 2^32");
  }
  return a * b;
}

inline Natural ipow(const Natural& base, count_t exponent) {
  if (exponent > std::numeric_limits<unsigned>::max()) {
    throw std::overflow_error("exponent too large for exact evaluation");
  }
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

/// C(n, r); zero when r > n.
inline Natural binomial(count_t n, count_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  Natural acc = 1;
  for (count_t i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;  // exact: acc is C(n - r + i, i) here
  }
  return acc;
}

/// C(n, r) over signed arguments; zero whenever r < 0, n < 0 or r > n.
inline Natural binomial_signed(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  return binomial(static_cast<count_t>(n), static_cast<count_t>(r));
}

/// x (x - 1) ... (x - j + 1)
inline Natural falling_power(count_t x, count_t j) {
  if (j > x) return 0;
  Natural acc = 1;
  for (count_t i = 0; i < j; ++i) acc *= x - i;
  return acc;
}

inline Natural factorial(count_t t) { return falling_power(t, t); }

/// Row S(N, 0..k_max) of Stirling numbers of the second kind, built with the
/// triangular recurrence S(N,K) = K S(N-1,K) + S(N-1,K-1).
inline std::vector<Natural> stirling2_row(count_t N, count_t k_max) {
  k_max = std::min(k_max, N);
  std::vector<Natural> row(k_max + 1);
  row[0] = 1;  // S(0,0)
  for (count_t i = 1; i <= N; ++i) {
    const count_t top = std::min(i, k_max);
    for (count_t K = top; K >= 1; --K) {
      row[K] = K * row[K] + row[K - 1];
    }
    row[0] = 0;
  }
  return row;
}

inline std::vector<Natural> stirling2_row(count_t N) { return stirling2_row(N, N); }

inline Natural stirling2_recurrence(count_t N, count_t K) {
  if (K > N) return 0;
  return stirling2_row(N, K)[K];
}

/// S(N,K) = (1/K!) sum_j (-1)^j C(K,j) (K-j)^N
inline Natural stirling2_inclusion_exclusion(count_t N, count_t K) {
  if (K > N) return 0;
  Natural sum = 0;
  Natural c = 1;  // C(K, j)
  for (count_t j = 0; j <= K; ++j) {
    const Natural term = c * ipow(Natural(K - j), N);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    c *= K - j;
    c /= j + 1;
  }
  const Natural kf = factorial(K);
  assert(sum % kf == 0);
  return sum / kf;
}

inline Natural stirling2(count_t N, count_t K) {
  Natural value = stirling2_recurrence(N, K);
  assert(value == stirling2_inclusion_exclusion(N, K));
  return value;
}

/// Signed alternating sum  sum_{i=0}^{t-lower} (-1)^i C(t,i) f(t-i).
/// Shared by the ABIDE count Q and the direct form of the EABIDE count R.
template <typename Term>
Natural alternating_cover_sum(count_t t, count_t lower, Term&& term) {
  if (t < lower) return 0;
  Natural sum = 0;
  Natural c = 1;
  for (count_t i = 0; i <= t - lower; ++i) {
    Natural value = c * term(t - i);
    if (i % 2 == 0) {
      sum += value;
    } else {
      sum -= value;
    }
    c *= t - i;
    c /= i + 1;
  }
  assert(sum >= 0);
  return sum;
}

/// A probability held as a reduced ratio of nonnegative integers.
class ExactProbability {
 public:
  ExactProbability() : value_(0) {}

  ExactProbability(const Natural& numerator, const Natural& denominator) {
    if (denominator <= 0) throw std::invalid_argument("probability denominator must be positive");
    if (numerator < 0 || numerator > denominator) {
      throw std::invalid_argument("probability numerator must lie in [0, denominator]");
    }
    value_ = Rational(numerator, denominator);
  }

  explicit ExactProbability(const Rational& value) : value_(value) {
    if (value < 0 || value > 1) throw std::invalid_argument("probability must lie in [0, 1]");
  }

  static ExactProbability one() { return ExactProbability(Rational(1)); }

  Natural numerator() const { return boost::multiprecision::numerator(value_); }
  Natural denominator() const { return boost::multiprecision::denominator(value_); }
  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const ExactProbability& a, const ExactProbability& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExactProbability& a, const ExactProbability& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExactProbability& a, const ExactProbability& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const ExactProbability& a, const ExactProbability& b) { return b < a; }
  friend bool operator>=(const ExactProbability& a, const ExactProbability& b) { return b <= a; }

 private:
  Rational value_;  // cpp_rational keeps lowest terms
};

}  // namespace rovcov
