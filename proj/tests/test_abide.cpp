#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rovcov/abide.hpp"

namespace rovcov {
namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }

TEST(QCount, SmallExamples) {
  EXPECT_EQ(abide::q_count(1, 2, 2), 1);
  EXPECT_EQ(oracle::count_covering_matrices(2, 2, 3), 6u);
  EXPECT_EQ(abide::q_count(2, 2, 3), 6);
  EXPECT_EQ(oracle::count_covering_matrices(2, 1, 2), 2u);
  EXPECT_EQ(abide::q_count(2, 1, 2), 2);
}

TEST(QCount, BelowMemoryIsZero) { EXPECT_EQ(abide::q_count(3, 4, 2), 0); }

TEST(QCount, MatchesMatrixEnumeration) {
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned t = 0; t <= 7; ++t)
        EXPECT_EQ(abide::q_count(k, m, t), Natural(oracle::count_covering_matrices(k, m, t)))
            << k << "," << m << "," << t;
}

TEST(CoverageProbability, Examples) {
  EXPECT_EQ(abide::coverage_probability({4, 2, 1}, 2).value(), R(1));
  EXPECT_EQ(abide::coverage_probability({4, 2, 2}, 3).value(), R(2, 3));
  EXPECT_EQ(abide::coverage_probability({4, 2, 2}, 1).value(), R(0));
  EXPECT_EQ(abide::coverage_probability({4, 2, 2}, 5).value(), R(0));
}

TEST(CoverageProbability, InvalidParams) {
  EXPECT_THROW(abide::coverage_probability({2, 3, 1}, 2), std::invalid_argument);
  EXPECT_THROW(abide::coverage_probability({4, 0, 1}, 2), std::invalid_argument);
  EXPECT_THROW(abide::coverage_probability({4, 2, 0}, 2), std::invalid_argument);
  EXPECT_THROW(abide::coverage_probability({0, 0, 1}, 0), std::invalid_argument);
}

TEST(CoverageDistribution, Examples) {
  const auto a = abide::coverage_distribution({2, 1, 2});
  EXPECT_EQ(a.masses().size(), 2u);
  EXPECT_EQ(a.mass(1).value(), R(1, 2));
  EXPECT_EQ(a.mass(2).value(), R(1, 2));

  const auto b = abide::coverage_distribution({3, 3, 5});
  EXPECT_EQ(b.masses().size(), 1u);
  EXPECT_EQ(b.mass(3).value(), R(1));

  const auto c = abide::coverage_distribution({4, 2, 2});
  EXPECT_EQ(c.mass(2).value(), R(1, 6));
  EXPECT_EQ(c.mass(3).value(), R(2, 3));
  EXPECT_EQ(c.mass(4).value(), R(1, 6));
  EXPECT_EQ(c.mode(), 3u);
  EXPECT_EQ(c.tail(3).value(), R(5, 6));
}

TEST(CoverageDistribution, ExhaustiveOracle) {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned m = 1; m <= std::min(n, 3u); ++m)
      for (unsigned k = 1; k <= 3; ++k) {
        const auto d = abide::coverage_distribution({n, m, k});
        const auto brute = oracle::enumerate_abide(n, m, k);
        for (unsigned t = 0; t <= n + 1; ++t) {
          const Rational expected = brute.contains(t) ? brute.at(t) : Rational(0);
          EXPECT_EQ(d.mass(t).value(), expected) << n << "," << m << "," << k << " t=" << t;
          EXPECT_EQ(abide::coverage_probability({n, m, k}, t).value(), expected);
        }
      }
}

TEST(CoverageDistribution, NormalizationAndSupport) {
  for (count_t n = 1; n <= 12; ++n)
    for (count_t m = 1; m <= n; ++m)
      for (count_t k = 1; k <= 5; ++k) {
        const Params p{n, m, k};
        const auto d = abide::coverage_distribution(p);
        EXPECT_EQ(d.total(), 1);
        for (count_t t = 0; t <= n + 1; ++t) {
          const bool inside = t >= m && t <= std::min(k * m, n);
          EXPECT_EQ(!d.mass(t).is_zero(), inside) << n << "," << m << "," << k << " t=" << t;
        }
      }
}

TEST(CoverageDistribution, FullMemoryIsPointMass) {
  for (count_t n = 1; n <= 8; ++n) {
    const auto d = abide::coverage_distribution({n, n, 3});
    EXPECT_EQ(d.masses().size(), 1u);
    EXPECT_EQ(d.mass(n).value(), 1);
  }
}

TEST(MeanCoverage, Examples) {
  EXPECT_EQ(abide::mean_coverage({5, 2, 1}), R(2));
  EXPECT_EQ(abide::mean_coverage({4, 2, 2}), R(3));
  EXPECT_EQ(abide::mean_coverage({2, 1, 2}), R(3, 2));
}

TEST(MeanCoverage, ClosedFormIdentity) {
  for (count_t n = 1; n <= 12; ++n)
    for (count_t m = 1; m <= n; ++m)
      for (count_t k = 1; k <= 5; ++k)
        EXPECT_EQ(abide::mean_coverage({n, m, k}), abide::mean_coverage_closed_form({n, m, k}))
            << n << "," << m << "," << k;
}

TEST(Masses, SubRangeMatchesFullDistribution) {
  const Params p{15, 3, 6};
  const auto full = abide::coverage_distribution(p);
  const auto part = abide::masses(p, 5, 9);
  ASSERT_EQ(part.size(), 5u);
  for (const auto& [t, mass] : part) EXPECT_EQ(mass, full.mass(t));
}

}  // namespace
}  // namespace rovcov
