#include <gtest/gtest.h>

#include <cmath>

#include "rovcov/abide.hpp"
#include "rovcov/eabide.hpp"
#include "rovcov/simulate.hpp"

namespace rovcov {
namespace {

using simulate::VisitMatrix;

TEST(VisitMatrix, UnionSize) {
  EXPECT_EQ(simulate::union_size(VisitMatrix(2, 3)), 0u);
  EXPECT_EQ(simulate::union_size(VisitMatrix::from_rows({"100", "010", "001"})), 3u);
  EXPECT_EQ(simulate::union_size(VisitMatrix::from_rows({"1100", "0110"})), 3u);
  EXPECT_THROW(VisitMatrix::from_rows({"10", "1"}), std::invalid_argument);
}

TEST(SampleTrial, ForcedOutcomes) {
  auto rng = simulate::trial_engine(1, 0);
  EXPECT_EQ(simulate::sample_trial({3, 3, 1}, Scheme::abide, rng), VisitMatrix::from_rows({"111"}));
  EXPECT_EQ(simulate::sample_trial({1, 2, 2}, Scheme::eabide, rng), VisitMatrix::from_rows({"1", "1"}));
}

TEST(SampleTrial, RowWeightInvariants) {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    auto rng = simulate::trial_engine(99, i);
    const auto a = simulate::sample_trial({7, 3, 4}, Scheme::abide, rng);
    for (std::size_t r = 0; r < a.rows(); ++r) ASSERT_EQ(a.row_weight(r), 3u);
    const auto e = simulate::sample_trial({7, 3, 4}, Scheme::eabide, rng);
    for (std::size_t r = 0; r < e.rows(); ++r) {
      ASSERT_GE(e.row_weight(r), 1u);
      ASSERT_LE(e.row_weight(r), 3u);
    }
  }
}

TEST(SampleTrial, AbideRowsAreUniform) {
  constexpr int kTrials = 60000;
  std::map<std::string, int> freq;
  for (int i = 0; i < kTrials; ++i) {
    auto rng = simulate::trial_engine(5, static_cast<std::uint64_t>(i));
    const auto v = simulate::sample_trial({4, 2, 1}, Scheme::abide, rng);
    std::string row;
    for (std::size_t j = 0; j < 4; ++j) row += v.test(0, j) ? '1' : '0';
    ++freq[row];
  }
  ASSERT_EQ(freq.size(), 6u);
  const double p = 1.0 / 6.0;
  const double sigma = std::sqrt(p * (1 - p) / kTrials);
  for (const auto& [row, c] : freq) EXPECT_NEAR(c / double(kTrials), p, 4 * sigma) << row;
}

TEST(RunSimulation, DeterministicCases) {
  const auto a = simulate::run_simulation({3, 3, 1}, Scheme::abide, 1000, 123);
  EXPECT_EQ(a.counts, (std::map<count_t, std::uint64_t>{{3, 1000}}));
  const auto b = simulate::run_simulation({1, 1, 1}, Scheme::eabide, 7, 42);
  EXPECT_EQ(b.counts, (std::map<count_t, std::uint64_t>{{1, 7}}));
  EXPECT_THROW(simulate::run_simulation({3, 3, 1}, Scheme::abide, 0, 1), std::invalid_argument);
}

TEST(RunSimulation, IndependentOfWorkerCount) {
  const auto one = simulate::run_simulation({20, 4, 3}, Scheme::eabide, 5001, 7, 1);
  for (unsigned w : {2u, 3u, 8u, 64u}) EXPECT_EQ(simulate::run_simulation({20, 4, 3}, Scheme::eabide, 5001, 7, w), one);
  const auto other = simulate::run_simulation({20, 4, 3}, Scheme::eabide, 5001, 8, 1);
  EXPECT_NE(other.counts, one.counts);
}

TEST(RunSimulation, CountsSumToTrialsOnSupport) {
  for (Scheme s : {Scheme::abide, Scheme::eabide}) {
    const Params p{9, 3, 2};
    const auto r = simulate::run_simulation(p, s, 3000, 11, 4);
    std::uint64_t total = 0;
    for (const auto& [t, c] : r.counts) {
      total += c;
      EXPECT_GE(t, support_min(p, s));
      EXPECT_LE(t, support_max(p, s));
    }
    EXPECT_EQ(total, 3000u);
  }
}

TEST(RunSimulation, EmpiricalMassesNearExact) {
  constexpr std::uint64_t kTrials = 100000;
  const auto sim = simulate::run_simulation({4, 2, 2}, Scheme::abide, kTrials, 2024, 4);
  const auto exact = abide::coverage_distribution({4, 2, 2});
  for (count_t t = 2; t <= 4; ++t) {
    const double p = static_cast<double>(exact.mass(t).value());
    const double emp = static_cast<double>(sim.counts.at(t)) / kTrials;
    EXPECT_NEAR(emp, p, 4 * std::sqrt(p * (1 - p) / kTrials)) << t;
  }
  EXPECT_LE(simulate::total_variation(exact, sim), Rational(1, 100));
}

TEST(TotalVariation, Extremes) {
  const std::map<count_t, Rational> a{{3, 1}};
  const std::map<count_t, Rational> b{{4, 1}};
  EXPECT_EQ(simulate::total_variation(a, a), 0);
  EXPECT_EQ(simulate::total_variation(a, b), 1);
  const auto d = abide::coverage_distribution({3, 3, 1});
  const auto sim = simulate::run_simulation({3, 3, 1}, Scheme::abide, 10, 1);
  EXPECT_EQ(simulate::total_variation(d, sim), 0);
}

TEST(TotalVariation, MismatchedInputs) {
  const auto d = abide::coverage_distribution({4, 2, 2});
  const auto sim = simulate::run_simulation({4, 2, 3}, Scheme::abide, 10, 1);
  EXPECT_THROW(simulate::total_variation(d, sim), std::invalid_argument);
  const auto sim2 = simulate::run_simulation({4, 2, 2}, Scheme::eabide, 10, 1);
  EXPECT_THROW(simulate::total_variation(d, sim2), std::invalid_argument);
}

}  // namespace
}  // namespace rovcov
