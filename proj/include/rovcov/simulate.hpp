#pragma once

// Monte Carlo counterpart of the exact laws. Each trial samples a k x n visit
// matrix (row i marks the nodes agent i collected data from) and records the
// number of nonzero columns.
//
// Trial i draws from its own engine seeded by mixing (seed, i), so results do
// not depend on how trials are split across workers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rovcov/coverage.hpp"

namespace rovcov::simulate {

/// Row-major k x n 0/1 matrix.
class VisitMatrix {
 public:
  VisitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  /// Builds a matrix from strings such as {"1100", "0110"}.
  static VisitMatrix from_rows(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    VisitMatrix v(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged visit matrix rows");
      for (std::size_t j = 0; j < cols; ++j) {
        if (rows[i][j] != '0' && rows[i][j] != '1') throw std::invalid_argument("visit matrix cells must be 0 or 1");
        v.set(i, j, rows[i][j] == '1');
      }
    }
    return v;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool test(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool on = true) { bits_[i * cols_ + j] = on ? 1 : 0; }

  std::size_t row_weight(std::size_t i) const {
    auto first = bits_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    return static_cast<std::size_t>(std::count(first, first + static_cast<std::ptrdiff_t>(cols_), 1));
  }

  friend bool operator==(const VisitMatrix&, const VisitMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> bits_;
};

/// Number of columns containing at least one 1.
inline std::size_t union_size(const VisitMatrix& v) {
  std::size_t covered = 0;
  for (std::size_t j = 0; j < v.cols(); ++j) {
    for (std::size_t i = 0; i < v.rows(); ++i) {
      if (v.test(i, j)) {
        ++covered;
        break;
      }
    }
  }
  return covered;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Engine for one trial, a pure function of (seed, trial).
inline std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL)));
}

/// One trial. ABIDE rows are uniform m-subsets (partial Fisher-Yates);
/// EABIDE rows are the occupancy of m iid uniform draws.
template <typename Engine>
VisitMatrix sample_trial(const Params& p, Scheme scheme, Engine& rng) {
  p.validate(scheme);
  VisitMatrix v(p.k, p.n);
  if (scheme == Scheme::abide) {
    std::vector<std::uint32_t> nodes(p.n);
    for (count_t i = 0; i < p.k; ++i) {
      std::iota(nodes.begin(), nodes.end(), 0u);
      for (count_t j = 0; j < p.m; ++j) {
        std::uniform_int_distribution<count_t> pick(j, p.n - 1);
        std::swap(nodes[j], nodes[pick(rng)]);
        v.set(i, nodes[j]);
      }
    }
  } else {
    std::uniform_int_distribution<count_t> pick(0, p.n - 1);
    for (count_t i = 0; i < p.k; ++i) {
      for (count_t j = 0; j < p.m; ++j) v.set(i, pick(rng));
    }
  }
  return v;
}

struct SimulationResult {
  Params params;
  Scheme scheme = Scheme::abide;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::map<count_t, std::uint64_t> counts;

  /// counts(t) / trials, exactly.
  std::map<count_t, Rational> empirical() const {
    std::map<count_t, Rational> out;
    for (const auto& [t, c] : counts) out.emplace(t, Rational(Natural(c), Natural(trials)));
    return out;
  }

  friend bool operator==(const SimulationResult&, const SimulationResult&) = default;
};

/// Runs `trials` independent trials. `workers` is a hint; the result is
/// identical for every value.
inline SimulationResult run_simulation(const Params& p, Scheme scheme, std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers = 1) {
  p.validate(scheme);
  if (trials < 1) throw std::invalid_argument("trials must satisfy trials ≥ 1");
  if (p.n > UINT32_MAX) throw std::invalid_argument("n too large to simulate");
  workers = std::max(1u, workers);
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  std::vector<std::map<count_t, std::uint64_t>> partial(workers);
  auto run_range = [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    auto& tally = partial[w];
    for (std::uint64_t i = begin; i < end; ++i) {
      auto rng = trial_engine(seed, i);
      ++tally[union_size(sample_trial(p, scheme, rng))];
    }
  };

  const std::uint64_t chunk = trials / workers;
  const std::uint64_t extra = trials % workers;
  std::vector<std::jthread> pool;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    if (w + 1 == workers) {
      run_range(w, begin, end);
    } else {
      pool.emplace_back(run_range, w, begin, end);
    }
    begin = end;
  }
  pool.clear();

  SimulationResult result{p, scheme, trials, seed, {}};
  for (const auto& tally : partial) {
    for (const auto& [t, c] : tally) result.counts[t] += c;
  }
  return result;
}

/// Half the L1 distance between two mass functions on coverage sizes.
inline Rational total_variation(const std::map<count_t, Rational>& a, const std::map<count_t, Rational>& b) {
  Rational sum = 0;
  for (const auto& [t, pa] : a) {
    auto it = b.find(t);
    sum += boost::multiprecision::abs(pa - (it == b.end() ? Rational(0) : it->second));
  }
  for (const auto& [t, pb] : b) {
    if (!a.contains(t)) sum += boost::multiprecision::abs(pb);
  }
  return sum / 2;
}

inline std::map<count_t, Rational> as_rational_map(const CoverageDistribution& d) {
  std::map<count_t, Rational> out;
  for (const auto& [t, p] : d.masses()) out.emplace(t, p.value());
  return out;
}

inline Rational total_variation(const CoverageDistribution& dist, const SimulationResult& sim) {
  if (!(dist.params() == sim.params) || dist.scheme() != sim.scheme) {
    throw std::invalid_argument("distribution and simulation have different parameters or scheme");
  }
  return total_variation(as_rational_map(dist), sim.empirical());
}

}  // namespace rovcov::simulate
