#pragma once

// Scheme dispatch over the two exact coverage laws.

#include "rovcov/abide.hpp"
#include "rovcov/eabide.hpp"

namespace rovcov {

inline CoverageDistribution::MassMap coverage_masses(const Params& p, Scheme s, count_t lo, count_t hi) {
  return s == Scheme::abide ? abide::masses(p, lo, hi) : eabide::masses(p, lo, hi);
}

inline CoverageDistribution exact_distribution(const Params& p, Scheme s) {
  return s == Scheme::abide ? abide::coverage_distribution(p) : eabide::coverage_distribution_star(p);
}

inline ExactProbability exact_probability(const Params& p, Scheme s, count_t t) {
  return s == Scheme::abide ? abide::coverage_probability(p, t) : eabide::coverage_probability_star(p, t);
}

inline Rational mean_closed_form(const Params& p, Scheme s) {
  return s == Scheme::abide ? abide::mean_coverage_closed_form(p) : eabide::mean_coverage_star_closed_form(p);
}

}  // namespace rovcov
