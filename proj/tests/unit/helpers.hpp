#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "specpair/finite_pairs.hpp"

namespace testing {

inline std::vector<std::vector<std::int64_t>> raw_points(const specpair::FiniteSet& s) {
  return {s.points().begin(), s.points().end()};
}

/// k distinct points of Z_N (d = 1).
inline specpair::FiniteSet random_line_set(std::mt19937_64& rng, std::int64_t n, std::size_t k) {
  std::vector<std::int64_t> all(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return specpair::FiniteSet::line(n, all);
}

}  // namespace testing
