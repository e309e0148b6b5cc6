#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "specpair/finite_pairs.hpp"

namespace specpair {

struct SearchQuery {
  std::int64_t modulus = 2;
  std::size_t dimension = 1;
  std::size_t cardinality = 1;
  PairKind target = PairKind::orthogonal_basis;  // riesz_basis or orthogonal_basis
  std::size_t max_results = 1000;
  std::chrono::milliseconds time_budget{10000};
  std::uint64_t seed = 0;
  bool deduplicate = true;     // one representative per translation class of A and of J
  std::size_t max_samples = 20000;  // random mode only
  std::size_t threads = 0;     // 0: hardware concurrency
  Tolerances tolerances{};
};

struct FoundPair {
  FiniteSet a;
  FiniteSet j;
  FiniteClassification classification;
};

struct SearchResult {
  std::vector<FoundPair> pairs;
  bool exhaustive = true;   // every k-subset pair examined (up to translation when deduplicating)
  bool partial = false;     // time budget or max_results cut the search short
  std::uint64_t seed = 0;
  std::size_t examined = 0;
};

/// Points sorted, translated so that the set contains 0, lexicographically
/// minimal over all such translates.
FiniteSet canonical_form(const FiniteSet& set);

/// Exhaustive over k-subsets when N^d ≤ 16, otherwise random sampling from
/// query.seed. Results come in canonical order of (A, J).
SearchResult enumerate_pairs(const SearchQuery& query);

struct HadamardReport {
  std::size_t order = 0;
  bool hadamard = false;   // F^H F = k I
  bool self_dual = false;
  double max_deviation = 0.0;  // max |F^H F - k I|
};

/// Throws shape_mismatch unless #A = #J.
HadamardReport hadamard_report(const FiniteSet& a, const FiniteSet& j, const Tolerances& tolerances = {});

}  // namespace specpair
