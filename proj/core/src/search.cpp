#include "specpair/search.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "parallel.hpp"
#include "specpair/analytics.hpp"
#include "specpair/error.hpp"

namespace specpair {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<IntVector> sorted_points(const FiniteSet& s) {
  auto pts = s.points();
  std::sort(pts.begin(), pts.end());
  return pts;
}

IntVector decode(std::size_t index, std::int64_t n, std::size_t d) {
  IntVector p(d);
  for (std::size_t k = d; k-- > 0;) {
    p[k] = static_cast<std::int64_t>(index % static_cast<std::size_t>(n));
    index /= static_cast<std::size_t>(n);
  }
  return p;
}

std::size_t space_size(std::int64_t n, std::size_t d) {
  std::size_t size = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (size > (std::size_t{1} << 40) / static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::invalid_argument, "Z_N^d too large to search");
    }
    size *= static_cast<std::size_t>(n);
  }
  return size;
}

FiniteSet make_set(const std::vector<std::size_t>& idx, std::int64_t n, std::size_t d) {
  std::vector<IntVector> pts;
  pts.reserve(idx.size());
  for (auto i : idx) pts.push_back(decode(i, n, d));
  return FiniteSet(n, d, std::move(pts));
}

// All k-subsets of [0, m) in lexicographic order, optionally keeping one
// per translation class.
std::vector<FiniteSet> subsets(std::size_t m, std::size_t k, std::int64_t n, std::size_t d, bool dedupe) {
  std::vector<FiniteSet> out;
  std::set<std::vector<IntVector>> seen;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    FiniteSet s = make_set(idx, n, d);
    if (dedupe) {
      FiniteSet c = canonical_form(s);
      if (seen.insert(c.points()).second) out.push_back(std::move(c));
    } else {
      out.push_back(std::move(s));
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

FiniteSet random_subset(std::mt19937_64& rng, std::size_t m, std::size_t k, std::int64_t n, std::size_t d) {
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  // partial Fisher-Yates
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, m - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  std::vector<std::size_t> idx(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(idx.begin(), idx.end());
  return make_set(idx, n, d);
}

bool accepted(const FiniteClassification& c, PairKind target) { return c.kind >= target; }

}  // namespace

FiniteSet canonical_form(const FiniteSet& set) {
  std::vector<IntVector> best;
  bool have = false;
  for (const auto& p : set.points()) {
    IntVector t(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) t[k] = -p[k];
    auto pts = sorted_points(set.translated(t));
    if (!have || pts < best) {
      best = std::move(pts);
      have = true;
    }
  }
  return FiniteSet(set.modulus(), set.dimension(), std::move(best));
}

SearchResult enumerate_pairs(const SearchQuery& q) {
  if (q.modulus < 1) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  if (q.dimension < 1) throw Error(ErrorCode::invalid_argument, "dimension must be positive");
  if (q.target != PairKind::riesz_basis && q.target != PairKind::orthogonal_basis) {
    throw Error(ErrorCode::unsupported, "search targets riesz-basis or orthogonal-basis");
  }
  const std::size_t m = space_size(q.modulus, q.dimension);
  if (q.cardinality < 1 || q.cardinality > m) {
    throw Error(ErrorCode::invalid_argument, "cardinality " + std::to_string(q.cardinality) +
                                                 " outside [1, " + std::to_string(m) + "]");
  }

  const auto deadline = Clock::now() + q.time_budget;
  SearchResult result;
  result.seed = q.seed;

  if (m <= 16) {
    const auto sets = subsets(m, q.cardinality, q.modulus, q.dimension, q.deduplicate);
    // A blocks run in parallel; blocks are consumed in order so the cut at
    // max_results is deterministic.
    const std::size_t block = 32;
    for (std::size_t start = 0; start < sets.size(); start += block) {
      if (Clock::now() > deadline) {
        result.partial = true;
        break;
      }
      const std::size_t count = std::min(block, sets.size() - start);
      std::vector<std::vector<FoundPair>> found(count);
      std::atomic<bool> expired{false};
      detail::parallel_for(count, [&](std::size_t b) {
        const FiniteSet& a = sets[start + b];
        for (const auto& j : sets) {
          if (expired.load(std::memory_order_relaxed)) return;
          auto c = classify_finite_pair(a, j, q.tolerances);
          if (accepted(c, q.target)) found[b].push_back(FoundPair{a, j, std::move(c)});
          if (Clock::now() > deadline) expired = true;
        }
      }, 1, q.threads);
      if (expired) result.partial = true;
      for (auto& f : found) {
        for (auto& p : f) result.pairs.push_back(std::move(p));
      }
      result.examined += count * sets.size();
      if (result.pairs.size() >= q.max_results) {
        if (result.pairs.size() > q.max_results || start + count < sets.size()) result.partial = true;
        if (result.pairs.size() > q.max_results) {
          result.pairs.erase(result.pairs.begin() + static_cast<std::ptrdiff_t>(q.max_results), result.pairs.end());
        }
        break;
      }
      if (result.partial) break;
    }
    result.exhaustive = !result.partial;
    return result;
  }

  result.exhaustive = false;
  std::mt19937_64 rng(q.seed);
  std::vector<std::pair<FiniteSet, FiniteSet>> draws;
  std::set<std::pair<std::vector<IntVector>, std::vector<IntVector>>> seen;
  draws.reserve(q.max_samples);
  for (std::size_t s = 0; s < q.max_samples; ++s) {
    FiniteSet a = random_subset(rng, m, q.cardinality, q.modulus, q.dimension);
    FiniteSet j = random_subset(rng, m, q.cardinality, q.modulus, q.dimension);
    if (q.deduplicate) {
      a = canonical_form(a);
      j = canonical_form(j);
      if (!seen.insert({a.points(), j.points()}).second) continue;
    }
    draws.emplace_back(std::move(a), std::move(j));
  }
  std::vector<std::optional<FiniteClassification>> classes(draws.size());
  std::atomic<bool> expired{false};
  detail::parallel_for(draws.size(), [&](std::size_t i) {
    if (expired.load(std::memory_order_relaxed)) return;
    classes[i] = classify_finite_pair(draws[i].first, draws[i].second, q.tolerances);
    if (Clock::now() > deadline) expired = true;
  }, 8, q.threads);
  result.partial = expired.load();
  for (std::size_t i = 0; i < draws.size(); ++i) {
    if (!classes[i]) continue;
    ++result.examined;
    if (accepted(*classes[i], q.target)) {
      result.pairs.push_back(FoundPair{draws[i].first, draws[i].second, std::move(*classes[i])});
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end(), [](const FoundPair& x, const FoundPair& y) {
    const auto xa = sorted_points(x.a), ya = sorted_points(y.a);
    if (xa != ya) return xa < ya;
    return sorted_points(x.j) < sorted_points(y.j);
  });
  if (result.pairs.size() > q.max_results) {
    result.pairs.erase(result.pairs.begin() + static_cast<std::ptrdiff_t>(q.max_results), result.pairs.end());
    result.partial = true;
  }
  return result;
}

HadamardReport hadamard_report(const FiniteSet& a, const FiniteSet& j, const Tolerances& tolerances) {
  if (a.size() != j.size()) {
    throw Error(ErrorCode::shape_mismatch, "Hadamard report needs #A = #J, got " + std::to_string(a.size()) +
                                               " and " + std::to_string(j.size()));
  }
  const auto f = build_evaluation_matrix(a, j).entries;
  const auto k = static_cast<double>(a.size());
  const ComplexMatrix defect = f.adjoint() * f - k * ComplexMatrix::Identity(f.cols(), f.cols());
  HadamardReport r;
  r.order = a.size();
  r.max_deviation = defect.cwiseAbs().maxCoeff();
  r.hadamard = r.max_deviation < tolerances.unitarity;
  try {
    r.self_dual = is_self_dual(dual_piece_coefficients(a, j, tolerances), tolerances.unitarity);
  } catch (const Error&) {
    r.self_dual = false;
  }
  return r;
}

}  // namespace specpair
