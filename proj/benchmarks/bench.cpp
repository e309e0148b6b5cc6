#include <benchmark/benchmark.h>

#include "specpair/analytics.hpp"
#include "specpair/constructor.hpp"
#include "specpair/search.hpp"

using namespace specpair;

namespace {

void classify(benchmark::State& state) {
  const auto n = state.range(0);
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> j;
  for (std::int64_t i = 0; i < n / 2; ++i) {
    a.push_back(2 * i);
    j.push_back(i);
  }
  const auto fa = FiniteSet::line(n, a);
  const auto fj = FiniteSet::line(n, j);
  for (auto _ : state) benchmark::DoNotOptimize(classify_finite_pair(fa, fj));
}
BENCHMARK(classify)->Arg(4)->Arg(16)->Arg(64)->Arg(128);

void gram(benchmark::State& state) {
  const auto base = ContinuousPair::orthogonal(BoxDomain::interval(0, 1), Spectrum::scaled_lattice(1));
  const auto r = combine_riesz(base, FiniteSet::line(5, {0, 2}), FiniteSet::line(5, {0, 1}));
  const auto radius = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_gram(r.pair->domain, r.pair->spectrum, radius));
}
BENCHMARK(gram)->Arg(5)->Arg(20)->Arg(80)->Unit(benchmark::kMicrosecond);

void gram_2d(benchmark::State& state) {
  const auto base = ContinuousPair::orthogonal(BoxDomain::unit_cube(2), Spectrum::scaled_lattice(2));
  const auto r = combine_orthogonal(base, FiniteSet(4, 2, {{0, 0}, {2, 0}}), FiniteSet(4, 2, {{0, 0}, {1, 0}}));
  const auto radius = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_gram(r.pair->domain, r.pair->spectrum, radius));
}
BENCHMARK(gram_2d)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void search(benchmark::State& state) {
  SearchQuery q;
  q.modulus = state.range(0);
  q.cardinality = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pairs(q));
}
BENCHMARK(search)->Args({4, 2})->Args({8, 2})->Args({12, 3})->Args({16, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
