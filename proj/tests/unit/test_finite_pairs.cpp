#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "specpair/error.hpp"
#include "specpair/finite_pairs.hpp"

using namespace specpair;

TEST_SUITE("finite_pairs") {
  TEST_CASE("N=4, A={0,2}, J={0,1} is orthogonal with constants 2") {
    const auto a = FiniteSet::line(4, {0, 2});
    const auto j = FiniteSet::line(4, {0, 1});
    const auto c = classify_finite_pair(a, j);
    CHECK(c.kind == PairKind::orthogonal_basis);
    CHECK(c.lower_constant == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c.upper_constant == doctest::Approx(2.0).epsilon(1e-12));
    const auto f = build_evaluation_matrix(a, j).entries;
    CHECK(f(0, 0) == std::complex<double>(1, 0));
    CHECK(f(1, 1) == std::complex<double>(-1, 0));
  }

  TEST_CASE("N=6, A={0,3}, J={0,1} is orthogonal") {
    CHECK(classify_finite_pair(FiniteSet::line(6, {0, 3}), FiniteSet::line(6, {0, 1})).kind ==
          PairKind::orthogonal_basis);
  }

  TEST_CASE("duplicates are rejected after reduction") {
    CHECK_THROWS_AS(FiniteSet::line(3, {0, 0}), Error);
    try {
      FiniteSet::line(4, {1, 5});
      FAIL("expected duplicate");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::duplicate_point);
    }
  }

  TEST_CASE("insufficient spectrum") {
    try {
      classify_finite_pair(FiniteSet::line(4, {0, 1, 2}), FiniteSet::line(4, {0, 1}));
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::insufficient_spectrum);
    }
  }

  TEST_CASE("frame and none kinds") {
    // #J > #A with full column rank
    const auto c = classify_finite_pair(FiniteSet::line(5, {0, 2}), FiniteSet::line(5, {0, 1, 3}));
    CHECK(c.kind == PairKind::frame);
    const auto r = classify_finite_pair(FiniteSet::line(4, {0, 2}), FiniteSet::line(4, {0, 2}));
    CHECK(r.kind == PairKind::none);
    CHECK(r.lower_constant < 1e-10);
  }

  TEST_CASE("A={0,2}, J={0,1} in Z_5 is Riesz but not orthogonal") {
    const auto c = classify_finite_pair(FiniteSet::line(5, {0, 2}), FiniteSet::line(5, {0, 1}));
    CHECK(c.kind == PairKind::riesz_basis);
    const auto ref = oracle::squared_singular_values(oracle::dft_submatrix(5, {{0}, {2}}, {{0}, {1}}));
    CHECK(c.lower_constant == doctest::Approx(ref.front()).epsilon(1e-12));
    CHECK(c.upper_constant == doctest::Approx(ref.back()).epsilon(1e-12));
  }

  TEST_CASE("mutual orthogonality") {
    CHECK(check_mutual_orthogonality(FiniteSet::line(4, {0, 2}), FiniteSet::line(4, {0, 1})));
    CHECK_FALSE(check_mutual_orthogonality(FiniteSet::line(4, {0, 1}), FiniteSet::line(4, {0, 1})));
    CHECK(check_mutual_orthogonality(FiniteSet::line(7, {0, 1, 5}), FiniteSet::line(7, {3})));
  }

  TEST_CASE("transpose") {
    const auto a = FiniteSet::line(4, {0, 2});
    const auto j = FiniteSet::line(4, {0, 1});
    const auto [ta, tj] = transpose_pair(a, j);
    CHECK(ta == j);
    CHECK(tj == a);
    CHECK(classify_finite_pair(ta, tj).kind == PairKind::orthogonal_basis);
    const auto z = FiniteSet::line(5, {0});
    CHECK(transpose_pair(z, z).first == z);
    const auto [sa, sj] = transpose_pair(FiniteSet::line(6, {0, 3}), FiniteSet::line(6, {0, 1}));
    CHECK(classify_finite_pair(sa, sj).kind == PairKind::orthogonal_basis);
    try {
      transpose_pair(FiniteSet::line(5, {0, 2}), FiniteSet::line(5, {0, 1, 3}));
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::symmetry_undefined);
    }
  }

  TEST_CASE("symbol of a set") {
    CHECK(std::abs(symbol_of_set(FiniteSet::line(4, {0, 1}), {2})) < 1e-15);
    CHECK(symbol_of_set(FiniteSet::line(4, {0, 1}), {0}) == std::complex<double>(2, 0));
    CHECK(std::abs(symbol_of_set(FiniteSet::line(6, {0, 3}), {3})) < 1e-15);
  }

  TEST_CASE("symbol matches brute-force character sums for N <= 12") {
    for (std::int64_t n = 1; n <= 12; ++n) {
      std::vector<std::int64_t> pts;
      for (std::int64_t x = 0; x < n; x += 2) pts.push_back(x);
      const auto j = FiniteSet::line(n, pts);
      for (std::int64_t k = -n; k <= n; ++k) {
        CHECK(std::abs(symbol_of_set(j, {k}) - oracle::character_sum(n, pts, k)) < 1e-12);
      }
    }
  }

  TEST_CASE("evaluation matrix matches an independent DFT in d=2") {
    const FiniteSet a(4, 2, {{0, 0}, {2, 0}, {1, 3}});
    const FiniteSet j(4, 2, {{0, 0}, {1, 0}, {3, 2}});
    const auto f = build_evaluation_matrix(a, j).entries;
    const auto ref = oracle::dft_submatrix(4, testing::raw_points(a), testing::raw_points(j));
    CHECK((f - ref).cwiseAbs().maxCoeff() < 1e-14);
  }

  TEST_CASE("properties over random pairs") {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 300; ++trial) {
      const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 11);
      const std::size_t k = 1 + rng() % static_cast<std::size_t>(std::min<std::int64_t>(n, 5));
      const auto a = testing::random_line_set(rng, n, k);
      const auto j = testing::random_line_set(rng, n, k);
      const auto c = classify_finite_pair(a, j);

      // against the eigen-oracle
      const auto ref = oracle::squared_singular_values(
          oracle::dft_submatrix(n, testing::raw_points(a), testing::raw_points(j)));
      CHECK(c.upper_constant == doctest::Approx(ref.back()).epsilon(1e-9));

      // orthogonal <=> mutually orthogonal and square
      CHECK((c.kind == PairKind::orthogonal_basis) == check_mutual_orthogonality(a, j));
      if (c.kind == PairKind::orthogonal_basis) {
        const auto f = build_evaluation_matrix(a, j).entries;
        const ComplexMatrix d = f.adjoint() * f - static_cast<double>(k) * ComplexMatrix::Identity(f.cols(), f.cols());
        CHECK(d.cwiseAbs().maxCoeff() < 1e-10);
      }

      // symmetry on basis kinds
      if (c.kind >= PairKind::riesz_basis) {
        CHECK(classify_finite_pair(j, a).kind == c.kind);
      }

      // reordering invariance
      auto pts = a.points();
      std::reverse(pts.begin(), pts.end());
      const auto c2 = classify_finite_pair(FiniteSet(n, 1, pts), j);
      REQUIRE(c2.singular_values.size() == c.singular_values.size());
      for (std::size_t i = 0; i < c.singular_values.size(); ++i) {
        CHECK(c2.singular_values[i] == doctest::Approx(c.singular_values[i]).epsilon(1e-12));
      }

      // translation of A only multiplies F by a unimodular diagonal
      const auto t = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
      CHECK(classify_finite_pair(a.translated({t}), j).kind == c.kind);
    }
  }

  TEST_CASE("rational shifts scale to J") {
    const auto j = scale_rational_shifts({{Rational(0)}, {Rational(1, 4)}}, 4);
    CHECK(j == FiniteSet::line(4, {0, 1}));
    CHECK(scale_rational_shifts({{Rational(5, 4)}}, 4) == FiniteSet::line(4, {1}));
    CHECK_THROWS_AS(scale_rational_shifts({{Rational(1, 3)}}, 4), Error);
  }

  TEST_CASE("kind names") {
    CHECK(to_string(PairKind::orthogonal_basis) == "orthogonal-basis");
    CHECK(parse_pair_kind("riesz") == PairKind::riesz_basis);
    CHECK(parse_pair_kind("riesz-basis") == PairKind::riesz_basis);
    CHECK_THROWS_AS(parse_pair_kind("unitary"), Error);
  }
}
