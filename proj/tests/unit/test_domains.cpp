#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "specpair/domains.hpp"
#include "specpair/error.hpp"

using namespace specpair;

namespace {

std::vector<double> values_1d(const std::vector<RationalVector>& pts) {
  std::vector<double> out;
  for (const auto& p : pts) out.push_back(to_double(p[0]));
  return out;
}

}  // namespace

TEST_SUITE("domains") {
  TEST_CASE("box validation and overlap") {
    CHECK_THROWS_AS(BoxDomain::interval(1, 1), Error);
    CHECK_THROWS_AS(BoxDomain(1, {Box{{Rational(0)}, {Rational(2)}}, Box{{Rational(1)}, {Rational(3)}}}), Error);
    // touching boxes are fine
    const BoxDomain d(1, {Box{{Rational(0)}, {Rational(1)}}, Box{{Rational(1)}, {Rational(3, 2)}}});
    CHECK(d.measure() == Rational(3, 2));
    CHECK_THROWS_AS(BoxDomain(2, {Box{{Rational(0)}, {Rational(1)}}}), Error);
  }

  TEST_CASE("half-open membership") {
    const auto d = BoxDomain::interval(0, 1);
    const double in[1] = {0.0};
    const double out[1] = {1.0};
    CHECK(d.locate(in).has_value());
    CHECK_FALSE(d.locate(out).has_value());
  }

  TEST_CASE("minkowski translate in d=1") {
    const auto omega = minkowski_translate(BoxDomain::interval(0, 1), FiniteSet::line(4, {0, 2}));
    REQUIRE(omega.boxes().size() == 2);
    CHECK(omega.boxes()[0] == Box{{Rational(0)}, {Rational(1)}});
    CHECK(omega.boxes()[1] == Box{{Rational(2)}, {Rational(3)}});
    CHECK(omega.measure() == 2);
    CHECK(minkowski_translate(BoxDomain::interval(0, 1), FiniteSet::line(4, {0})) == BoxDomain::interval(0, 1));
  }

  TEST_CASE("minkowski translate in d=2") {
    const auto omega = minkowski_translate(BoxDomain::unit_cube(2), FiniteSet(4, 2, {{0, 0}, {2, 0}}));
    REQUIRE(omega.boxes().size() == 2);
    CHECK(omega.boxes()[1] == Box{{Rational(2), Rational(0)}, {Rational(3), Rational(1)}});
    CHECK(omega.measure() == 2);
  }

  TEST_CASE("overlapping translates name the offending pair") {
    try {
      minkowski_translate(BoxDomain::interval(0, 2), FiniteSet::line(6, {0, 1}));
      FAIL("expected overlap");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::overlap);
      CHECK(std::string(e.what()).find("1") != std::string::npos);
    }
  }

  TEST_CASE("measure scales exactly with #A") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
      const Rational w(1 + static_cast<long>(rng() % 5), 3 + static_cast<long>(rng() % 4));  // width < 2
      const auto base = BoxDomain::interval(Rational(1, 3), Rational(1, 3) + w);
      std::vector<std::int64_t> pts;
      for (std::int64_t x = 0; x < 12; x += 2) {
        if (rng() % 2) pts.push_back(x);
      }
      if (pts.empty()) pts.push_back(0);
      const auto a = FiniteSet::line(12, pts);
      CHECK(minkowski_translate(base, a).measure() == base.measure() * static_cast<long>(a.size()));
    }
  }

  TEST_CASE("shift spectrum") {
    const auto s = shift_spectrum(Spectrum::scaled_lattice(1), FiniteSet::line(4, {0, 1}), 4);
    REQUIRE(s.shifts().size() == 2);
    CHECK(s.shifts()[1] == RationalVector{Rational(1, 4)});
    CHECK(shift_spectrum(Spectrum::scaled_lattice(1), FiniteSet::line(4, {0}), 4) == Spectrum::scaled_lattice(1));
    const auto s2 = shift_spectrum(Spectrum::scaled_lattice(2), FiniteSet(4, 2, {{0, 0}, {1, 0}}), 4);
    CHECK(s2.shifts()[1] == RationalVector{Rational(1, 4), Rational(0)});
    // 0 and 2/4 coincide modulo (1/2)Z
    try {
      shift_spectrum(Spectrum::scaled_lattice(1, Rational(1, 2)), FiniteSet::line(4, {0, 2}), 4);
      FAIL("expected duplicate");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::duplicate_spectrum);
    }
  }

  TEST_CASE("enumerate spectrum") {
    const auto s = shift_spectrum(Spectrum::scaled_lattice(1), FiniteSet::line(4, {0, 1}), 4);
    const auto pts = enumerate_spectrum(s, 1.0);
    CHECK(values_1d(pts) == std::vector<double>{-1.0, -0.75, 0.0, 0.25, 1.0});
    CHECK(values_1d(enumerate_spectrum(Spectrum::scaled_lattice(1), 2.0)) ==
          std::vector<double>{-2, -1, 0, 1, 2});
    CHECK(enumerate_spectrum(s, 0.0).size() == 1);
  }

  TEST_CASE("enumeration agrees with brute force, is sorted and grows with radius") {
    for (const auto& h : {Rational(1), Rational(1, 2), Rational(3, 2)}) {
      const auto s = shift_spectrum(Spectrum::scaled_lattice(1, h), FiniteSet::line(6, {0, 1}), 6);
      for (double r : {0.5, 2.0, 3.7, 6.0}) {
        const auto got = values_1d(enumerate_spectrum(s, r));
        const auto ref = oracle::lattice_points_1d(to_double(h), {0.0, 1.0 / 6.0}, r);
        REQUIRE(got.size() == ref.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(ref[i]));
        const auto pts = enumerate_spectrum(s, r);
        for (std::size_t i = 1; i < pts.size(); ++i) CHECK(lexicographic_less(pts[i - 1], pts[i]));
        const auto bigger = enumerate_spectrum(s, 2 * r);
        const std::set<RationalVector> all(bigger.begin(), bigger.end());
        for (const auto& p : pts) CHECK(all.count(p) == 1);
      }
    }
  }

  TEST_CASE("skew lattice enumeration in d=2") {
    const Spectrum s(2, {{Rational(1), Rational(1)}, {Rational(0), Rational(2)}}, {{Rational(0), Rational(0)}});
    const auto pts = enumerate_spectrum(s, 3.0);
    std::size_t count = 0;
    for (int n1 = -20; n1 <= 20; ++n1) {
      for (int n2 = -20; n2 <= 20; ++n2) {
        const int x = n1;
        const int y = n1 + 2 * n2;
        if (std::abs(x) <= 3 && std::abs(y) <= 3) ++count;
      }
    }
    CHECK(pts.size() == count);
    CHECK(s.covolume() == 2);
  }

  TEST_CASE("lattice window gives 22 points for Z u Z+1/4") {
    const auto s = shift_spectrum(Spectrum::scaled_lattice(1), FiniteSet::line(4, {0, 1}), 4);
    CHECK(enumerate_lattice_window(s, 5).size() == 22);
    CHECK(enumerate_spectrum(s, 5.0).size() == 21);
  }

  TEST_CASE("root-of-unity condition") {
    CHECK(root_of_unity_condition(Spectrum::scaled_lattice(1), FiniteSet::line(4, {0, 2})));
    CHECK_FALSE(root_of_unity_condition(Spectrum::scaled_lattice(1, Rational(1, 2)), FiniteSet::line(6, {0, 3})));
    CHECK(root_of_unity_condition(Spectrum::scaled_lattice(1, Rational(1, 7)), FiniteSet::line(6, {0})));
    // shifted base spectrum must also satisfy it
    const Spectrum shifted(1, {{Rational(1)}}, {{Rational(1, 3)}});
    CHECK_FALSE(root_of_unity_condition(shifted, FiniteSet::line(4, {0, 2})));
    CHECK(root_of_unity_condition(shifted, FiniteSet::line(6, {0, 3})));
  }

  TEST_CASE("spectrum validation") {
    CHECK_THROWS_AS(Spectrum(2, {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, {{Rational(0), Rational(0)}}),
                    Error);
    CHECK_THROWS_AS(Spectrum(1, {{Rational(1)}}, {{Rational(0)}, {Rational(1)}}), Error);
  }

  TEST_CASE("products") {
    const auto omega = minkowski_translate(BoxDomain::interval(0, 1), FiniteSet::line(4, {0, 2}));
    const auto sq = product(omega, omega);
    CHECK(sq.boxes().size() == 4);
    CHECK(sq.measure() == 4);
    const auto s = shift_spectrum(Spectrum::scaled_lattice(1), FiniteSet::line(4, {0, 1}), 4);
    const auto s2 = product(s, s);
    CHECK(s2.shifts().size() == 4);
    CHECK(s2.covolume() == 1);
  }
}
