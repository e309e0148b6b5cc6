#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "specpair/error.hpp"
#include "specpair/sampling.hpp"

using namespace specpair;

namespace {

const FiniteSet A4 = FiniteSet::line(4, {0, 2});
const FiniteSet J4 = FiniteSet::line(4, {0, 1});

double reconstruction_error(const BandlimitedSignal& f, const FiniteSet& j, std::int64_t m, std::size_t per_box) {
  const auto pattern = SamplePattern::from_finite_set(j, m);
  const auto samples = sample_signal(f, pattern);
  const auto xi = midpoint_grid(f.support(), per_box);
  const auto est = reconstruct_spectrum(samples, pattern, j, xi);
  std::vector<std::complex<double>> truth;
  for (double x : xi) truth.push_back(f.spectrum_at(x));
  return relative_l2_error(est, truth);
}

}  // namespace

TEST_SUITE("sampling") {
  TEST_CASE("sampling domain") {
    const auto omega = sampling_domain(A4);
    CHECK(omega.measure() == 2);
    CHECK(omega.boxes()[1].lower[0] == 2);
  }

  TEST_CASE("sample values") {
    const auto f = BandlimitedSignal::indicator(sampling_domain(A4));
    CHECK(f.value_at(0) == std::complex<double>(2, 0));
    const auto g = BandlimitedSignal::indicator(BoxDomain::interval(0, 1));
    const auto expect = (oracle::expi(std::numbers::pi / 2) - 1.0) / std::complex<double>(0.0, 2.0 * std::numbers::pi / 4);
    CHECK(std::abs(g.value_at(Rational(1, 4)) - expect) < 1e-15);
    for (const auto& s : sample_signal(BandlimitedSignal::zero(sampling_domain(A4)), SamplePattern::from_finite_set(J4, 5))) {
      CHECK(s.value == std::complex<double>(0, 0));
    }
  }

  TEST_CASE("indicator samples vanish off the origin on Z u Z+1/4") {
    const auto f = BandlimitedSignal::indicator(sampling_domain(A4));
    for (const auto& s : sample_signal(f, SamplePattern::from_finite_set(J4, 20))) {
      if (s.time == 0) continue;
      CHECK(s.value == std::complex<double>(0, 0));
    }
  }

  TEST_CASE("moment integrals agree with quadrature") {
    for (int p = 0; p <= 4; ++p) {
      for (double w : {0.0, 1e-9, 0.01, 0.3, 1.0, 2.75, -6.5, 40.0}) {
        const auto got = moment_integral(2.0, 3.0, p, w);
        const auto ref = oracle::moment(2.0, 3.0, p, w);
        CHECK(std::abs(got - ref) < 1e-11 * std::max(1.0, std::abs(ref)));
        const auto got2 = moment_integral(-0.5, 1.0, p, w);
        CHECK(std::abs(got2 - oracle::moment(-0.5, 1.0, p, w)) < 1e-12);
      }
    }
  }

  TEST_CASE("polynomial-exponential signal values agree with quadrature") {
    const auto omega = sampling_domain(A4);
    const BandlimitedSignal f(omega, {SpectralPiece{0, {SpectralTerm{{0.5, -1.0}, 2, Rational(1, 3)}}},
                                      SpectralPiece{1, {SpectralTerm{{1.0, 0.0}, 0, Rational(-2)},
                                                        SpectralTerm{{0.0, 2.0}, 1, Rational(0)}}}});
    for (const Rational& t : {Rational(0), Rational(1, 4), Rational(-7, 4), Rational(5)}) {
      const double td = to_double(t);
      const auto ref = oracle::integrate(
                           [&](double xi) {
                             return std::complex<double>(0.5, -1.0) * xi * xi *
                                    oracle::expi(2 * std::numbers::pi * (1.0 / 3.0 + td) * xi);
                           },
                           0.0, 1.0, 32) +
                       oracle::integrate(
                           [&](double xi) {
                             return oracle::expi(2 * std::numbers::pi * (-2.0 + td) * xi) +
                                    std::complex<double>(0.0, 2.0) * xi * oracle::expi(2 * std::numbers::pi * td * xi);
                           },
                           2.0, 3.0, 32);
      CHECK(std::abs(f.value_at(t) - ref) < 1e-11);
    }
    CHECK_THROWS_AS(BandlimitedSignal(omega, {SpectralPiece{2, {}}}), Error);
  }

  TEST_CASE("pattern") {
    const auto p = SamplePattern::from_finite_set(J4, 1);
    const auto pts = p.points();
    REQUIRE(pts.size() == 6);
    CHECK(pts.front() == -1);
    CHECK(pts[1] == Rational(-3, 4));
    CHECK(pts.back() == Rational(5, 4));
    CHECK_THROWS_AS(SamplePattern({Rational(0), Rational(0)}, 3), Error);
    CHECK_THROWS_AS(SamplePattern({Rational(1)}, 3), Error);
    CHECK_THROWS_AS(SamplePattern({Rational(0)}, -1), Error);
  }

  TEST_CASE("alias coefficients") {
    const auto terms = alias_coefficients(A4, J4, -2, 2);
    REQUIRE(terms.size() == 5);
    CHECK(std::abs(terms[0].symbol) < 1e-15);
    CHECK(terms[0].in_difference_set);
    CHECK(terms[2].symbol == std::complex<double>(2, 0));
    CHECK(std::abs(terms[4].symbol) < 1e-15);
    CHECK_FALSE(terms[1].in_difference_set);
    for (const auto& t : alias_coefficients(A4, FiniteSet::line(4, {0}), -5, 5)) {
      CHECK(t.symbol == std::complex<double>(1, 0));
    }
    CHECK(std::abs(alias_coefficients(FiniteSet::line(6, {0, 3}), FiniteSet::line(6, {0, 1}), 3, 3)[0].symbol) <
          1e-15);
  }

  TEST_CASE("alias cancellation report") {
    const auto ok = verify_alias_cancellation(A4, J4, -5, 5);
    CHECK(ok.passed());
    CHECK(ok.finite_kind == PairKind::orthogonal_basis);
    CHECK(ok.zero_coefficient == std::complex<double>(2, 0));

    const auto bad = verify_alias_cancellation(A4, FiniteSet::line(4, {0, 2}), -5, 5);
    CHECK_FALSE(bad.passed());
    CHECK(bad.difference_violations == std::vector<std::int64_t>{-2, 2});

    const auto single = verify_alias_cancellation(FiniteSet::line(4, {1}), FiniteSet::line(4, {3}), -4, 4);
    CHECK(single.passed());
  }

  TEST_CASE("alias cancellation holds for every orthogonal pair with N <= 8") {
    for (std::int64_t n = 2; n <= 8; ++n) {
      for (std::int64_t a2 = 1; a2 < n; ++a2) {
        for (std::int64_t j2 = 1; j2 < n; ++j2) {
          const auto a = FiniteSet::line(n, {0, a2});
          const auto j = FiniteSet::line(n, {0, j2});
          if (classify_finite_pair(a, j).kind != PairKind::orthogonal_basis) continue;
          const auto r = verify_alias_cancellation(a, j, -n, n);
          CHECK(r.passed());
        }
      }
    }
  }

  TEST_CASE("aliased spectrum equals #J times the spectrum for orthogonal pairs") {
    const auto f = BandlimitedSignal(sampling_domain(A4), {SpectralPiece{0, {SpectralTerm{{1, 0}, 1, Rational(0)}}},
                                                           SpectralPiece{1, {SpectralTerm{{0, 1}, 0, Rational(1, 2)}}}});
    for (double xi : {0.1, 0.5, 0.99, 2.2, 2.75}) {
      CHECK(std::abs(aliased_spectrum(f, J4, xi, -6, 6) - 2.0 * f.spectrum_at(xi)) < 1e-12);
    }
    // a non-orthogonal J aliases
    CHECK(std::abs(aliased_spectrum(f, FiniteSet::line(4, {0, 2}), 0.5, -6, 6) - 2.0 * f.spectrum_at(0.5)) > 0.1);
  }

  TEST_CASE("reconstruction of the indicator is exact") {
    const auto f = BandlimitedSignal::indicator(sampling_domain(A4));
    for (std::int64_t m : {8, 16, 32, 64}) CHECK(reconstruction_error(f, J4, m, 128) < 1e-14);
  }

  TEST_CASE("reconstruction of a linear spectrum decays") {
    const auto omega = sampling_domain(A4);
    const BandlimitedSignal f(omega, {SpectralPiece{0, {SpectralTerm{{1, 0}, 1, Rational(0)}}},
                                      SpectralPiece{1, {SpectralTerm{{1, 0}, 1, Rational(0)}}}});
    double previous = INFINITY;
    for (std::int64_t m : {8, 16, 32, 64}) {
      const double e = reconstruction_error(f, J4, m, 128);
      CHECK(e < previous);
      previous = e;
    }
    CHECK(previous < 0.02);
  }

  TEST_CASE("single sample at the origin reconstructs a constant") {
    const auto j = FiniteSet::line(1, {0});
    const SamplePattern p({Rational(0)}, 0);
    const std::vector<Sample> samples{{Rational(0), {1.0, 0.0}}};
    const std::vector<double> xi{0.1, 0.5, 0.9};
    for (auto v : reconstruct_spectrum(samples, p, j, xi)) CHECK(v == std::complex<double>(1, 0));
    CHECK_THROWS_AS(reconstruct_spectrum(std::vector<Sample>{}, p, j, xi), Error);
  }

  TEST_CASE("dimension restriction") {
    CHECK_THROWS_AS(sampling_domain(FiniteSet(4, 2, {{0, 0}})), Error);
  }
}
