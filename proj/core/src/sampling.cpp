#include "specpair/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "parallel.hpp"
#include "specpair/analytics.hpp"
#include "specpair/error.hpp"

namespace specpair {

namespace {

void require_line(std::size_t d, const char* what) {
  if (d != 1) {
    throw Error(ErrorCode::unsupported, std::string(what) + " is only defined in dimension 1");
  }
}

std::complex<double> cis_turns(double turns) {
  const double t = turns - std::floor(turns);
  const double angle = 2.0 * std::numbers::pi * t;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

BandlimitedSignal::BandlimitedSignal(BoxDomain support, std::vector<SpectralPiece> pieces)
    : support_(std::move(support)), pieces_(std::move(pieces)) {
  require_line(support_.dimension(), "a band-limited signal");
  for (const auto& p : pieces_) {
    if (p.box >= support_.boxes().size()) {
      throw Error(ErrorCode::invalid_argument, "spectral piece refers to box " + std::to_string(p.box) +
                                                   " of a " + std::to_string(support_.boxes().size()) +
                                                   "-box support");
    }
    for (const auto& t : p.terms) {
      if (t.power < 0) throw Error(ErrorCode::invalid_argument, "negative power in spectral term");
    }
  }
}

BandlimitedSignal BandlimitedSignal::indicator(const BoxDomain& support) {
  std::vector<SpectralPiece> pieces;
  for (std::size_t b = 0; b < support.boxes().size(); ++b) {
    pieces.push_back(SpectralPiece{b, {SpectralTerm{}}});
  }
  return BandlimitedSignal(support, std::move(pieces));
}

BandlimitedSignal BandlimitedSignal::zero(const BoxDomain& support) {
  return BandlimitedSignal(support, {});
}

std::complex<double> BandlimitedSignal::spectrum_at(double xi) const {
  const double x[1] = {xi};
  const auto box = support_.locate(x);
  if (!box) return {0.0, 0.0};
  std::complex<double> sum{0.0, 0.0};
  for (const auto& p : pieces_) {
    if (p.box != *box) continue;
    for (const auto& t : p.terms) {
      sum += t.amplitude * std::pow(xi, t.power) * cis_turns(to_double(t.frequency) * xi);
    }
  }
  return sum;
}

std::complex<double> BandlimitedSignal::value_at(const Rational& t) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& p : pieces_) {
    const Box& box = support_.boxes()[p.box];
    for (const auto& term : p.terms) {
      const Rational w = term.frequency + t;
      if (term.power == 0) {
        sum += term.amplitude * box_exponential_integral(box, {w});
      } else {
        sum += term.amplitude * moment_integral(to_double(box.lower[0]), to_double(box.upper[0]),
                                                term.power, to_double(w));
      }
    }
  }
  return sum;
}

std::complex<double> moment_integral(double lower, double upper, int power, double frequency) {
  const double theta = 2.0 * std::numbers::pi * frequency;
  const double scale = std::max(std::abs(lower), std::abs(upper));
  const std::complex<double> i{0.0, 1.0};
  if (std::abs(theta) * scale <= 1.0) {
    // Σ_n (iθ)^n/n! (hi^{p+n+1} - lo^{p+n+1})/(p+n+1)
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> factor{1.0, 0.0};
    for (int n = 0; n < 60; ++n) {
      const int e = power + n + 1;
      const std::complex<double> term =
          factor * (std::pow(upper, e) - std::pow(lower, e)) / static_cast<double>(e);
      sum += term;
      if (n > 4 && std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
      factor *= i * theta / static_cast<double>(n + 1);
    }
    return sum;
  }
  const std::complex<double> eh = std::exp(i * theta * upper);
  const std::complex<double> el = std::exp(i * theta * lower);
  std::complex<double> m = (eh - el) / (i * theta);
  for (int p = 1; p <= power; ++p) {
    m = (std::pow(upper, p) * eh - std::pow(lower, p) * el) / (i * theta) -
        static_cast<double>(p) / (i * theta) * m;
  }
  return m;
}

SamplePattern::SamplePattern(std::vector<Rational> shifts, std::int64_t truncation)
    : shifts_(std::move(shifts)), truncation_(truncation) {
  if (truncation_ < 0) throw Error(ErrorCode::invalid_argument, "truncation must be nonnegative");
  if (shifts_.empty()) throw Error(ErrorCode::invalid_argument, "sampling pattern needs a shift");
  std::set<Rational> seen;
  for (const auto& s : shifts_) {
    if (s < 0 || s >= 1) {
      throw Error(ErrorCode::invalid_argument, "shift " + format_rational(s) + " outside [0, 1)");
    }
    if (!seen.insert(s).second) {
      throw Error(ErrorCode::duplicate_spectrum, "repeated shift " + format_rational(s));
    }
  }
}

SamplePattern SamplePattern::from_finite_set(const FiniteSet& j, std::int64_t truncation) {
  require_line(j.dimension(), "a sampling pattern");
  std::vector<Rational> shifts;
  for (const auto& p : j.points()) shifts.emplace_back(p[0], j.modulus());
  return SamplePattern(std::move(shifts), truncation);
}

std::vector<Rational> SamplePattern::points() const {
  std::vector<Rational> out;
  out.reserve(shifts_.size() * static_cast<std::size_t>(2 * truncation_ + 1));
  for (std::int64_t n = -truncation_; n <= truncation_; ++n) {
    for (const auto& s : shifts_) out.push_back(Rational(n) + s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Sample> sample_signal(const BandlimitedSignal& signal, const SamplePattern& pattern) {
  const auto times = pattern.points();
  std::vector<Sample> out(times.size());
  detail::parallel_for(times.size(), [&](std::size_t i) {
    out[i] = Sample{times[i], signal.value_at(times[i])};
  });
  return out;
}

BoxDomain sampling_domain(const FiniteSet& a) {
  require_line(a.dimension(), "the sampling domain");
  return minkowski_translate(BoxDomain::interval(0, 1), a);
}

std::vector<AliasTerm> alias_coefficients(const FiniteSet& a, const FiniteSet& j,
                                          std::int64_t k_min, std::int64_t k_max) {
  require_line(a.dimension(), "alias analysis");
  require_line(j.dimension(), "alias analysis");
  std::set<std::int64_t> differences;
  for (const auto& x : a.points()) {
    for (const auto& y : a.points()) differences.insert(x[0] - y[0]);
  }
  std::vector<AliasTerm> out;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    out.push_back(AliasTerm{k, symbol_of_set(j, {k}), differences.count(k) > 0});
  }
  return out;
}

AliasCancellationReport verify_alias_cancellation(const FiniteSet& a, const FiniteSet& j,
                                                  std::int64_t k_min, std::int64_t k_max,
                                                  double tolerance) {
  AliasCancellationReport report;
  if (j.size() >= a.size() && a.modulus() == j.modulus()) {
    report.finite_kind = classify_finite_pair(a, j).kind;
  }
  report.terms = alias_coefficients(a, j, k_min, k_max);

  report.zero_coefficient = symbol_of_set(j, {0});
  report.zero_term_ok = report.zero_coefficient == std::complex<double>(static_cast<double>(j.size()), 0.0);

  const BoxDomain omega = sampling_domain(a);
  for (const auto& term : report.terms) {
    if (term.k == 0) continue;
    if (term.in_difference_set) {
      const double m = std::abs(term.symbol);
      report.max_difference_symbol = std::max(report.max_difference_symbol, m);
      if (!(m < tolerance)) report.difference_violations.push_back(term.k);
    } else {
      if (overlap_measure(omega, omega.translated({Rational(term.k)})) != 0) {
        report.overlap_violations.push_back(term.k);
      }
    }
  }
  report.difference_terms_ok = report.difference_violations.empty();
  report.disjoint_terms_ok = report.overlap_violations.empty();
  return report;
}

std::complex<double> aliased_spectrum(const BandlimitedSignal& signal, const FiniteSet& j, double xi,
                                      std::int64_t k_min, std::int64_t k_max) {
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    const auto shifted = signal.spectrum_at(xi - static_cast<double>(k));
    if (shifted == std::complex<double>(0.0, 0.0)) continue;
    sum += symbol_of_set(j, {k}) * shifted;
  }
  return sum;
}

std::vector<std::complex<double>> reconstruct_spectrum(std::span<const Sample> samples,
                                                       const SamplePattern& pattern,
                                                       const FiniteSet& j,
                                                       std::span<const double> xi) {
  const auto expected = pattern.points();
  if (samples.size() != expected.size()) {
    throw Error(ErrorCode::shape_mismatch, std::to_string(samples.size()) + " samples for a pattern of " +
                                               std::to_string(expected.size()) + " points");
  }
  if (pattern.shifts().size() != j.size()) {
    throw Error(ErrorCode::shape_mismatch, "pattern shifts do not match #J");
  }
  std::vector<double> times(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) times[i] = to_double(samples[i].time);
  const double inv = 1.0 / static_cast<double>(j.size());
  std::vector<std::complex<double>> out(xi.size());
  detail::parallel_for(xi.size(), [&](std::size_t g) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (samples[i].value == std::complex<double>(0.0, 0.0)) continue;
      sum += samples[i].value * cis_turns(-times[i] * xi[g]);
    }
    out[g] = sum * inv;
  }, 16);
  return out;
}

std::vector<double> midpoint_grid(const BoxDomain& domain, std::size_t per_box) {
  require_line(domain.dimension(), "a midpoint grid");
  std::vector<double> out;
  out.reserve(per_box * domain.boxes().size());
  for (const auto& b : domain.boxes()) {
    const double lo = to_double(b.lower[0]);
    const double hi = to_double(b.upper[0]);
    const double h = (hi - lo) / static_cast<double>(per_box);
    for (std::size_t i = 0; i < per_box; ++i) out.push_back(lo + (static_cast<double>(i) + 0.5) * h);
  }
  return out;
}

double relative_l2_error(std::span<const std::complex<double>> estimate,
                         std::span<const std::complex<double>> reference) {
  if (estimate.size() != reference.size()) {
    throw Error(ErrorCode::shape_mismatch, "estimate and reference differ in length");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < estimate.size(); ++i) {
    num += std::norm(estimate[i] - reference[i]);
    den += std::norm(reference[i]);
  }
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

}  // namespace specpair
