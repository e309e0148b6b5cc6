#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "specpair/domains.hpp"
#include "specpair/finite_pairs.hpp"

namespace specpair {

/// amplitude · ξ^power · e^{2πi·frequency·ξ}
struct SpectralTerm {
  std::complex<double> amplitude{1.0, 0.0};
  int power = 0;
  Rational frequency = 0;
};

/// Terms of \hat f on one box of the support.
struct SpectralPiece {
  std::size_t box = 0;
  std::vector<SpectralTerm> terms;
};

/// A Paley-Wiener signal on the line described by its Fourier transform:
/// \hat f is a finite sum of SpectralTerms on each box of the support and
/// vanishes elsewhere. Time samples have closed forms.
class BandlimitedSignal {
 public:
  BandlimitedSignal(BoxDomain support, std::vector<SpectralPiece> pieces);

  /// \hat f = χ_Ω.
  static BandlimitedSignal indicator(const BoxDomain& support);
  static BandlimitedSignal zero(const BoxDomain& support);

  const BoxDomain& support() const noexcept { return support_; }
  const std::vector<SpectralPiece>& pieces() const noexcept { return pieces_; }

  /// \hat f(ξ).
  std::complex<double> spectrum_at(double xi) const;

  /// f(t) = ∫ \hat f(ξ) e^{2πiξt} dξ.
  std::complex<double> value_at(const Rational& t) const;

 private:
  BoxDomain support_;
  std::vector<SpectralPiece> pieces_;
};

/// ∫_lower^upper ξ^power e^{2πi·frequency·ξ} dξ.
std::complex<double> moment_integral(double lower, double upper, int power, double frequency);

/// Λ = {n + s : |n| ≤ M, s ∈ shifts}, shifts distinct in [0, 1).
class SamplePattern {
 public:
  SamplePattern(std::vector<Rational> shifts, std::int64_t truncation);

  /// shifts j/N for j ∈ J (d = 1).
  static SamplePattern from_finite_set(const FiniteSet& j, std::int64_t truncation);

  const std::vector<Rational>& shifts() const noexcept { return shifts_; }
  std::int64_t truncation() const noexcept { return truncation_; }

  /// Ascending.
  std::vector<Rational> points() const;

 private:
  std::vector<Rational> shifts_;
  std::int64_t truncation_;
};

struct Sample {
  Rational time;
  std::complex<double> value;
};

std::vector<Sample> sample_signal(const BandlimitedSignal& signal, const SamplePattern& pattern);

/// [0, 1) + A for A ⊂ Z_N.
BoxDomain sampling_domain(const FiniteSet& a);

struct AliasTerm {
  std::int64_t k = 0;
  std::complex<double> symbol;
  bool in_difference_set = false;  // k ∈ A - A
};

/// The symbol \hat χ_J(k) for k_min ≤ k ≤ k_max.
std::vector<AliasTerm> alias_coefficients(const FiniteSet& a, const FiniteSet& j,
                                          std::int64_t k_min, std::int64_t k_max);

struct AliasCancellationReport {
  PairKind finite_kind = PairKind::none;
  std::vector<AliasTerm> terms;

  // k = 0: coefficient equals #J.
  std::complex<double> zero_coefficient;
  bool zero_term_ok = false;

  // k ∈ (A-A)\{0}: the symbol vanishes.
  double max_difference_symbol = 0.0;
  std::vector<std::int64_t> difference_violations;
  bool difference_terms_ok = false;

  // k ∉ A-A: |Ω ∩ (Ω+k)| = 0, decided exactly.
  std::vector<std::int64_t> overlap_violations;
  bool disjoint_terms_ok = false;

  bool passed() const { return zero_term_ok && difference_terms_ok && disjoint_terms_ok; }
};

AliasCancellationReport verify_alias_cancellation(const FiniteSet& a, const FiniteSet& j,
                                                  std::int64_t k_min, std::int64_t k_max,
                                                  double tolerance = 1e-10);

/// Σ_k \hat χ_J(k) \hat f(ξ - k) over k_min ≤ k ≤ k_max: the Fourier
/// transform of the sampled distribution.
std::complex<double> aliased_spectrum(const BandlimitedSignal& signal, const FiniteSet& j, double xi,
                                      std::int64_t k_min, std::int64_t k_max);

/// \hat f_M(ξ) = (#J)^{-1} Σ_λ f(λ) e^{-2πiλξ}. Throws shape_mismatch when
/// the samples do not match the pattern.
std::vector<std::complex<double>> reconstruct_spectrum(std::span<const Sample> samples,
                                                       const SamplePattern& pattern,
                                                       const FiniteSet& j,
                                                       std::span<const double> xi);

/// per_box cell midpoints on every box of a 1-d domain.
std::vector<double> midpoint_grid(const BoxDomain& domain, std::size_t per_box);

/// ||estimate - reference|| / ||reference|| (plain ℓ² over the grid).
double relative_l2_error(std::span<const std::complex<double>> estimate,
                         std::span<const std::complex<double>> reference);

}  // namespace specpair
