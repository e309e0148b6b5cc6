#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specpair/domains.hpp"
#include "specpair/finite_pairs.hpp"

namespace specpair {

/// A continuous pair (Ω₁, Λ₁) with its claimed kind and frame constants.
/// Exponentials are unnormalized, so an orthogonal pair has α = β = |Ω₁|.
struct ContinuousPair {
  BoxDomain domain;
  Spectrum spectrum;
  PairKind kind = PairKind::none;
  double lower = 0.0;
  double upper = 0.0;

  /// Validates α ≤ β and α > 0 for kinds at least frame.
  static ContinuousPair make(BoxDomain domain, Spectrum spectrum, PairKind kind, double lower,
                             double upper);

  /// Orthogonal pair with the default constants α = β = |Ω₁|.
  static ContinuousPair orthogonal(BoxDomain domain, Spectrum spectrum);

  bool operator==(const ContinuousPair&) const = default;
};

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;

  bool operator==(const HypothesisCheck&) const = default;
};

/// Outcome of combining (Ω₁, Λ₁) with a finite pair (A, J). The combined
/// pair (Ω₁ + A, Λ₁ + J/N) is present whenever it can be formed at all
/// (translates disjoint, shifts distinct), even if other hypotheses fail.
struct CombinedPairResult {
  std::optional<ContinuousPair> pair;
  PairKind target = PairKind::none;
  PairKind kind = PairKind::none;
  double predicted_lower = 0.0;  // α·c
  double predicted_upper = 0.0;  // β·C
  std::optional<FiniteClassification> finite;
  std::vector<HypothesisCheck> hypotheses;

  bool succeeded() const { return kind == target && kind != PairKind::none; }
  const HypothesisCheck* first_failure() const;
};

CombinedPairResult combine_frame(const ContinuousPair& base, const FiniteSet& a, const FiniteSet& j,
                                 const Tolerances& tolerances = {});
CombinedPairResult combine_riesz(const ContinuousPair& base, const FiniteSet& a, const FiniteSet& j,
                                 const Tolerances& tolerances = {});
CombinedPairResult combine_orthogonal(const ContinuousPair& base, const FiniteSet& a,
                                      const FiniteSet& j, const Tolerances& tolerances = {});

/// Dispatches on target (frame, riesz_basis or orthogonal_basis).
CombinedPairResult combine(const ContinuousPair& base, const FiniteSet& a, const FiniteSet& j,
                           PairKind target, const Tolerances& tolerances = {});

/// Product of two orthogonal pairs. Throws unsupported for other kinds.
ContinuousPair cartesian_product(const ContinuousPair& first, const ContinuousPair& second);

struct CompletenessReport {
  bool applies = false;
  std::vector<HypothesisCheck> checks;
};

/// Hypotheses under which completeness of E(Λ₁) in L²(Ω₁) transfers to
/// E(Λ₁ + J/N) in L²(Ω₁ + A): disjoint translates, the root-of-unity
/// condition, a complete base and a complete finite system.
CompletenessReport check_completeness_hypotheses(const ContinuousPair& base, const FiniteSet& a,
                                                 const FiniteSet& j);

struct BesselBound {
  double refined = 0.0;  // C·#J
  double coarse = 0.0;   // #A·#J·C, i.e. #A·#J·|Ω₁| when C = |Ω₁|
  bool tight_frame = false;  // #A = 1
};

/// Synthesis-side Bessel constants for E(Λ₁ + J/N) on Ω₁ + A, where C is the
/// base upper constant.
BesselBound bessel_constant(const ContinuousPair& base, const FiniteSet& a, const FiniteSet& j);

}  // namespace specpair
