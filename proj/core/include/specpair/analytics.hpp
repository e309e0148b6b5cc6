#pragma once

#include <complex>
#include <span>
#include <vector>

#include "specpair/domains.hpp"
#include "specpair/finite_pairs.hpp"

namespace specpair {

/// ∫_box e^{2πi t·x} dx in closed form. Phases are reduced exactly in
/// rational arithmetic, so integer multiples of a period give exact zeros.
std::complex<double> box_exponential_integral(const Box& box, const RationalVector& frequency);

/// ⟨e_λ, e_μ⟩_{L²(Ω)} = Σ_boxes Π_k ∫ e^{2πi(λ_k-μ_k)x} dx.
std::complex<double> exp_inner_product(const BoxDomain& domain, const RationalVector& lambda,
                                       const RationalVector& mu);

/// Gram matrix of the exponentials indexed by `indices`. The upper triangle
/// is evaluated and the lower triangle mirrored, so entries are Hermitian
/// bit-for-bit and the diagonal equals |Ω|.
struct GramMatrix {
  std::vector<SpectrumPoint> indices;
  ComplexMatrix entries;
};

GramMatrix build_gram(const BoxDomain& domain, std::vector<SpectrumPoint> indices);

/// Gram of every spectrum point with ||λ||∞ ≤ radius. Throws empty_spectrum
/// if the truncation is empty.
GramMatrix build_gram(const BoxDomain& domain, const Spectrum& spectrum, double radius);

/// Ascending eigenvalues; values below 1e-12 in modulus are reported as 0.
std::vector<double> gram_eigenvalues(const GramMatrix& gram);

/// Extreme Gram eigenvalues at one truncation radius. These are estimates of
/// the Riesz constants, not certificates.
struct FrameBoundEstimate {
  double radius = 0.0;
  std::size_t count = 0;
  double lower = 0.0;
  double upper = 0.0;
};

std::vector<FrameBoundEstimate> estimate_frame_bounds(const BoxDomain& domain,
                                                      const Spectrum& spectrum,
                                                      std::span<const double> radii);

struct DualBasis {
  ComplexMatrix finite_dual;         // G[r][s] = G_{j_s}(a_r) = k (F^{-1})_{r,s}
  ComplexMatrix piece_coefficients;  // c[r][s] multiplies e_{λ+j_s/N} on Ω₁ + a_r
};

/// k·F^{-1}. Throws non_invertible for non-square or ill-conditioned F.
ComplexMatrix finite_dual(const FiniteSet& a, const FiniteSet& j, const Tolerances& tolerances = {});

/// c[r][s] = k (F^{-1})_{r,s} ω^{a_r·j_s}.
ComplexMatrix dual_piece_coefficients(const FiniteSet& a, const FiniteSet& j,
                                      const Tolerances& tolerances = {});

/// Every piece coefficient equals 1, i.e. g_λ = e_λ.
bool is_self_dual(const ComplexMatrix& piece_coefficients, double tolerance = 1e-10);

/// The combined system (Ω₁ + A, Λ₁ + J/N) with its piecewise dual
/// g_{λ+j_s/N} = c[r][s] e_{λ+j_s/N} on Ω₁ + a_r.
class DualSystem {
 public:
  DualSystem(BoxDomain base_domain, Spectrum base_spectrum, FiniteSet a, FiniteSet j,
             const Tolerances& tolerances = {});

  const BoxDomain& domain() const noexcept { return domain_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const FiniteSet& a() const noexcept { return a_; }
  const FiniteSet& j() const noexcept { return j_; }
  const DualBasis& dual() const noexcept { return dual_; }
  double measure() const noexcept { return measure_; }

  std::vector<SpectrumPoint> truncate(double radius) const;

  /// s such that the point lies in Λ₁ + j_s/N.
  std::size_t shift_class(const SpectrumPoint& point) const;

  /// ⟨g_μ, e_ν⟩_{L²(Ω)}, evaluated analytically.
  std::complex<double> dual_inner_product(const SpectrumPoint& mu, const RationalVector& nu) const;

  /// g_μ(x); zero off Ω.
  std::complex<double> evaluate_dual(const SpectrumPoint& mu, std::span<const double> x) const;

 private:
  BoxDomain base_domain_;
  Spectrum base_spectrum_;
  FiniteSet a_;
  FiniteSet j_;
  BoxDomain domain_;
  Spectrum spectrum_;
  DualBasis dual_;
  std::vector<BoxDomain> pieces_;
  double measure_;
};

/// max |⟨g_μ, e_ν⟩ - |Ω| δ_{μν}| over all μ, ν with ||·||∞ ≤ radius.
double verify_biorthogonality(const BoxDomain& base_domain, const Spectrum& base_spectrum,
                              const FiniteSet& a, const FiniteSet& j, double radius);
double verify_biorthogonality(const DualSystem& system, double radius);

enum class ExpansionKind {
  analysis,  // coefficients ⟨u, e_μ⟩, synthesized with g_μ
  dual,      // coefficients ⟨u, g_μ⟩, synthesized with e_μ
};

/// Evaluates |Ω|^{-1} Σ_μ coefficient_μ φ_μ(x) at each grid point, with φ
/// chosen by `kind`. Throws shape_mismatch when the coefficient count or a
/// grid point's dimension is wrong.
std::vector<std::complex<double>> reconstruct_function(
    const DualSystem& system, std::span<const SpectrumPoint> points,
    std::span<const std::complex<double>> coefficients,
    std::span<const std::vector<double>> grid, ExpansionKind kind = ExpansionKind::analysis);

}  // namespace specpair
