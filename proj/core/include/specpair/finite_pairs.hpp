#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "specpair/rational.hpp"

namespace specpair {

using ComplexMatrix = Eigen::MatrixXcd;

/// Strength of an exponential system, ordered so that `kind >= PairKind::frame`
/// reads as "at least a frame".
enum class PairKind { none, bessel, frame, riesz_basis, orthogonal_basis };

std::string_view to_string(PairKind kind);
PairKind parse_pair_kind(std::string_view text);

struct Tolerances {
  double unitarity = 1e-10;       // max-entry deviation of F^H F from k I
  double condition_cap = 1e12;    // invertibility threshold on cond(F)
  double frame_floor = 1e-10;     // smallest admissible lower frame constant
  double orthogonality = 1e-10;   // modulus of a vanishing character sum
};

/// A set of distinct points in Z_N^d. Coordinates are reduced into [0, N)
/// on construction; points that coincide after reduction are rejected.
class FiniteSet {
 public:
  FiniteSet(std::int64_t modulus, std::size_t dimension, std::vector<IntVector> points);

  /// Convenience for d = 1.
  static FiniteSet line(std::int64_t modulus, std::initializer_list<std::int64_t> values);
  static FiniteSet line(std::int64_t modulus, const std::vector<std::int64_t>& values);

  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<IntVector>& points() const noexcept { return points_; }
  const IntVector& operator[](std::size_t i) const { return points_[i]; }

  /// Same set translated by t (mod N).
  FiniteSet translated(const IntVector& t) const;

  bool operator==(const FiniteSet&) const = default;

 private:
  std::int64_t modulus_;
  std::size_t dimension_;
  std::vector<IntVector> points_;
};

/// Rows are indexed by J, columns by A: entries(s, r) = ω^{j_s·a_r} with
/// ω = e^{-2πi/N}.
struct EvaluationMatrix {
  ComplexMatrix entries;
  std::complex<double> omega;
  FiniteSet row_index;  // J
  FiniteSet col_index;  // A
};

struct FiniteClassification {
  PairKind kind = PairKind::none;
  double lower_constant = 0.0;  // σ_min²
  double upper_constant = 0.0;  // σ_max²
  double condition_number = std::numeric_limits<double>::infinity();
  std::vector<double> singular_values;  // descending

  bool operator==(const FiniteClassification&) const = default;
};

/// e^{-2πi·exponent/N}, with the exponent reduced mod N first. Quarter turns
/// are returned exactly.
std::complex<double> root_of_unity(std::int64_t exponent, std::int64_t modulus);

/// (u·v) mod N in [0, N).
std::int64_t dot_mod(const IntVector& u, const IntVector& v, std::int64_t modulus);

EvaluationMatrix build_evaluation_matrix(const FiniteSet& a, const FiniteSet& j);

/// Throws insufficient_spectrum when #J < #A.
FiniteClassification classify_finite_pair(const FiniteSet& a, const FiniteSet& j,
                                          const Tolerances& tolerances = {});

/// Σ_{a∈A} e^{2πi(j-j')·a/N} vanishes for every pair of distinct j, j'.
bool check_mutual_orthogonality(const FiniteSet& a, const FiniteSet& j,
                                double tolerance = 1e-10);

/// Returns (J, A). Only basis kinds are symmetric; anything else throws
/// symmetry_undefined.
std::pair<FiniteSet, FiniteSet> transpose_pair(const FiniteSet& a, const FiniteSet& j,
                                               const Tolerances& tolerances = {});

/// The symbol Σ_{j∈J} e^{-2πi j·k/N}.
std::complex<double> symbol_of_set(const FiniteSet& j, const IntVector& k);

/// Rational shifts B with N·B ⊂ Z^d become J = N·B mod N, so a pair (A, B)
/// can be fed to the Z_N^d machinery.
FiniteSet scale_rational_shifts(const std::vector<RationalVector>& shifts, std::int64_t modulus);

}  // namespace specpair
