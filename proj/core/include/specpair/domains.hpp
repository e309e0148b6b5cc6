#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "specpair/finite_pairs.hpp"
#include "specpair/rational.hpp"

namespace specpair {

/// Half-open box Π [lower_k, upper_k) with exact rational corners.
struct Box {
  RationalVector lower;
  RationalVector upper;

  Rational volume() const;
  Box translated(const RationalVector& offset) const;
  bool contains(std::span<const double> x) const;

  bool operator==(const Box&) const = default;
};

/// Measure of the intersection of two boxes of equal dimension.
Rational overlap_measure(const Box& a, const Box& b);

/// A finite union of nonempty boxes whose pairwise intersections have
/// measure zero. Both properties are checked on construction.
class BoxDomain {
 public:
  BoxDomain(std::size_t dimension, std::vector<Box> boxes);

  static BoxDomain interval(const Rational& lower, const Rational& upper);
  static BoxDomain unit_cube(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  Rational measure() const;

  BoxDomain translated(const RationalVector& offset) const;

  /// Index of the box containing x, if any.
  std::optional<std::size_t> locate(std::span<const double> x) const;

  bool operator==(const BoxDomain&) const = default;

 private:
  std::size_t dimension_;
  std::vector<Box> boxes_;
};

Rational overlap_measure(const BoxDomain& a, const BoxDomain& b);

/// Product domain in dimension d1 + d2.
BoxDomain product(const BoxDomain& a, const BoxDomain& b);

/// Λ = {G·n + s : n ∈ Z^d, s ∈ shifts}, G the d×d generator matrix given by
/// its columns. Shifts must be pairwise incongruent modulo the lattice.
class Spectrum {
 public:
  Spectrum(std::size_t dimension, std::vector<RationalVector> generators,
           std::vector<RationalVector> shifts, double truncation_radius = 4.0);

  /// h·Z^d with the single shift 0.
  static Spectrum scaled_lattice(std::size_t dimension, const Rational& spacing = 1);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<RationalVector>& generators() const noexcept { return generators_; }
  const std::vector<RationalVector>& shifts() const noexcept { return shifts_; }
  double truncation_radius() const noexcept { return truncation_radius_; }

  /// |det G|, the covolume of the lattice part.
  Rational covolume() const;

  /// G^{-1} v.
  RationalVector lattice_coordinates(const RationalVector& v) const;
  bool in_lattice(const RationalVector& v) const;
  RationalVector lattice_point(const IntVector& n) const;

  bool operator==(const Spectrum& other) const;

 private:
  std::size_t dimension_;
  std::vector<RationalVector> generators_;
  std::vector<RationalVector> shifts_;
  double truncation_radius_;
  std::vector<RationalVector> inverse_;  // rows of G^{-1}
  Rational determinant_;
};

/// An enumerated spectrum element together with the index of the shift it
/// belongs to.
struct SpectrumPoint {
  RationalVector value;
  std::size_t shift_index = 0;

  bool operator==(const SpectrumPoint&) const = default;
};

/// First pair (a, a') of A whose translates of base overlap in positive
/// measure, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_translate_overlap(const BoxDomain& base,
                                                                          const FiniteSet& a);

/// base + A. Throws overlap naming the offending (a, a').
BoxDomain minkowski_translate(const BoxDomain& base, const FiniteSet& a);

/// base + J/N, shifts ordered (base shift, j). Throws duplicate_spectrum when
/// two of the new shifts are congruent modulo the lattice.
Spectrum shift_spectrum(const Spectrum& base, const FiniteSet& j, std::int64_t modulus);

/// All λ with ||λ||∞ ≤ radius, lexicographically sorted.
std::vector<RationalVector> enumerate_spectrum(const Spectrum& spectrum, double radius);
std::vector<SpectrumPoint> enumerate_spectrum_points(const Spectrum& spectrum, double radius);

/// {G·n + s : ||n||∞ ≤ max_index}, lexicographically sorted. This is the
/// index-window truncation (e.g. {n, n + 1/4 : |n| ≤ 5}).
std::vector<SpectrumPoint> enumerate_lattice_window(const Spectrum& spectrum,
                                                    std::int64_t max_index);

/// e^{2πiλ·a} = 1 for every λ in the spectrum and every a ∈ A, decided
/// exactly: g·a and s·a must be integers for each generator g and shift s.
bool root_of_unity_condition(const Spectrum& spectrum, const FiniteSet& a);

/// Product lattice (block-diagonal generators) with all shift pairs.
Spectrum product(const Spectrum& a, const Spectrum& b);

}  // namespace specpair
