#include "specpair/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "parallel.hpp"
#include "specpair/error.hpp"

namespace specpair {

namespace {

std::complex<double> cis_turns(double turns) {
  const double t = turns - std::floor(turns);
  const double angle = 2.0 * std::numbers::pi * t;
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> exponential(const RationalVector& frequency, std::span<const double> x) {
  double turns = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) turns += to_double(frequency[i]) * x[i];
  return cis_turns(turns);
}

}  // namespace

std::complex<double> box_exponential_integral(const Box& box, const RationalVector& frequency) {
  if (frequency.size() != box.lower.size()) {
    throw Error(ErrorCode::dimension_mismatch, "frequency and box differ in dimension");
  }
  std::complex<double> value{1.0, 0.0};
  for (std::size_t k = 0; k < frequency.size(); ++k) {
    const Rational& t = frequency[k];
    const Rational width = box.upper[k] - box.lower[k];
    if (t == 0) {
      value *= to_double(width);
      continue;
    }
    // e^{iπt(lo+hi)} · sin(πtw)/(πt)
    const double s = sinpi(t * width);
    if (s == 0.0) return {0.0, 0.0};
    value *= cispi(t * (box.lower[k] + box.upper[k])) * (s / (std::numbers::pi * to_double(t)));
  }
  return value;
}

std::complex<double> exp_inner_product(const BoxDomain& domain, const RationalVector& lambda,
                                       const RationalVector& mu) {
  const auto t = subtract(lambda, mu);
  std::complex<double> sum{0.0, 0.0};
  for (const auto& b : domain.boxes()) sum += box_exponential_integral(b, t);
  return sum;
}

GramMatrix build_gram(const BoxDomain& domain, std::vector<SpectrumPoint> indices) {
  if (indices.empty()) throw Error(ErrorCode::empty_spectrum, "no spectrum points to build a Gram matrix from");
  const auto n = static_cast<Eigen::Index>(indices.size());
  ComplexMatrix g(n, n);
  const double diag = to_double(domain.measure());
  detail::parallel_for(indices.size(), [&](std::size_t i) {
    const auto row = static_cast<Eigen::Index>(i);
    g(row, row) = {diag, 0.0};
    for (Eigen::Index col = row + 1; col < n; ++col) {
      g(row, col) = exp_inner_product(domain, indices[i].value,
                                      indices[static_cast<std::size_t>(col)].value);
    }
  });
  for (Eigen::Index row = 0; row < n; ++row) {
    for (Eigen::Index col = row + 1; col < n; ++col) g(col, row) = std::conj(g(row, col));
  }
  return GramMatrix{std::move(indices), std::move(g)};
}

GramMatrix build_gram(const BoxDomain& domain, const Spectrum& spectrum, double radius) {
  if (domain.dimension() != spectrum.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "domain and spectrum differ in dimension");
  }
  if (!(radius > 0.0)) throw Error(ErrorCode::invalid_argument, "radius must be positive");
  return build_gram(domain, enumerate_spectrum_points(spectrum, radius));
}

std::vector<double> gram_eigenvalues(const GramMatrix& gram) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram.entries, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  for (auto& e : out) {
    if (std::abs(e) < 1e-12) e = 0.0;
  }
  return out;
}

std::vector<FrameBoundEstimate> estimate_frame_bounds(const BoxDomain& domain,
                                                      const Spectrum& spectrum,
                                                      std::span<const double> radii) {
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] > radii[i - 1])) {
      throw Error(ErrorCode::invalid_argument, "radii must be strictly increasing");
    }
  }
  std::vector<FrameBoundEstimate> out;
  out.reserve(radii.size());
  for (const double r : radii) {
    const auto gram = build_gram(domain, spectrum, r);
    const auto eig = gram_eigenvalues(gram);
    out.push_back(FrameBoundEstimate{r, gram.indices.size(), eig.front(), eig.back()});
  }
  return out;
}

ComplexMatrix finite_dual(const FiniteSet& a, const FiniteSet& j, const Tolerances& tolerances) {
  if (a.size() != j.size()) {
    throw Error(ErrorCode::non_invertible, "evaluation matrix is not square");
  }
  const auto cls = classify_finite_pair(a, j, tolerances);
  if (cls.kind < PairKind::riesz_basis) {
    throw Error(ErrorCode::non_invertible,
                "evaluation matrix is singular (condition number " +
                    std::to_string(cls.condition_number) + ")");
  }
  const auto f = build_evaluation_matrix(a, j).entries;
  return static_cast<double>(a.size()) * f.fullPivLu().inverse();
}

ComplexMatrix dual_piece_coefficients(const FiniteSet& a, const FiniteSet& j,
                                      const Tolerances& tolerances) {
  ComplexMatrix c = finite_dual(a, j, tolerances);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t s = 0; s < j.size(); ++s) {
      c(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) *=
          root_of_unity(dot_mod(a[r], j[s], a.modulus()), a.modulus());
    }
  }
  return c;
}

bool is_self_dual(const ComplexMatrix& piece_coefficients, double tolerance) {
  if (piece_coefficients.size() == 0) return false;
  return (piece_coefficients.array() - std::complex<double>(1.0, 0.0)).abs().maxCoeff() < tolerance;
}

DualSystem::DualSystem(BoxDomain base_domain, Spectrum base_spectrum, FiniteSet a, FiniteSet j,
                       const Tolerances& tolerances)
    : base_domain_(std::move(base_domain)),
      base_spectrum_(std::move(base_spectrum)),
      a_(std::move(a)),
      j_(std::move(j)),
      domain_(minkowski_translate(base_domain_, a_)),
      spectrum_(shift_spectrum(base_spectrum_, j_, j_.modulus())),
      dual_{finite_dual(a_, j_, tolerances), dual_piece_coefficients(a_, j_, tolerances)},
      measure_(to_double(domain_.measure())) {
  pieces_.reserve(a_.size());
  for (const auto& p : a_.points()) pieces_.push_back(base_domain_.translated(to_rational(p)));
}

std::vector<SpectrumPoint> DualSystem::truncate(double radius) const {
  return enumerate_spectrum_points(spectrum_, radius);
}

std::size_t DualSystem::shift_class(const SpectrumPoint& point) const {
  return point.shift_index % j_.size();
}

std::complex<double> DualSystem::dual_inner_product(const SpectrumPoint& mu,
                                                    const RationalVector& nu) const {
  const auto s = static_cast<Eigen::Index>(shift_class(mu));
  const auto diff = subtract(mu.value, nu);
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t r = 0; r < pieces_.size(); ++r) {
    std::complex<double> piece{0.0, 0.0};
    for (const auto& b : pieces_[r].boxes()) piece += box_exponential_integral(b, diff);
    sum += dual_.piece_coefficients(static_cast<Eigen::Index>(r), s) * piece;
  }
  return sum;
}

std::complex<double> DualSystem::evaluate_dual(const SpectrumPoint& mu,
                                               std::span<const double> x) const {
  for (std::size_t r = 0; r < pieces_.size(); ++r) {
    if (pieces_[r].locate(x)) {
      return dual_.piece_coefficients(static_cast<Eigen::Index>(r),
                                      static_cast<Eigen::Index>(shift_class(mu))) *
             exponential(mu.value, x);
    }
  }
  return {0.0, 0.0};
}

double verify_biorthogonality(const DualSystem& system, double radius) {
  const auto points = system.truncate(radius);
  std::vector<double> row_max(points.size(), 0.0);
  detail::parallel_for(points.size(), [&](std::size_t i) {
    double worst = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
      std::complex<double> v = system.dual_inner_product(points[i], points[k].value);
      if (i == k) v -= system.measure();
      worst = std::max(worst, std::abs(v));
    }
    row_max[i] = worst;
  });
  return row_max.empty() ? 0.0 : *std::max_element(row_max.begin(), row_max.end());
}

double verify_biorthogonality(const BoxDomain& base_domain, const Spectrum& base_spectrum,
                              const FiniteSet& a, const FiniteSet& j, double radius) {
  return verify_biorthogonality(DualSystem(base_domain, base_spectrum, a, j), radius);
}

std::vector<std::complex<double>> reconstruct_function(
    const DualSystem& system, std::span<const SpectrumPoint> points,
    std::span<const std::complex<double>> coefficients,
    std::span<const std::vector<double>> grid, ExpansionKind kind) {
  if (points.size() != coefficients.size()) {
    throw Error(ErrorCode::shape_mismatch,
                std::to_string(coefficients.size()) + " coefficients for " +
                    std::to_string(points.size()) + " spectrum points");
  }
  const std::size_t d = system.domain().dimension();
  std::vector<std::complex<double>> out(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (grid[g].size() != d) {
      throw Error(ErrorCode::shape_mismatch, "grid point " + std::to_string(g) + " has wrong dimension");
    }
  }
  detail::parallel_for(grid.size(), [&](std::size_t g) {
    const auto& x = grid[g];
    if (!system.domain().locate(x)) return;
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto basis = kind == ExpansionKind::analysis ? system.evaluate_dual(points[i], x)
                                                         : exponential(points[i].value, x);
      sum += coefficients[i] * basis;
    }
    out[g] = sum / system.measure();
  }, 4);
  return out;
}

}  // namespace specpair
