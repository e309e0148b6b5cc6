#include "specpair/finite_pairs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include <Eigen/SVD>

#include "specpair/error.hpp"

namespace specpair {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::string format_point(const IntVector& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

void require_compatible(const FiniteSet& a, const FiniteSet& j) {
  if (a.modulus() != j.modulus() || a.dimension() != j.dimension()) {
    throw Error(ErrorCode::dimension_mismatch,
                "finite sets live in different groups: Z_" + std::to_string(a.modulus()) + "^" +
                    std::to_string(a.dimension()) + " vs Z_" + std::to_string(j.modulus()) + "^" +
                    std::to_string(j.dimension()));
  }
}

}  // namespace

std::string_view to_string(PairKind kind) {
  switch (kind) {
    case PairKind::none: return "none";
    case PairKind::bessel: return "bessel";
    case PairKind::frame: return "frame";
    case PairKind::riesz_basis: return "riesz-basis";
    case PairKind::orthogonal_basis: return "orthogonal-basis";
  }
  return "none";
}

PairKind parse_pair_kind(std::string_view text) {
  if (text == "none") return PairKind::none;
  if (text == "bessel") return PairKind::bessel;
  if (text == "frame") return PairKind::frame;
  if (text == "riesz-basis" || text == "riesz") return PairKind::riesz_basis;
  if (text == "orthogonal-basis" || text == "orthogonal") return PairKind::orthogonal_basis;
  throw Error(ErrorCode::parse_error, "unknown pair kind '" + std::string(text) + "'");
}

FiniteSet::FiniteSet(std::int64_t modulus, std::size_t dimension, std::vector<IntVector> points)
    : modulus_(modulus), dimension_(dimension), points_(std::move(points)) {
  if (modulus_ < 1) {
    throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  }
  if (dimension_ < 1) {
    throw Error(ErrorCode::invalid_argument, "dimension must be positive");
  }
  std::set<IntVector> seen;
  for (auto& p : points_) {
    if (p.size() != dimension_) {
      throw Error(ErrorCode::dimension_mismatch,
                  "point " + format_point(p) + " does not have dimension " +
                      std::to_string(dimension_));
    }
    for (auto& x : p) x = reduce(x, modulus_);
    if (!seen.insert(p).second) {
      throw Error(ErrorCode::duplicate_point,
                  "duplicate point " + format_point(p) + " in Z_" + std::to_string(modulus_));
    }
  }
}

FiniteSet FiniteSet::line(std::int64_t modulus, std::initializer_list<std::int64_t> values) {
  return line(modulus, std::vector<std::int64_t>(values));
}

FiniteSet FiniteSet::line(std::int64_t modulus, const std::vector<std::int64_t>& values) {
  std::vector<IntVector> pts;
  pts.reserve(values.size());
  for (auto v : values) pts.push_back({v});
  return FiniteSet(modulus, 1, std::move(pts));
}

FiniteSet FiniteSet::translated(const IntVector& t) const {
  if (t.size() != dimension_) {
    throw Error(ErrorCode::dimension_mismatch, "translation has wrong dimension");
  }
  std::vector<IntVector> pts = points_;
  for (auto& p : pts) {
    for (std::size_t i = 0; i < dimension_; ++i) p[i] += t[i];
  }
  return FiniteSet(modulus_, dimension_, std::move(pts));
}

std::complex<double> root_of_unity(std::int64_t exponent, std::int64_t modulus) {
  const std::int64_t e = reduce(exponent, modulus);
  if ((4 * e) % modulus == 0) {
    switch ((4 * e) / modulus) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, 1.0};
      default: break;
    }
  }
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(modulus);
  return {std::cos(angle), std::sin(angle)};
}

std::int64_t dot_mod(const IntVector& u, const IntVector& v, std::int64_t modulus) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc = reduce(acc + reduce(u[i], modulus) * reduce(v[i], modulus) % modulus, modulus);
  }
  return acc;
}

EvaluationMatrix build_evaluation_matrix(const FiniteSet& a, const FiniteSet& j) {
  require_compatible(a, j);
  const auto n = a.modulus();
  ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(a.size()));
  for (std::size_t s = 0; s < j.size(); ++s) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(r)) =
          root_of_unity(dot_mod(j[s], a[r], n), n);
    }
  }
  return EvaluationMatrix{std::move(m), root_of_unity(1, n), j, a};
}

FiniteClassification classify_finite_pair(const FiniteSet& a, const FiniteSet& j,
                                          const Tolerances& tolerances) {
  require_compatible(a, j);
  if (j.size() < a.size()) {
    throw Error(ErrorCode::insufficient_spectrum,
                "#J = " + std::to_string(j.size()) + " < #A = " + std::to_string(a.size()));
  }
  const auto f = build_evaluation_matrix(a, j).entries;
  Eigen::BDCSVD<ComplexMatrix> svd(f);
  const auto& sv = svd.singularValues();

  FiniteClassification out;
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double smax = sv.size() ? sv(0) : 0.0;
  const double smin = sv.size() ? sv(sv.size() - 1) : 0.0;
  out.upper_constant = smax * smax;
  out.lower_constant = smin * smin;
  out.condition_number =
      smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();

  const bool square = a.size() == j.size();
  const auto k = static_cast<double>(a.size());
  const ComplexMatrix gram = f.adjoint() * f;
  const double unitary_defect =
      (gram - k * ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();

  if (square && unitary_defect < tolerances.unitarity) {
    out.kind = PairKind::orthogonal_basis;
  } else if (square && out.condition_number < tolerances.condition_cap) {
    out.kind = PairKind::riesz_basis;
  } else if (out.lower_constant > tolerances.frame_floor) {
    out.kind = PairKind::frame;
  } else {
    out.kind = PairKind::none;
  }
  return out;
}

bool check_mutual_orthogonality(const FiniteSet& a, const FiniteSet& j, double tolerance) {
  require_compatible(a, j);
  const auto n = a.modulus();
  for (std::size_t s = 0; s < j.size(); ++s) {
    for (std::size_t t = s + 1; t < j.size(); ++t) {
      IntVector diff(j.dimension());
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = j[s][i] - j[t][i];
      std::complex<double> sum{0.0, 0.0};
      // e^{+2πi x/N} = root_of_unity(-x)
      for (const auto& p : a.points()) sum += root_of_unity(-dot_mod(diff, p, n), n);
      if (std::abs(sum) >= tolerance) return false;
    }
  }
  return true;
}

std::pair<FiniteSet, FiniteSet> transpose_pair(const FiniteSet& a, const FiniteSet& j,
                                               const Tolerances& tolerances) {
  const auto cls = classify_finite_pair(a, j, tolerances);
  if (cls.kind < PairKind::riesz_basis) {
    throw Error(ErrorCode::symmetry_undefined,
                "transpose is only defined for basis pairs; this pair is " +
                    std::string(to_string(cls.kind)));
  }
  return {j, a};
}

std::complex<double> symbol_of_set(const FiniteSet& j, const IntVector& k) {
  if (k.size() != j.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "symbol argument has wrong dimension");
  }
  std::complex<double> sum{0.0, 0.0};
  for (const auto& p : j.points()) sum += root_of_unity(dot_mod(p, k, j.modulus()), j.modulus());
  return sum;
}

FiniteSet scale_rational_shifts(const std::vector<RationalVector>& shifts, std::int64_t modulus) {
  if (shifts.empty()) {
    throw Error(ErrorCode::invalid_argument, "no shifts given");
  }
  const std::size_t d = shifts.front().size();
  std::vector<IntVector> pts;
  for (const auto& b : shifts) {
    if (b.size() != d) throw Error(ErrorCode::dimension_mismatch, "shift vectors differ in dimension");
    IntVector p(d);
    for (std::size_t i = 0; i < d; ++i) {
      const Rational scaled = b[i] * modulus;
      if (!is_integer(scaled)) {
        throw Error(ErrorCode::invalid_argument,
                    "shift " + format_vector(b) + " times " + std::to_string(modulus) +
                        " is not an integer vector");
      }
      p[i] = scaled.convert_to<std::int64_t>();
    }
    pts.push_back(std::move(p));
  }
  return FiniteSet(modulus, d, std::move(pts));
}

}  // namespace specpair
