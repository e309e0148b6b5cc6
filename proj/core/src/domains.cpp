#include "specpair/domains.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specpair/error.hpp"

namespace specpair {

namespace {

using RationalMatrix = std::vector<RationalVector>;  // row-major

// Gauss-Jordan over Q. Returns the inverse (rows) and the determinant; the
// determinant is zero iff the matrix is singular, in which case the inverse
// is empty.
std::pair<RationalMatrix, Rational> invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return {{}, Rational(0)};
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(inv[pivot], inv[col]);
      det = -det;
    }
    const Rational p = m[col][col];
    det *= p;
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational factor = m[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[row][k] -= factor * m[col][k];
        inv[row][k] -= factor * inv[col][k];
      }
    }
  }
  return {inv, det};
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational inf_norm(const RationalVector& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max(m, abs(x));
  return m;
}

// Calls fn for every integer vector in [-bound, bound]^d.
template <class Fn>
void for_each_in_cube(std::size_t d, const std::vector<std::int64_t>& bound, Fn&& fn) {
  IntVector n(d);
  for (std::size_t i = 0; i < d; ++i) n[i] = -bound[i];
  while (true) {
    fn(n);
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (n[i] < bound[i]) {
        ++n[i];
        break;
      }
      n[i] = -bound[i];
    }
    if (i == d) return;
  }
}

}  // namespace

Rational Box::volume() const {
  Rational v = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i];
  return v;
}

Box Box::translated(const RationalVector& offset) const {
  return Box{add(lower, offset), add(upper, offset)};
}

bool Box::contains(std::span<const double> x) const {
  if (x.size() != lower.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(to_double(lower[i]) <= x[i] && x[i] < to_double(upper[i]))) return false;
  }
  return true;
}

Rational overlap_measure(const Box& a, const Box& b) {
  if (a.lower.size() != b.lower.size()) {
    throw Error(ErrorCode::dimension_mismatch, "boxes of different dimension");
  }
  Rational v = 1;
  for (std::size_t i = 0; i < a.lower.size(); ++i) {
    const Rational lo = std::max(a.lower[i], b.lower[i]);
    const Rational hi = std::min(a.upper[i], b.upper[i]);
    if (hi <= lo) return 0;
    v *= hi - lo;
  }
  return v;
}

BoxDomain::BoxDomain(std::size_t dimension, std::vector<Box> boxes)
    : dimension_(dimension), boxes_(std::move(boxes)) {
  if (dimension_ < 1) throw Error(ErrorCode::invalid_argument, "domain dimension must be positive");
  if (boxes_.empty()) throw Error(ErrorCode::invalid_argument, "domain has no boxes");
  for (const auto& b : boxes_) {
    if (b.lower.size() != dimension_ || b.upper.size() != dimension_) {
      throw Error(ErrorCode::dimension_mismatch,
                  "box corner does not have dimension " + std::to_string(dimension_));
    }
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (!(b.lower[i] < b.upper[i])) {
        throw Error(ErrorCode::invalid_argument,
                    "empty box [" + format_vector(b.lower) + ", " + format_vector(b.upper) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    for (std::size_t k = i + 1; k < boxes_.size(); ++k) {
      if (overlap_measure(boxes_[i], boxes_[k]) > 0) {
        throw Error(ErrorCode::overlap, "boxes " + std::to_string(i) + " and " +
                                            std::to_string(k) + " overlap in positive measure");
      }
    }
  }
}

BoxDomain BoxDomain::interval(const Rational& lower, const Rational& upper) {
  return BoxDomain(1, {Box{{lower}, {upper}}});
}

BoxDomain BoxDomain::unit_cube(std::size_t dimension) {
  return BoxDomain(dimension,
                   {Box{RationalVector(dimension, Rational(0)), RationalVector(dimension, Rational(1))}});
}

Rational BoxDomain::measure() const {
  Rational m = 0;
  for (const auto& b : boxes_) m += b.volume();
  return m;
}

BoxDomain BoxDomain::translated(const RationalVector& offset) const {
  std::vector<Box> out;
  out.reserve(boxes_.size());
  for (const auto& b : boxes_) out.push_back(b.translated(offset));
  return BoxDomain(dimension_, std::move(out));
}

std::optional<std::size_t> BoxDomain::locate(std::span<const double> x) const {
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (boxes_[i].contains(x)) return i;
  }
  return std::nullopt;
}

Rational overlap_measure(const BoxDomain& a, const BoxDomain& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "domains of different dimension");
  }
  Rational m = 0;
  for (const auto& x : a.boxes()) {
    for (const auto& y : b.boxes()) m += overlap_measure(x, y);
  }
  return m;
}

BoxDomain product(const BoxDomain& a, const BoxDomain& b) {
  std::vector<Box> out;
  for (const auto& x : a.boxes()) {
    for (const auto& y : b.boxes()) {
      Box p;
      p.lower = x.lower;
      p.lower.insert(p.lower.end(), y.lower.begin(), y.lower.end());
      p.upper = x.upper;
      p.upper.insert(p.upper.end(), y.upper.begin(), y.upper.end());
      out.push_back(std::move(p));
    }
  }
  return BoxDomain(a.dimension() + b.dimension(), std::move(out));
}

Spectrum::Spectrum(std::size_t dimension, std::vector<RationalVector> generators,
                   std::vector<RationalVector> shifts, double truncation_radius)
    : dimension_(dimension),
      generators_(std::move(generators)),
      shifts_(std::move(shifts)),
      truncation_radius_(truncation_radius) {
  if (dimension_ < 1) throw Error(ErrorCode::invalid_argument, "spectrum dimension must be positive");
  if (generators_.size() != dimension_) {
    throw Error(ErrorCode::dimension_mismatch,
                "lattice needs exactly " + std::to_string(dimension_) + " generators");
  }
  for (const auto& g : generators_) {
    if (g.size() != dimension_) throw Error(ErrorCode::dimension_mismatch, "generator has wrong dimension");
  }
  if (shifts_.empty()) throw Error(ErrorCode::invalid_argument, "spectrum needs at least one shift");
  for (const auto& s : shifts_) {
    if (s.size() != dimension_) throw Error(ErrorCode::dimension_mismatch, "shift has wrong dimension");
  }
  if (!(truncation_radius_ > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "truncation radius must be positive");
  }
  RationalMatrix g(dimension_, RationalVector(dimension_));
  for (std::size_t col = 0; col < dimension_; ++col) {
    for (std::size_t row = 0; row < dimension_; ++row) g[row][col] = generators_[col][row];
  }
  auto [inv, det] = invert(std::move(g));
  if (det == 0) throw Error(ErrorCode::non_invertible, "lattice generators are linearly dependent");
  inverse_ = std::move(inv);
  determinant_ = det;
  for (std::size_t i = 0; i < shifts_.size(); ++i) {
    for (std::size_t k = i + 1; k < shifts_.size(); ++k) {
      if (in_lattice(subtract(shifts_[i], shifts_[k]))) {
        throw Error(ErrorCode::duplicate_spectrum,
                    "shifts " + format_vector(shifts_[i]) + " and " + format_vector(shifts_[k]) +
                        " are congruent modulo the lattice");
      }
    }
  }
}

Spectrum Spectrum::scaled_lattice(std::size_t dimension, const Rational& spacing) {
  std::vector<RationalVector> gens(dimension, RationalVector(dimension, Rational(0)));
  for (std::size_t i = 0; i < dimension; ++i) gens[i][i] = spacing;
  return Spectrum(dimension, std::move(gens), {RationalVector(dimension, Rational(0))});
}

Rational Spectrum::covolume() const { return abs(determinant_); }

RationalVector Spectrum::lattice_coordinates(const RationalVector& v) const {
  RationalVector out(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) out[i] = dot(inverse_[i], v);
  return out;
}

bool Spectrum::in_lattice(const RationalVector& v) const {
  for (const auto& c : lattice_coordinates(v)) {
    if (!is_integer(c)) return false;
  }
  return true;
}

RationalVector Spectrum::lattice_point(const IntVector& n) const {
  RationalVector out(dimension_, Rational(0));
  for (std::size_t col = 0; col < dimension_; ++col) {
    if (n[col] == 0) continue;
    for (std::size_t row = 0; row < dimension_; ++row) out[row] += generators_[col][row] * n[col];
  }
  return out;
}

bool Spectrum::operator==(const Spectrum& other) const {
  return dimension_ == other.dimension_ && generators_ == other.generators_ &&
         shifts_ == other.shifts_ && truncation_radius_ == other.truncation_radius_;
}

std::optional<std::pair<std::size_t, std::size_t>> find_translate_overlap(const BoxDomain& base,
                                                                          const FiniteSet& a) {
  if (base.dimension() != a.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "domain and translation set differ in dimension");
  }
  std::vector<BoxDomain> copies;
  copies.reserve(a.size());
  for (const auto& p : a.points()) copies.push_back(base.translated(to_rational(p)));
  for (std::size_t i = 0; i < copies.size(); ++i) {
    for (std::size_t k = i + 1; k < copies.size(); ++k) {
      if (overlap_measure(copies[i], copies[k]) > 0) return std::pair{i, k};
    }
  }
  return std::nullopt;
}

BoxDomain minkowski_translate(const BoxDomain& base, const FiniteSet& a) {
  if (auto clash = find_translate_overlap(base, a)) {
    throw Error(ErrorCode::overlap,
                "translates by a=" + format_vector(to_rational(a[clash->first])) + " and a'=" +
                    format_vector(to_rational(a[clash->second])) + " overlap in positive measure");
  }
  std::vector<Box> boxes;
  for (const auto& p : a.points()) {
    const auto offset = to_rational(p);
    for (const auto& b : base.boxes()) boxes.push_back(b.translated(offset));
  }
  return BoxDomain(base.dimension(), std::move(boxes));
}

Spectrum shift_spectrum(const Spectrum& base, const FiniteSet& j, std::int64_t modulus) {
  if (base.dimension() != j.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "spectrum and shift set differ in dimension");
  }
  if (modulus != j.modulus()) {
    throw Error(ErrorCode::invalid_argument,
                "modulus " + std::to_string(modulus) + " does not match Z_" + std::to_string(j.modulus()));
  }
  std::vector<RationalVector> shifts;
  for (const auto& s : base.shifts()) {
    for (const auto& p : j.points()) {
      RationalVector v = s;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(p[i], modulus);
      shifts.push_back(std::move(v));
    }
  }
  return Spectrum(base.dimension(), base.generators(), std::move(shifts), base.truncation_radius());
}

std::vector<SpectrumPoint> enumerate_spectrum_points(const Spectrum& spectrum, double radius) {
  if (radius < 0.0) throw Error(ErrorCode::invalid_argument, "radius must be nonnegative");
  const std::size_t d = spectrum.dimension();
  const Rational r = from_double(radius);

  // ||n||∞ ≤ ||G^{-1}||∞ (r + ||s||∞) for every admissible lattice index n.
  Rational inv_norm = 0;
  {
    // G^{-1} applied to unit vectors gives its columns.
    std::vector<RationalVector> cols;
    for (std::size_t i = 0; i < d; ++i) {
      RationalVector e(d, Rational(0));
      e[i] = 1;
      cols.push_back(spectrum.lattice_coordinates(e));
    }
    for (std::size_t row = 0; row < d; ++row) {
      Rational sum = 0;
      for (std::size_t col = 0; col < d; ++col) sum += abs(cols[col][row]);
      inv_norm = std::max(inv_norm, sum);
    }
  }

  std::vector<SpectrumPoint> out;
  for (std::size_t si = 0; si < spectrum.shifts().size(); ++si) {
    const auto& s = spectrum.shifts()[si];
    const Rational bound_q = inv_norm * (r + inf_norm(s));
    const auto bound = static_cast<std::int64_t>(floor(bound_q)) + 1;
    for_each_in_cube(d, std::vector<std::int64_t>(d, bound), [&](const IntVector& n) {
      RationalVector v = add(spectrum.lattice_point(n), s);
      if (inf_norm(v) <= r) out.push_back(SpectrumPoint{std::move(v), si});
    });
  }
  std::sort(out.begin(), out.end(), [](const SpectrumPoint& x, const SpectrumPoint& y) {
    return lexicographic_less(x.value, y.value);
  });
  return out;
}

std::vector<RationalVector> enumerate_spectrum(const Spectrum& spectrum, double radius) {
  std::vector<RationalVector> out;
  for (auto& p : enumerate_spectrum_points(spectrum, radius)) out.push_back(std::move(p.value));
  return out;
}

std::vector<SpectrumPoint> enumerate_lattice_window(const Spectrum& spectrum,
                                                    std::int64_t max_index) {
  if (max_index < 0) throw Error(ErrorCode::invalid_argument, "window index must be nonnegative");
  const std::size_t d = spectrum.dimension();
  std::vector<SpectrumPoint> out;
  for (std::size_t si = 0; si < spectrum.shifts().size(); ++si) {
    for_each_in_cube(d, std::vector<std::int64_t>(d, max_index), [&](const IntVector& n) {
      out.push_back(SpectrumPoint{add(spectrum.lattice_point(n), spectrum.shifts()[si]), si});
    });
  }
  std::sort(out.begin(), out.end(), [](const SpectrumPoint& x, const SpectrumPoint& y) {
    return lexicographic_less(x.value, y.value);
  });
  return out;
}

bool root_of_unity_condition(const Spectrum& spectrum, const FiniteSet& a) {
  if (spectrum.dimension() != a.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "spectrum and translation set differ in dimension");
  }
  for (const auto& p : a.points()) {
    const auto av = to_rational(p);
    for (const auto& g : spectrum.generators()) {
      if (!is_integer(dot(g, av))) return false;
    }
    for (const auto& s : spectrum.shifts()) {
      if (!is_integer(dot(s, av))) return false;
    }
  }
  return true;
}

Spectrum product(const Spectrum& a, const Spectrum& b) {
  const std::size_t d1 = a.dimension();
  const std::size_t d2 = b.dimension();
  std::vector<RationalVector> gens;
  for (const auto& g : a.generators()) {
    RationalVector v = g;
    v.resize(d1 + d2, Rational(0));
    gens.push_back(std::move(v));
  }
  for (const auto& g : b.generators()) {
    RationalVector v(d1, Rational(0));
    v.insert(v.end(), g.begin(), g.end());
    gens.push_back(std::move(v));
  }
  std::vector<RationalVector> shifts;
  for (const auto& s : a.shifts()) {
    for (const auto& t : b.shifts()) {
      RationalVector v = s;
      v.insert(v.end(), t.begin(), t.end());
      shifts.push_back(std::move(v));
    }
  }
  return Spectrum(d1 + d2, std::move(gens), std::move(shifts),
                  std::max(a.truncation_radius(), b.truncation_radius()));
}

}  // namespace specpair
