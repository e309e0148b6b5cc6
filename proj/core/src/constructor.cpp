#include "specpair/constructor.hpp"

#include <sstream>

#include "specpair/error.hpp"

namespace specpair {

namespace {

std::string describe(const FiniteSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    if (s.dimension() == 1) {
      os << s[i][0];
    } else {
      os << format_vector(to_rational(s[i]));
    }
  }
  os << '}';
  return os.str();
}

void add_check(CombinedPairResult& r, std::string name, bool passed, std::string detail = {}) {
  r.hypotheses.push_back(HypothesisCheck{std::move(name), passed, std::move(detail)});
}

CombinedPairResult combine_impl(const ContinuousPair& base, const FiniteSet& a, const FiniteSet& j,
                                PairKind target, const Tolerances& tol) {
  CombinedPairResult r;
  r.target = target;

  const bool dims_ok = base.domain.dimension() == a.dimension() &&
                       base.spectrum.dimension() == a.dimension() &&
                       a.dimension() == j.dimension() && a.modulus() == j.modulus();
  add_check(r, "dimension", dims_ok,
            dims_ok ? "" : "domain, spectrum, A and J must share dimension and modulus");
  if (!dims_ok) return r;

  add_check(r, "base-kind", base.kind >= target,
            "base pair is " + std::string(to_string(base.kind)) + ", need at least " +
                std::string(to_string(target)));

  const bool enough = j.size() >= a.size();
  add_check(r, "cardinality", enough,
            "#A = " + std::to_string(a.size()) + ", #J = " + std::to_string(j.size()));
  if (target >= PairKind::riesz_basis) {
    add_check(r, "square", a.size() == j.size(), "basis kinds need #A = #J");
  }

  std::optional<BoxDomain> domain;
  if (auto clash = find_translate_overlap(base.domain, a)) {
    add_check(r, "disjointness", false,
              "translates by " + format_vector(to_rational(a[clash->first])) + " and " +
                  format_vector(to_rational(a[clash->second])) + " overlap");
  } else {
    add_check(r, "disjointness", true);
    domain = minkowski_translate(base.domain, a);
  }

  const bool unity = root_of_unity_condition(base.spectrum, a);
  add_check(r, "root-of-unity condition", unity,
            unity ? "" : "e^{2πiλ·a} ≠ 1 for some λ in the base spectrum and a in " + describe(a));

  std::optional<Spectrum> spectrum;
  try {
    spectrum = shift_spectrum(base.spectrum, j, j.modulus());
    add_check(r, "distinct-spectrum", true);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::duplicate_spectrum) throw;
    add_check(r, "distinct-spectrum", false, e.what());
  }

  if (enough) {
    r.finite = classify_finite_pair(a, j, tol);
    const PairKind need = target == PairKind::frame ? PairKind::frame : target;
    add_check(r, target == PairKind::frame ? "finite-frame"
                 : target == PairKind::riesz_basis ? "finite-invertible"
                                                    : "finite-orthogonal",
              r.finite->kind >= need,
              "finite pair (" + describe(a) + ", " + describe(j) + ") in Z_" +
                  std::to_string(a.modulus()) + " is " + std::string(to_string(r.finite->kind)));
    r.predicted_lower = base.lower * r.finite->lower_constant;
    r.predicted_upper = base.upper * r.finite->upper_constant;
  }

  bool all = true;
  for (const auto& h : r.hypotheses) all = all && h.passed;
  r.kind = all ? target : PairKind::none;

  if (domain && spectrum) {
    r.pair = ContinuousPair{std::move(*domain), std::move(*spectrum), r.kind, r.predicted_lower,
                            r.predicted_upper};
  }
  return r;
}

}  // namespace

ContinuousPair ContinuousPair::make(BoxDomain domain, Spectrum spectrum, PairKind kind,
                                    double lower, double upper) {
  if (domain.dimension() != spectrum.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "domain and spectrum differ in dimension");
  }
  if (lower < 0.0 || lower > upper) {
    throw Error(ErrorCode::invalid_argument, "constants must satisfy 0 <= lower <= upper");
  }
  if (kind >= PairKind::frame && !(lower > 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                std::string(to_string(kind)) + " needs a positive lower constant");
  }
  return ContinuousPair{std::move(domain), std::move(spectrum), kind, lower, upper};
}

ContinuousPair ContinuousPair::orthogonal(BoxDomain domain, Spectrum spectrum) {
  const double m = to_double(domain.measure());
  return make(std::move(domain), std::move(spectrum), PairKind::orthogonal_basis, m, m);
}

const HypothesisCheck* CombinedPairResult::first_failure() const {
  for (const auto& h : hypotheses) {
    if (!h.passed) return &h;
  }
  return nullptr;
}

CombinedPairResult combine_frame(const ContinuousPair& base, const FiniteSet& a, const FiniteSet& j,
                                 const Tolerances& tolerances) {
  return combine_impl(base, a, j, PairKind::frame, tolerances);
}

CombinedPairResult combine_riesz(const ContinuousPair& base, const FiniteSet& a, const FiniteSet& j,
                                 const Tolerances& tolerances) {
  return combine_impl(base, a, j, PairKind::riesz_basis, tolerances);
}

CombinedPairResult combine_orthogonal(const ContinuousPair& base, const FiniteSet& a,
                                      const FiniteSet& j, const Tolerances& tolerances) {
  return combine_impl(base, a, j, PairKind::orthogonal_basis, tolerances);
}

CombinedPairResult combine(const ContinuousPair& base, const FiniteSet& a, const FiniteSet& j,
                           PairKind target, const Tolerances& tolerances) {
  if (target < PairKind::frame) {
    throw Error(ErrorCode::unsupported, "combination target must be frame, riesz-basis or orthogonal-basis");
  }
  return combine_impl(base, a, j, target, tolerances);
}

ContinuousPair cartesian_product(const ContinuousPair& first, const ContinuousPair& second) {
  if (first.kind != PairKind::orthogonal_basis || second.kind != PairKind::orthogonal_basis) {
    throw Error(ErrorCode::unsupported, "Cartesian products are only supported for orthogonal pairs");
  }
  return ContinuousPair{product(first.domain, second.domain),
                        product(first.spectrum, second.spectrum), PairKind::orthogonal_basis,
                        first.lower * second.lower, first.upper * second.upper};
}

CompletenessReport check_completeness_hypotheses(const ContinuousPair& base, const FiniteSet& a,
                                                 const FiniteSet& j) {
  CompletenessReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back(HypothesisCheck{std::move(name), ok, std::move(detail)});
  };
  const bool dims_ok = base.domain.dimension() == a.dimension() &&
                       base.spectrum.dimension() == a.dimension() &&
                       a.dimension() == j.dimension() && a.modulus() == j.modulus();
  add("dimension", dims_ok);
  if (!dims_ok) return report;

  add("base-complete", base.kind >= PairKind::frame,
      "base pair is " + std::string(to_string(base.kind)));
  add("disjointness", !find_translate_overlap(base.domain, a).has_value());
  add("root-of-unity condition", root_of_unity_condition(base.spectrum, a));
  bool finite_complete = false;
  if (j.size() >= a.size()) {
    finite_complete = classify_finite_pair(a, j).kind >= PairKind::frame;
  }
  add("finite-complete", finite_complete, "E(J) must span l2(A)");

  report.applies = true;
  for (const auto& c : report.checks) report.applies = report.applies && c.passed;
  return report;
}

BesselBound bessel_constant(const ContinuousPair& base, const FiniteSet& a, const FiniteSet& j) {
  const double c = base.upper;
  BesselBound b;
  b.refined = c * static_cast<double>(j.size());
  b.coarse = c * static_cast<double>(a.size()) * static_cast<double>(j.size());
  b.tight_frame = a.size() == 1;
  return b;
}

}  // namespace specpair
