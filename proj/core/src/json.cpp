#include "specpair/json.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "specpair/error.hpp"

namespace specpair {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

double number(const Json& v, const char* what) {
  if (v.is_null()) return std::numeric_limits<double>::infinity();
  if (!v.is_number()) bad(std::string(what) + " must be a number");
  return v.get<double>();
}

Json number_to_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

RationalVector vector_from_json(const Json& v) {
  if (!v.is_array()) bad("expected an array of rationals");
  RationalVector out;
  for (const auto& x : v) out.push_back(rational_from_json(x));
  return out;
}

std::vector<RationalVector> vectors_from_json(const Json& v) {
  if (!v.is_array()) bad("expected an array of vectors");
  std::vector<RationalVector> out;
  for (const auto& x : v) out.push_back(vector_from_json(x));
  return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& v) {
  if (!v.is_array()) bad("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(v.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(v[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = v[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) bad("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2) bad("matrix entries must be [re, im]");
      m(r, c) = {number(e[0], "re"), number(e[1], "im")};
    }
  }
  return m;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    const auto colon = msg.rfind(": ");
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    bad("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  bad("rational must be a \"p/q\" string or an integer");
}

Json rational_to_json(const Rational& value) { return format_rational(value); }

Json to_json(const FiniteSet& set) {
  Json pts = Json::array();
  for (const auto& p : set.points()) pts.push_back(p);
  return Json{{"N", set.modulus()}, {"d", set.dimension()}, {"points", std::move(pts)}};
}

FiniteSet finite_set_from_json(const Json& value) {
  const auto n = integer(field(value, "N"), "N");
  const auto d = integer(field(value, "d"), "d");
  if (d < 1) bad("d must be positive");
  const auto& pts = field(value, "points");
  if (!pts.is_array()) bad("points must be an array");
  std::vector<IntVector> points;
  for (const auto& p : pts) {
    if (p.is_number_integer()) {
      points.push_back({p.get<std::int64_t>()});
      continue;
    }
    if (!p.is_array()) bad("each point must be an array of integers");
    IntVector v;
    for (const auto& x : p) v.push_back(integer(x, "point coordinate"));
    points.push_back(std::move(v));
  }
  return FiniteSet(n, static_cast<std::size_t>(d), std::move(points));
}

Json to_json(const BoxDomain& domain) {
  Json boxes = Json::array();
  for (const auto& b : domain.boxes()) {
    boxes.push_back(Json{{"lo", vector_to_json(b.lower)}, {"hi", vector_to_json(b.upper)}});
  }
  return Json{{"d", domain.dimension()}, {"boxes", std::move(boxes)}};
}

BoxDomain domain_from_json(const Json& value) {
  const auto d = integer(field(value, "d"), "d");
  if (d < 1) bad("d must be positive");
  const auto& boxes = field(value, "boxes");
  if (!boxes.is_array()) bad("boxes must be an array");
  std::vector<Box> out;
  for (const auto& b : boxes) {
    out.push_back(Box{vector_from_json(field(b, "lo")), vector_from_json(field(b, "hi"))});
  }
  return BoxDomain(static_cast<std::size_t>(d), std::move(out));
}

Json to_json(const Spectrum& spectrum) {
  Json basis = Json::array();
  for (const auto& g : spectrum.generators()) basis.push_back(vector_to_json(g));
  Json shifts = Json::array();
  for (const auto& s : spectrum.shifts()) shifts.push_back(vector_to_json(s));
  return Json{{"basis", std::move(basis)}, {"shifts", std::move(shifts)},
              {"radius", spectrum.truncation_radius()}};
}

Spectrum spectrum_from_json(const Json& value) {
  auto basis = vectors_from_json(field(value, "basis"));
  std::vector<RationalVector> shifts;
  if (value.contains("shifts")) {
    shifts = vectors_from_json(value["shifts"]);
  } else {
    shifts.push_back(RationalVector(basis.size(), Rational(0)));
  }
  double radius = 4.0;
  if (value.contains("radius")) radius = number(value["radius"], "radius");
  const std::size_t d = basis.size();
  return Spectrum(d, std::move(basis), std::move(shifts), radius);
}

Json to_json(const ContinuousPair& pair) {
  return Json{{"domain", to_json(pair.domain)},
              {"spectrum", to_json(pair.spectrum)},
              {"kind", std::string(to_string(pair.kind))},
              {"lower", pair.lower},
              {"upper", pair.upper},
              {"normalization", "unnormalized exponentials; an orthogonal pair has lower = upper = |domain|"}};
}

ContinuousPair continuous_pair_from_json(const Json& value) {
  BoxDomain domain = domain_from_json(field(value, "domain"));
  Spectrum spectrum = spectrum_from_json(field(value, "spectrum"));
  const auto& kind_field = field(value, "kind");
  if (!kind_field.is_string()) bad("kind must be a string");
  const PairKind kind = parse_pair_kind(kind_field.get<std::string>());
  const double measure = to_double(domain.measure());
  const bool defaults = kind == PairKind::orthogonal_basis;
  double lower = 0.0;
  double upper = 0.0;
  if (value.contains("lower")) {
    lower = number(value["lower"], "lower");
  } else if (defaults) {
    lower = measure;
  } else {
    bad("missing field \"lower\"");
  }
  if (value.contains("upper")) {
    upper = number(value["upper"], "upper");
  } else if (defaults) {
    upper = measure;
  } else {
    bad("missing field \"upper\"");
  }
  return ContinuousPair::make(std::move(domain), std::move(spectrum), kind, lower, upper);
}

Json to_json(const FiniteClassification& c) {
  return Json{{"kind", std::string(to_string(c.kind))},
              {"lower", c.lower_constant},
              {"upper", c.upper_constant},
              {"condition_number", number_to_json(c.condition_number)},
              {"singular_values", c.singular_values}};
}

FiniteClassification classification_from_json(const Json& value) {
  FiniteClassification c;
  const auto& kind = field(value, "kind");
  if (!kind.is_string()) bad("kind must be a string");
  c.kind = parse_pair_kind(kind.get<std::string>());
  c.lower_constant = number(field(value, "lower"), "lower");
  c.upper_constant = number(field(value, "upper"), "upper");
  c.condition_number = number(field(value, "condition_number"), "condition_number");
  const auto& sv = field(value, "singular_values");
  if (!sv.is_array()) bad("singular_values must be an array");
  for (const auto& x : sv) c.singular_values.push_back(number(x, "singular value"));
  return c;
}

bool ClassificationReport::operator==(const ClassificationReport& other) const {
  return a == other.a && j == other.j && classification == other.classification &&
         matrix.rows() == other.matrix.rows() && matrix.cols() == other.matrix.cols() &&
         matrix == other.matrix;
}

ClassificationReport make_classification_report(const FiniteSet& a, const FiniteSet& j,
                                                const Tolerances& tolerances) {
  return ClassificationReport{a, j, classify_finite_pair(a, j, tolerances),
                              build_evaluation_matrix(a, j).entries};
}

Json to_json(const ClassificationReport& r) {
  Json out = to_json(r.classification);
  out["A"] = to_json(r.a);
  out["J"] = to_json(r.j);
  out["matrix"] = matrix_to_json(r.matrix);
  return out;
}

ClassificationReport classification_report_from_json(const Json& value) {
  return ClassificationReport{finite_set_from_json(field(value, "A")), finite_set_from_json(field(value, "J")),
                              classification_from_json(value), matrix_from_json(field(value, "matrix"))};
}

Json to_json(const HypothesisCheck& check) {
  return Json{{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}};
}

Json to_json(const CombinedPairResult& result) {
  Json hyps = Json::array();
  for (const auto& h : result.hypotheses) hyps.push_back(to_json(h));
  Json out{{"target", std::string(to_string(result.target))},
           {"kind", std::string(to_string(result.kind))},
           {"succeeded", result.succeeded()},
           {"predicted_lower", result.predicted_lower},
           {"predicted_upper", result.predicted_upper},
           {"hypotheses", std::move(hyps)}};
  out["pair"] = result.pair ? to_json(*result.pair) : Json(nullptr);
  out["finite"] = result.finite ? to_json(*result.finite) : Json(nullptr);
  if (const auto* f = result.first_failure()) {
    out["failure"] = f->name + " failed";
  }
  return out;
}

CombinedPairResult combined_result_from_json(const Json& value) {
  CombinedPairResult r;
  r.target = parse_pair_kind(field(value, "target").get<std::string>());
  r.kind = parse_pair_kind(field(value, "kind").get<std::string>());
  r.predicted_lower = number(field(value, "predicted_lower"), "predicted_lower");
  r.predicted_upper = number(field(value, "predicted_upper"), "predicted_upper");
  for (const auto& h : field(value, "hypotheses")) {
    r.hypotheses.push_back(HypothesisCheck{field(h, "name").get<std::string>(), field(h, "passed").get<bool>(),
                                           field(h, "detail").get<std::string>()});
  }
  if (const auto& p = field(value, "pair"); !p.is_null()) r.pair = continuous_pair_from_json(p);
  if (const auto& f = field(value, "finite"); !f.is_null()) r.finite = classification_from_json(f);
  return r;
}

}  // namespace specpair
