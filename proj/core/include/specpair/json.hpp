#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "specpair/constructor.hpp"
#include "specpair/finite_pairs.hpp"

namespace specpair {

using Json = nlohmann::json;

/// Parses text; syntax errors become parse_error carrying line and column.
Json parse_json(std::string_view text);

/// "p/q" string, or an integer.
Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& value);

/// {"N", "d", "points"}
Json to_json(const FiniteSet& set);
FiniteSet finite_set_from_json(const Json& value);

/// {"d", "boxes": [{"lo", "hi"}]}
Json to_json(const BoxDomain& domain);
BoxDomain domain_from_json(const Json& value);

/// {"basis": [generator, ...], "shifts": [...], "radius"}; each basis entry
/// is one generator (a column of G).
Json to_json(const Spectrum& spectrum);
Spectrum spectrum_from_json(const Json& value);

/// {"domain", "spectrum", "kind", "lower", "upper"}. lower and upper default
/// to |Ω| for an orthogonal pair.
Json to_json(const ContinuousPair& pair);
ContinuousPair continuous_pair_from_json(const Json& value);

/// {"kind", "lower", "upper", "condition_number", "singular_values"};
/// an infinite condition number is written as null.
Json to_json(const FiniteClassification& classification);
FiniteClassification classification_from_json(const Json& value);

struct ClassificationReport {
  FiniteSet a;
  FiniteSet j;
  FiniteClassification classification;
  ComplexMatrix matrix;

  bool operator==(const ClassificationReport& other) const;
};

ClassificationReport make_classification_report(const FiniteSet& a, const FiniteSet& j,
                                                const Tolerances& tolerances = {});
/// Matrix as rows of [re, im] pairs.
Json to_json(const ClassificationReport& report);
ClassificationReport classification_report_from_json(const Json& value);

Json to_json(const HypothesisCheck& check);
Json to_json(const CombinedPairResult& result);
CombinedPairResult combined_result_from_json(const Json& value);

}  // namespace specpair
