#include <doctest.h>

#include "specpair/error.hpp"
#include "specpair/json.hpp"

using namespace specpair;

namespace {

ContinuousPair fig2_pair() {
  const auto base = ContinuousPair::orthogonal(BoxDomain::interval(0, 1), Spectrum::scaled_lattice(1));
  return *combine_orthogonal(base, FiniteSet::line(4, {0, 2}), FiniteSet::line(4, {0, 1})).pair;
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("finite set format") {
    const auto j = to_json(FiniteSet(4, 2, {{0, 0}, {1, 3}}));
    CHECK(j.dump() == R"({"N":4,"d":2,"points":[[0,0],[1,3]]})");
    CHECK(finite_set_from_json(j) == FiniteSet(4, 2, {{0, 0}, {1, 3}}));
  }

  TEST_CASE("domain and spectrum format") {
    const auto d = to_json(BoxDomain(1, {Box{{Rational(-1, 3)}, {Rational(5, 2)}}}));
    CHECK(d.dump() == R"({"boxes":[{"hi":["5/2"],"lo":["-1/3"]}],"d":1})");
    const Spectrum s(2, {{Rational(1), Rational(0)}, {Rational(1, 2), Rational(3, 2)}}, {{Rational(0), Rational(1, 4)}});
    const auto sj = to_json(s);
    CHECK(sj["basis"][1].dump() == R"(["1/2","3/2"])");
    CHECK(spectrum_from_json(sj) == s);
  }

  TEST_CASE("round trips are exact") {
    const auto pair = fig2_pair();
    const auto text = to_json(pair).dump();
    const auto back = continuous_pair_from_json(parse_json(text));
    CHECK(back == pair);
    CHECK(to_json(back).dump() == text);

    const auto report = make_classification_report(FiniteSet::line(5, {0, 2}), FiniteSet::line(5, {0, 1}));
    const auto rtext = to_json(report).dump();
    CHECK(classification_report_from_json(parse_json(rtext)) == report);

    const auto singular = make_classification_report(FiniteSet::line(4, {0, 2}), FiniteSet::line(4, {0, 2}));
    CHECK(classification_report_from_json(parse_json(to_json(singular).dump())) == singular);

    const auto base = ContinuousPair::orthogonal(BoxDomain::interval(0, 2), Spectrum::scaled_lattice(1, Rational(1, 2)));
    const auto combined = combine_frame(base, FiniteSet::line(6, {0, 3}), FiniteSet::line(6, {0, 1}));
    const auto ctext = to_json(combined).dump();
    const auto cback = combined_result_from_json(parse_json(ctext));
    CHECK(to_json(cback).dump() == ctext);
    CHECK(cback.hypotheses == combined.hypotheses);
    CHECK(cback.pair == combined.pair);
    CHECK(cback.finite == combined.finite);
  }

  TEST_CASE("orthogonal pairs default their constants to |Omega|") {
    const auto j = parse_json(R"({"domain": {"d": 1, "boxes": [{"lo": ["0"], "hi": ["3/2"]}]},
                                  "spectrum": {"basis": [["2/3"]]}, "kind": "orthogonal-basis"})");
    const auto p = continuous_pair_from_json(j);
    CHECK(p.lower == 1.5);
    CHECK(p.upper == 1.5);
    CHECK(p.spectrum.shifts().size() == 1);
    CHECK_THROWS_AS(continuous_pair_from_json(parse_json(R"({"domain": {"d": 1, "boxes": [{"lo": ["0"], "hi": ["1"]}]},
                                  "spectrum": {"basis": [["1"]]}, "kind": "riesz-basis"})")),
                    Error);
  }

  TEST_CASE("malformed JSON reports line and column") {
    try {
      parse_json("{\n  \"N\": 4,\n  \"d\": ]\n}");
      FAIL("expected parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::parse_error);
      CHECK(std::string(e.what()).find("line 3, column 8") != std::string::npos);
    }
  }

  TEST_CASE("schema errors") {
    CHECK_THROWS_AS(finite_set_from_json(parse_json(R"({"N": 4, "points": [[0]]})")), Error);
    CHECK_THROWS_AS(finite_set_from_json(parse_json(R"({"N": 4, "d": 1, "points": [["x"]]})")), Error);
    CHECK_THROWS_AS(domain_from_json(parse_json(R"({"d": 1, "boxes": [{"lo": ["1/0"], "hi": ["1"]}]})")), Error);
    CHECK_THROWS_AS(rational_from_json(parse_json("1.5")), Error);
  }
}
