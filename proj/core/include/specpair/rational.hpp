#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace specpair {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

/// Parses "p/q", "p" or "-p/q". Throws Error(parse_error) on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" (q > 1, lowest terms)
/// otherwise. parse_rational(format_rational(x)) == x.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

/// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double value);

bool is_integer(const Rational& value);
Integer floor(const Rational& value);

/// value - floor(value), in [0, 1).
Rational fractional_part(const Rational& value);

/// e^{iπq}. q is reduced mod 2 exactly before any floating evaluation, and
/// multiples of 1/2 return exact values.
std::complex<double> cispi(const Rational& q);

/// sin(πq) with the same exact reduction; integers give exactly 0.
double sinpi(const Rational& q);

Rational dot(const RationalVector& u, const RationalVector& v);
RationalVector add(const RationalVector& u, const RationalVector& v);
RationalVector subtract(const RationalVector& u, const RationalVector& v);
RationalVector to_rational(const IntVector& v);
std::vector<double> to_double(const RationalVector& v);

/// Lexicographic comparison, used for deterministic ordering of points.
bool lexicographic_less(const RationalVector& u, const RationalVector& v);

std::string format_vector(const RationalVector& v);

}  // namespace specpair
