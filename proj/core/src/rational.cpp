#include "specpair/rational.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "specpair/error.hpp"

namespace specpair {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorCode::parse_error,
                "malformed rational '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::parse_error,
                  "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(body, text));
  }
  const Integer num = parse_integer(trim(body.substr(0, slash)), text);
  const Integer den = parse_integer(trim(body.substr(slash + 1)), text);
  if (den == 0) {
    throw Error(ErrorCode::parse_error,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::invalid_argument, "non-finite value");
  }
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // 2^53 * mantissa is an exact integer.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result(scaled);
  Integer power = 1;
  power <<= std::abs(exponent);
  if (exponent >= 0) return result * Rational(power);
  return result / Rational(power);
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

Integer floor(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

Rational fractional_part(const Rational& value) {
  return value - Rational(floor(value));
}

std::complex<double> cispi(const Rational& q) {
  // r in [0, 2), then folded into [0, 1/4] by exact quarter-turn symmetries
  Rational r = q - 2 * Rational(floor(q / 2));
  std::complex<double> turn{1.0, 0.0};
  if (r >= 1) {
    r -= 1;
    turn = {-1.0, 0.0};
  }
  if (r >= Rational(1, 2)) {
    r -= Rational(1, 2);
    turn *= std::complex<double>(0.0, 1.0);
  }
  std::complex<double> base;
  if (r == 0) {
    base = {1.0, 0.0};
  } else if (r == Rational(1, 4)) {
    base = {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
  } else if (r < Rational(1, 4)) {
    const double x = to_double(r) * std::numbers::pi;
    base = {std::cos(x), std::sin(x)};
  } else {
    const double x = to_double(Rational(1, 2) - r) * std::numbers::pi;
    base = {std::sin(x), std::cos(x)};
  }
  return {turn.real() * base.real() - turn.imag() * base.imag(),
          turn.real() * base.imag() + turn.imag() * base.real()};
}

double sinpi(const Rational& q) { return cispi(q).imag(); }

Rational dot(const RationalVector& u, const RationalVector& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::dimension_mismatch, "dot product of vectors with different lengths");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

RationalVector add(const RationalVector& u, const RationalVector& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::dimension_mismatch, "sum of vectors with different lengths");
  }
  RationalVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

RationalVector subtract(const RationalVector& u, const RationalVector& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::dimension_mismatch, "difference of vectors with different lengths");
  }
  RationalVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

std::vector<double> to_double(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

bool lexicographic_less(const RationalVector& u, const RationalVector& v) {
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

std::string format_vector(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << format_rational(v[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace specpair
