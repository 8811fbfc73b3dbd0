#pragma once

// Exact integer and rational scalars shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pretzel {

// Expression templates are off: results are plain values, so `auto`, `?:`
// and overload resolution behave as they would for built-in integers.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

/// Floor division; the divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

/// Largest integer <= r.
Integer floor(const Rational& r);

/// Smallest integer >= r.
Integer ceil(const Rational& r);

std::string to_string(const Integer& x);

/// "num/den" with a positive denominator, always two fields ("12/1").
std::string to_fraction_string(const Rational& r);

/// Parses "N" or "N/D" (D != 0). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Fixed-point decimal rendering with `digits` fractional digits, rounded
/// half away from zero, trailing zeros stripped.
std::string to_decimal_string(const Rational& r, int digits);

/// True when x fits in a signed 64-bit integer.
bool fits_int64(const Integer& x);

}  // namespace pretzel
