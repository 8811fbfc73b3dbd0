#include "pretzel/integer.hpp"

#include <limits>
#include <stdexcept>

namespace pretzel {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer floor(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

Integer ceil(const Rational& r) { return -floor_div(-numerator(r), denominator(r)); }

std::string to_string(const Integer& x) { return x.str(); }

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer '" + text + "'");
    }
  }
  Integer value(text.substr(start));
  return text[0] == '-' ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_decimal_string(const Rational& r, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer num = numerator(r) * scale;
  Integer den = denominator(r);
  bool negative = num < 0;
  Integer mag = negative ? Integer(-num) : num;
  Integer rounded = (2 * mag + den) / (2 * den);
  std::string int_part = (rounded / scale).str();
  std::string frac = digits > 0 ? (rounded % scale).str() : "";
  if (digits > 0) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative && rounded != 0) ? "-" : "";
  out += int_part;
  if (!frac.empty()) out += "." + frac;
  return out;
}

bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace pretzel
