#include "pretzel/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace pretzel {

LaurentPolynomial::LaurentPolynomial(std::vector<Integer> coefficients, std::int64_t low_exponent)
    : coeffs_(std::move(coefficients)), low_(low_exponent) {
  trim();
}

void LaurentPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

LaurentPolynomial LaurentPolynomial::monomial(Integer coefficient, std::int64_t exponent) {
  return LaurentPolynomial({std::move(coefficient)}, exponent);
}

LaurentPolynomial LaurentPolynomial::power_minus_one(std::int64_t exponent) {
  return monomial(1, exponent) - monomial(1, 0);
}

LaurentPolynomial LaurentPolynomial::power_plus_one(std::int64_t exponent) {
  return monomial(1, exponent) + monomial(1, 0);
}

Integer LaurentPolynomial::coefficient(std::int64_t exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

Rational LaurentPolynomial::evaluate(const Rational& t) const {
  if (is_zero()) return 0;
  if (t == 0) {
    if (low_ < 0) throw std::domain_error("evaluating a negative power at t = 0");
    return low_ == 0 ? Rational(coeffs_.front()) : Rational(0);
  }
  // Horner on the coefficient list, then multiply by t^low.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  Rational unit = 1;
  Rational base = low_ >= 0 ? t : Rational(1) / t;
  for (std::int64_t k = 0, e = low_ >= 0 ? low_ : -low_; k < e; ++k) unit *= base;
  return acc * unit;
}

LaurentPolynomial LaurentPolynomial::unit_normalized() const {
  if (is_zero()) return {};
  LaurentPolynomial out(coeffs_, 0);
  if (out.leading() < 0) out = -out;
  return out;
}

bool LaurentPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t low = std::min(a.low_, b.low_);
  std::int64_t high = std::max(a.high_exponent(), b.high_exponent());
  std::vector<Integer> coeffs(static_cast<std::size_t>(high - low + 1));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) coeffs[static_cast<std::size_t>(a.low_ - low) + k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) coeffs[static_cast<std::size_t>(b.low_ - low) + k] += b.coeffs_[k];
  return LaurentPolynomial(std::move(coeffs), low);
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPolynomial(std::move(coeffs), a.low_ + b.low_);
}

LaurentDivision divide(const LaurentPolynomial& dividend, const LaurentPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Integer& lead = divisor.leading();
  if (lead != 1 && lead != -1) {
    throw std::domain_error("divisor must have leading coefficient +-1");
  }
  if (dividend.is_zero()) return {};

  const auto& den = divisor.coefficients();
  std::vector<Integer> rem = dividend.coefficients();
  const std::size_t dd = den.size() - 1;
  if (rem.size() <= dd) return {{}, dividend};

  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer c = rem[k + dd] * lead;  // lead is its own inverse
    if (c == 0) continue;
    quot[k] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * den[j];
  }
  rem.resize(dd);
  return {LaurentPolynomial(std::move(quot), dividend.low_exponent() - divisor.low_exponent()),
          LaurentPolynomial(std::move(rem), dividend.low_exponent())};
}

LaurentPolynomial divide_exact(const LaurentPolynomial& dividend, const LaurentPolynomial& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) throw std::domain_error("inexact Laurent division: remainder " + to_string(r));
  return q;
}

bool divides(const LaurentPolynomial& divisor, const LaurentPolynomial& dividend) {
  return divide(dividend, divisor).remainder.is_zero();
}

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& coeffs = f.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    std::int64_t e = f.low_exponent() + static_cast<std::int64_t>(k);
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace pretzel
