#pragma once

// Dense integer Laurent polynomials in one variable t.

#include "pretzel/integer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pretzel {

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;  // zero

  /// coefficients[k] multiplies t^(low_exponent + k). Leading and trailing
  /// zeros are trimmed.
  LaurentPolynomial(std::vector<Integer> coefficients, std::int64_t low_exponent = 0);

  static LaurentPolynomial monomial(Integer coefficient, std::int64_t exponent);
  /// t^exponent - 1
  static LaurentPolynomial power_minus_one(std::int64_t exponent);
  /// t^exponent + 1
  static LaurentPolynomial power_plus_one(std::int64_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  std::int64_t low_exponent() const { return low_; }
  /// Exponent of the last nonzero term; meaningless for zero.
  std::int64_t high_exponent() const {
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// high - low; -1 for zero.
  std::int64_t span() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  const Integer& leading() const { return coeffs_.back(); }
  Integer coefficient(std::int64_t exponent) const;

  Rational evaluate(const Rational& t) const;

  /// The canonical representative up to units +-t^k: low exponent 0 and
  /// positive leading coefficient.
  LaurentPolynomial unit_normalized() const;

  bool is_palindromic() const;

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
  std::int64_t low_ = 0;
};

struct LaurentDivision {
  LaurentPolynomial quotient;
  LaurentPolynomial remainder;
};

/// Division in Z[t, 1/t] by a divisor whose leading coefficient is +-1.
/// With dividend = t^a A(t), divisor = t^b B(t) (A(0), B(0) != 0), returns
/// quotient t^(a-b) Q and remainder t^a R where A = Q B + R, deg R < deg B.
/// The remainder is zero iff divisor divides dividend in the Laurent ring.
/// Throws std::domain_error for a zero or non-unit-leading divisor.
LaurentDivision divide(const LaurentPolynomial& dividend, const LaurentPolynomial& divisor);

/// Quotient of a division that must be exact; throws std::domain_error otherwise.
LaurentPolynomial divide_exact(const LaurentPolynomial& dividend, const LaurentPolynomial& divisor);

bool divides(const LaurentPolynomial& divisor, const LaurentPolynomial& dividend);

/// "c0 + c1*t + c2*t^2 ..." in ascending exponent order, zero terms omitted,
/// unit coefficients elided on nonconstant terms. Zero renders as "0".
std::string to_string(const LaurentPolynomial& f);

}  // namespace pretzel
