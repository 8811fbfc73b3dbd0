#pragma once

// Peripheral slopes p/q on the boundary torus of a knot exterior, in
// meridian-longitude coordinates. The meridian is 1/0.

#include "pretzel/integer.hpp"

#include <compare>
#include <string>

namespace pretzel {

/// A primitive peripheral class up to sign, stored canonically: gcd(|p|, q) = 1,
/// q >= 0, and the meridian is exactly 1/0.
class Slope {
 public:
  /// The meridian.
  Slope() : p_(1), q_(0) {}

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  bool is_meridian() const { return q_ == 0; }
  bool is_integral() const { return q_ == 1; }

  friend bool operator==(const Slope&, const Slope&) = default;
  /// Orders by q, then p (the ordering used for surgery listings).
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  friend Slope make_slope(const Integer& p, const Integer& q);
  Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {}

  Integer p_;
  Integer q_;
};

/// The class x*mu + y*lambda in H_1 of the boundary torus.
struct PeripheralClass {
  Integer x;
  Integer y;

  friend bool operator==(const PeripheralClass&, const PeripheralClass&) = default;
};

/// Reduces (p, q) to its canonical slope. Throws std::invalid_argument on (0, 0).
Slope make_slope(const Integer& p, const Integer& q);

inline Slope integral_slope(const Integer& p) { return make_slope(p, 1); }

/// Minimal geometric intersection number |a.p * b.q - a.q * b.p|.
Integer distance(const Slope& a, const Slope& b);

/// Primitive class of a slope: (p, q).
inline PeripheralClass to_class(const Slope& s) { return {s.p(), s.q()}; }

/// Slope of a nonzero class (reducing and normalizing sign).
inline Slope to_slope(const PeripheralClass& c) { return make_slope(c.x, c.y); }

/// "P/Q", e.g. "18/1", "1/0", "-72/7".
std::string to_string(const Slope& s);

/// Parses "P/Q" (or a bare integer "P", read as P/1) and canonicalizes.
/// Throws std::invalid_argument on malformed text or 0/0.
Slope parse_slope(const std::string& text);

}  // namespace pretzel
