#pragma once

// Alexander polynomial of the (-2, 3, n) pretzel knot and its cyclotomic
// factors.

#include "pretzel/integer.hpp"
#include "pretzel/knot.hpp"
#include "pretzel/laurent.hpp"

#include <cstdint>
#include <set>

namespace pretzel {

/// The two summands of the closed form before they are added, each already
/// exactly divided:
///   first  = (t - 1)(t^(n+3) - 1) / (t + 1)
///   second = t (t^3 + 1)(t^n + 1) / (t + 1)^2
struct AlexanderSummands {
  LaurentPolynomial first;
  LaurentPolynomial second;
};

/// Throws std::domain_error if either division leaves a remainder (never
/// happens for odd n).
AlexanderSummands alexander_summands(const KnotIndex& knot);

/// Unit-normalized Alexander polynomial (low exponent 0, positive leading
/// coefficient). Torus indices are accepted here when the KnotIndex allows them.
LaurentPolynomial alexander_polynomial(const KnotIndex& knot);

/// Number of irreducible binary dihedral characters, (|Delta(-1)| - 1) / 2,
/// evaluated on the divided polynomial.
Integer dihedral_character_count(const KnotIndex& knot);

/// Phi_m(t) by iterated exact division of t^m - 1. Memoized; thread-safe.
/// Throws std::invalid_argument for m < 1.
LaurentPolynomial cyclotomic_polynomial(std::int64_t m);

/// Euler's totient.
std::int64_t totient(std::int64_t m);

/// All m >= 1 with deg Phi_m <= deg Delta and Phi_m | Delta.
std::set<std::int64_t> cyclotomic_roots(const KnotIndex& knot);

/// Multiplicity of Phi_m as a factor of Delta.
int cyclotomic_multiplicity(const KnotIndex& knot, std::int64_t m);

}  // namespace pretzel
