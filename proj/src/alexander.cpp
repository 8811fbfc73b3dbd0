#include "pretzel/alexander.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace pretzel {

namespace {

const LaurentPolynomial& t_plus_one() {
  static const LaurentPolynomial p = LaurentPolynomial::power_plus_one(1);
  return p;
}

}  // namespace

AlexanderSummands alexander_summands(const KnotIndex& knot) {
  const std::int64_t n = knot.n();
  const LaurentPolynomial t = LaurentPolynomial::monomial(1, 1);
  const LaurentPolynomial t_minus_one = LaurentPolynomial::power_minus_one(1);

  LaurentPolynomial first =
      divide_exact(t_minus_one * LaurentPolynomial::power_minus_one(n + 3), t_plus_one());
  LaurentPolynomial second = divide_exact(
      t * LaurentPolynomial::power_plus_one(3) * LaurentPolynomial::power_plus_one(n),
      t_plus_one() * t_plus_one());
  return {std::move(first), std::move(second)};
}

LaurentPolynomial alexander_polynomial(const KnotIndex& knot) {
  auto [first, second] = alexander_summands(knot);
  return (first + second).unit_normalized();
}

Integer dihedral_character_count(const KnotIndex& knot) {
  Rational value = alexander_polynomial(knot).evaluate(-1);
  Integer magnitude = abs(numerator(value));
  return (magnitude - 1) / 2;
}

std::int64_t totient(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("totient: m must be positive");
  std::int64_t result = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

LaurentPolynomial cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
  static std::mutex mutex;
  static std::map<std::int64_t, LaurentPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  LaurentPolynomial phi = LaurentPolynomial::power_minus_one(m);
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d == 0) phi = divide_exact(phi, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(phi)).first->second;
}

std::set<std::int64_t> cyclotomic_roots(const KnotIndex& knot) {
  const LaurentPolynomial delta = alexander_polynomial(knot);
  const std::int64_t degree = delta.span();
  std::set<std::int64_t> roots;
  // phi(m) >= sqrt(m / 2), so phi(m) <= degree forces m <= 2 degree^2.
  const std::int64_t limit = std::max<std::int64_t>(2 * degree * degree, 2);
  for (std::int64_t m = 1; m <= limit; ++m) {
    if (totient(m) > degree) continue;
    if (divides(cyclotomic_polynomial(m), delta)) roots.insert(m);
  }
  return roots;
}

int cyclotomic_multiplicity(const KnotIndex& knot, std::int64_t m) {
  LaurentPolynomial rest = alexander_polynomial(knot);
  const LaurentPolynomial phi = cyclotomic_polynomial(m);
  int count = 0;
  while (!rest.is_zero()) {
    auto [q, r] = divide(rest, phi);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++count;
  }
  return count;
}

}  // namespace pretzel
