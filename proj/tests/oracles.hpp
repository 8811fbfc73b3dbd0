#pragma once

// Test-only reference computations. Nothing here calls into the code path it
// is used to check.

#include "pretzel/integer.hpp"
#include "pretzel/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using pretzel::Integer;
using pretzel::LatticePoint;

// Closed-form Newton polygon vertex lists, transcribed as printed, for the
// five parameter ranges n >= 7 (3 !| n), n = 3k >= 9, n <= -5 (3 !| n),
// n = 3k <= -3 and n = -1.
inline std::vector<LatticePoint> printed_newton_vertices(std::int64_t n_) {
  const Integer n = n_;
  if (n_ == -1) return {{0, 0}, {0, 1}, {4, 2}, {10, 1}, {14, 2}, {14, 3}};
  if (n_ >= 7 && n_ % 3 != 0) {
    return {{0, 0}, {16, 1}, {n * n - 2 * n - 15, (n - 5) / 2}, {2 * (n * n - n + 3), n - 2},
            {3 * n * n - 4 * n - 25, (3 * n - 11) / 2}, {3 * n * n - 4 * n - 9, 3 * (n - 3) / 2}};
  }
  if (n_ >= 7) {
    return {{0, 0}, {16, 1}, {12 * (n - 7), (n - 7) / 2}, {3 * (n * n - 6 * n + 23), n - 2},
            {3 * n * n - 6 * n - 31, (3 * n - 13) / 2}, {3 * (n * n - 2 * n - 5), (3 * n - 11) / 2}};
  }
  if (n_ % 3 != 0) {
    return {{0, (1 - 3 * n) / 2}, {10, 3 * (1 - n) / 2}, {n * n + 2 * n - 3, -n},
            {2 * (n * n + 2 * n + 6), (3 - n) / 2}, {3 * n * n + 6 * n - 1, 0}, {3 * (n * n + 2 * n + 3), 1}};
  }
  return {{0, -(3 * n + 1) / 2}, {10, (1 - 3 * n) / 2}, {n * n + 4 * n + 3, -n},
          {2 * (n * n + 2 * n + 6), (1 - n) / 2}, {3 * n * n + 8 * n + 5, 0}, {3 * n * n + 8 * n + 15, 1}};
}

// Same lists with the n = 3k >= 9 case rederived from a_2 = (n-7)/2 copies of
// the edge (2n+6, 1): third vertex ((n+3)(n-7), (n-7)/2) and its antipode
// (2(n^2 - n + 3), n - 2). Agrees with the printed list at n = 9.
inline std::vector<LatticePoint> corrected_newton_vertices(std::int64_t n_) {
  if (n_ >= 9 && n_ % 3 == 0) {
    const Integer n = n_;
    return {{0, 0}, {16, 1}, {(n + 3) * (n - 7), (n - 7) / 2}, {2 * (n * n - n + 3), n - 2},
            {3 * n * n - 6 * n - 31, (3 * n - 13) / 2}, {3 * (n * n - 2 * n - 5), (3 * n - 11) / 2}};
  }
  return printed_newton_vertices(n_);
}

inline std::vector<LatticePoint> sorted(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  return v;
}

// Congruence classification of primitive m-th roots of unity among the
// zeros of the Alexander polynomial.
inline std::set<std::int64_t> predicted_cyclotomic_roots(std::int64_t n) {
  auto divides = [](std::int64_t d, std::int64_t x) { return x % d == 0; };
  std::set<std::int64_t> out;
  if (divides(3, n)) out.insert(6);
  if (divides(10, n - 1)) out.insert(10);
  if (divides(12, n - 3)) out.insert(12);
  if (divides(15, n - 5)) out.insert(15);
  return out;
}

// PSL_2(C) characters of Delta(p, q, r) by enumerating SL_2 trace triples
// x = 2cos(pi a/p), y = 2cos(pi b/q), z = tr(XY) = 2cos(pi c/r) modulo the
// sign changes (x, y, z) -> (-x, y, -z), (x, -y, -z). A triple is reducible
// iff x^2 + y^2 + z^2 - xyz = 4; irreducible triples need X, Y, XY != +-I.
struct TriangleCounts {
  long total = 0;
  long reducible = 0;
};

inline TriangleCounts brute_triangle_counts(int p, int q, int r) {
  using std::numbers::pi;
  std::set<std::tuple<int, int, int>> seen;
  TriangleCounts out;
  for (int a = 0; a <= p; ++a) {
    for (int b = 0; b <= q; ++b) {
      for (int c = 0; c <= r; ++c) {
        const double x = 2 * std::cos(pi * a / p);
        const double y = 2 * std::cos(pi * b / q);
        const double z = 2 * std::cos(pi * c / r);
        const bool reducible = std::abs(x * x + y * y + z * z - x * y * z - 4) < 1e-9;
        const bool central = a == 0 || a == p || b == 0 || b == q || c == 0 || c == r;
        if (!reducible && central) continue;
        std::tuple<int, int, int> orbit[] = {{a, b, c}, {p - a, b, r - c}, {a, q - b, r - c}, {p - a, q - b, c}};
        auto rep = *std::min_element(std::begin(orbit), std::end(orbit));
        if (!seen.insert(rep).second) continue;
        ++out.total;
        out.reducible += reducible;
      }
    }
  }
  return out;
}

// Reducible PSL_2 characters = homomorphisms Delta(p,q,r) -> C^* up to
// inversion. A homomorphism sends the generators to exp(2 pi i u/p),
// exp(2 pi i v/q) with (ab)^r = 1, i.e. r (u q + v p) = 0 mod pq.
inline long abelian_character_orbits(long p, long q, long r) {
  std::set<std::pair<long, long>> seen;
  long orbits = 0;
  for (long u = 0; u < p; ++u) {
    for (long v = 0; v < q; ++v) {
      if ((r * (u * q + v * p)) % (p * q) != 0) continue;
      auto rep = std::min(std::pair{u, v}, std::pair{(p - u) % p, (q - v) % q});
      if (seen.insert(rep).second) ++orbits;
    }
  }
  return orbits;
}

}  // namespace oracle
