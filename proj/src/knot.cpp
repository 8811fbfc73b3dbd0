#include "pretzel/knot.hpp"

namespace pretzel {

bool is_torus_index(std::int64_t n) { return n == 1 || n == 3 || n == 5; }

KnotIndex KnotIndex::make(std::int64_t n, bool allow_torus) {
  if (n % 2 == 0) throw ValidationError("n must be odd (n = " + std::to_string(n) + " gives a link)");
  if (n > kMaxAbsN || n < -kMaxAbsN) {
    throw ValidationError("|n| must be at most " + std::to_string(kMaxAbsN));
  }
  if (is_torus_index(n)) {
    if (!allow_torus) {
      throw ValidationError("n = " + std::to_string(n) +
                            " is a torus knot; pass --allow-torus for informational output");
    }
    return KnotIndex(n, KnotClass::torus);
  }
  return KnotIndex(n, KnotClass::hyperbolic);
}

void KnotIndex::require_hyperbolic() const {
  if (!hyperbolic()) {
    throw ValidationError("n = " + std::to_string(n_) + " is a torus knot; this operation requires a hyperbolic knot");
  }
}

std::vector<std::int64_t> hyperbolic_indices(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (n % 2 != 0 && !is_torus_index(n)) out.push_back(n);
  }
  return out;
}

}  // namespace pretzel
