#pragma once

// Parameter validation for the (-2, 3, n) pretzel family.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pretzel {

/// Input rejected by a precondition (even n, torus n, bad slope, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class KnotClass { hyperbolic, torus };

/// An odd n. n = 1, 3, 5 give torus knots; every other odd n is hyperbolic.
class KnotIndex {
 public:
  /// Throws ValidationError for even n, and for torus n unless allow_torus.
  static KnotIndex make(std::int64_t n, bool allow_torus = false);

  std::int64_t n() const { return n_; }
  KnotClass knot_class() const { return class_; }
  bool hyperbolic() const { return class_ == KnotClass::hyperbolic; }

  /// Throws ValidationError unless hyperbolic.
  void require_hyperbolic() const;

  friend bool operator==(const KnotIndex&, const KnotIndex&) = default;

 private:
  KnotIndex(std::int64_t n, KnotClass c) : n_(n), class_(c) {}
  std::int64_t n_;
  KnotClass class_;
};

/// Largest |n| accepted. Keeps dense polynomial work and lattice searches bounded.
inline constexpr std::int64_t kMaxAbsN = 1'000'000;

bool is_torus_index(std::int64_t n);

/// Every odd non-torus n in [lo, hi], ascending.
std::vector<std::int64_t> hyperbolic_indices(std::int64_t lo, std::int64_t hi);

}  // namespace pretzel
