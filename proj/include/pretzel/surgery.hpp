#pragma once

// Cyclic and finite Dehn-surgery candidates by lattice search against the
// per-curve norm bounds
//
//   cyclic:  ||alpha||_i = s_i
//   finite:  ||alpha||_i <= max(2 s_i, s_i + 8)
//
// for every curve i, with boundary slopes and known Seifert fibred slopes
// over hyperbolic base orbifolds excluded.

#include "pretzel/integer.hpp"
#include "pretzel/knot.hpp"
#include "pretzel/slopes.hpp"

#include <string>
#include <vector>

namespace pretzel {

enum class SurgeryStatus {
  trivial,
  cyclic_candidate,
  finite_candidate,
  realized_cyclic,
  realized_finite,
  excluded,
};

enum class ExclusionReason {
  none,
  boundary_slope,
  norm_exceeds_bound,
  odd_dihedral_exclusion,
  nonspherical_seifert_base,
};

std::string to_string(SurgeryStatus status);
std::string to_string(ExclusionReason reason);

struct SurgeryVerdict {
  Slope slope;
  std::vector<Integer> curve_norms;
  Integer total;
  SurgeryStatus status = SurgeryStatus::excluded;
  ExclusionReason reason = ExclusionReason::none;
};

/// Result of the lattice search. Every enumerated class (p, q) satisfies
/// |p| < box_p and 0 <= q < box_q.
struct SurgeryReport {
  KnotIndex knot;
  Integer s0;
  /// Radius of the search region in units of s_0: max(2, (s_0 + 8) / s_0).
  Rational search_scale;
  Integer box_p;
  Integer box_q;
  /// Sorted by q, then p.
  std::vector<SurgeryVerdict> verdicts;
};

/// 1/p + 1/q + 1/r > 1.
bool is_spherical_triple(const Integer& p, const Integer& q, const Integer& r);

/// Classifies every primitive slope inside max(2, (s_0+8)/s_0) B.
SurgeryReport enumerate_candidates(const KnotIndex& knot);

/// True when status is one of the realized_* values.
bool is_realized(SurgeryStatus status);

}  // namespace pretzel
