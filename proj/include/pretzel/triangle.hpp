#pragma once

// PSL_2(C) character counts of triangle groups Delta(p, q, r) and the
// SL_2(C) jumping-point census built from them.

#include "pretzel/integer.hpp"
#include "pretzel/knot.hpp"

#include <string>

namespace pretzel {

/// Delta(p, q, r) = <a, b | a^p, b^q, (ab)^r>. Entries equal to 1 are allowed.
struct TriangleSignature {
  Integer p;
  Integer q;
  Integer r;

  /// Throws ValidationError if any entry is < 1.
  void validate() const;

  friend bool operator==(const TriangleSignature&, const TriangleSignature&) = default;
};

/// Parses "P,Q,R". Throws ValidationError.
TriangleSignature parse_signature(const std::string& text);

Integer total_psl2_characters(const TriangleSignature& sig);
Integer reducible_psl2_characters(const TriangleSignature& sig);
Integer irreducible_psl2_characters(const TriangleSignature& sig);

/// 1/p + 1/q + 1/r > 1.
bool is_spherical(const TriangleSignature& sig);

/// Base orbifolds whose characters feed a jump in the norm of a slope:
/// A_2_3 for the meridian (via the 2-fold branched cover, Delta(2,3,|n|)),
/// A_2_4 for slope 2n+4 (Delta(2,4,|n-6|)), A_3_5 for slope 2n+5
/// (Delta(3,5,|n-5|/2)).
enum class JumpFamily { A_2_3, A_2_4, A_3_5 };

std::string to_string(JumpFamily family);
/// Throws ValidationError on an unknown name.
JumpFamily parse_jump_family(const std::string& text);

TriangleSignature family_signature(JumpFamily family, const KnotIndex& knot);

struct JumpBreakdown {
  JumpFamily family;
  TriangleSignature signature;
  Integer irreducible_psl2;
  /// Irreducible characters with binary dihedral lifts (covered once in SL_2).
  Integer dihedral;
  /// SL_2 lifts of irreducible characters: 2 per non-dihedral, 1 per dihedral.
  Integer irreducible_lifts;
  /// Jumps at reducible characters (8 for A_3_5 when n = 5 mod 30, else 0).
  Integer reducible_jumps;
  Integer total;
};

/// Requires a hyperbolic knot.
JumpBreakdown jumping_breakdown(JumpFamily family, const KnotIndex& knot);

inline Integer sl2_jumping_count(JumpFamily family, const KnotIndex& knot) {
  return jumping_breakdown(family, knot).total;
}

}  // namespace pretzel
