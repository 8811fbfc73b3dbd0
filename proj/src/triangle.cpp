#include "pretzel/triangle.hpp"

#include "pretzel/alexander.hpp"

#include <vector>

namespace pretzel {

void TriangleSignature::validate() const {
  if (p < 1 || q < 1 || r < 1) throw ValidationError("triangle signature entries must be >= 1");
}

TriangleSignature parse_signature(const std::string& text) {
  std::vector<Integer> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("malformed triangle signature '" + text + "' (expected P,Q,R)");
    }
    parts.emplace_back(field);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw ValidationError("triangle signature needs three entries, got '" + text + "'");
  TriangleSignature sig{parts[0], parts[1], parts[2]};
  sig.validate();
  return sig;
}

Integer total_psl2_characters(const TriangleSignature& sig) {
  sig.validate();
  const auto& [p, q, r] = sig;
  auto half = [](const Integer& x) { return Integer(x / 2); };
  return (p - half(p) - 1) * (q - half(q) - 1) * (r - half(r) - 1) +
         half(p) * half(q) * half(r) + half(gcd(p, q)) + half(gcd(p, r)) + half(gcd(q, r)) + 1;
}

Integer reducible_psl2_characters(const TriangleSignature& sig) {
  sig.validate();
  const auto& [p, q, r] = sig;
  Integer a = gcd(gcd(p, q), r);
  Integer b = gcd(gcd(p * q, p * r), q * r);
  return b / 2 + (a % 2 == 0 ? 2 : 1);
}

Integer irreducible_psl2_characters(const TriangleSignature& sig) {
  return total_psl2_characters(sig) - reducible_psl2_characters(sig);
}

bool is_spherical(const TriangleSignature& sig) {
  sig.validate();
  const auto& [p, q, r] = sig;
  return q * r + p * r + p * q > p * q * r;
}

std::string to_string(JumpFamily family) {
  switch (family) {
    case JumpFamily::A_2_3: return "A_2_3";
    case JumpFamily::A_2_4: return "A_2_4";
    case JumpFamily::A_3_5: return "A_3_5";
  }
  return "?";
}

JumpFamily parse_jump_family(const std::string& text) {
  for (auto f : {JumpFamily::A_2_3, JumpFamily::A_2_4, JumpFamily::A_3_5}) {
    if (text == to_string(f)) return f;
  }
  throw ValidationError("unknown jumping family '" + text + "'");
}

TriangleSignature family_signature(JumpFamily family, const KnotIndex& knot) {
  const Integer n = knot.n();
  switch (family) {
    case JumpFamily::A_2_3: return {2, 3, abs(n)};
    case JumpFamily::A_2_4: return {2, 4, abs(n - 6)};
    case JumpFamily::A_3_5: return {3, 5, abs(n - 5) / 2};
  }
  throw ValidationError("unknown jumping family");
}

JumpBreakdown jumping_breakdown(JumpFamily family, const KnotIndex& knot) {
  knot.require_hyperbolic();
  JumpBreakdown out{family, family_signature(family, knot), 0, 0, 0, 0, 0};
  out.irreducible_psl2 = irreducible_psl2_characters(out.signature);
  switch (family) {
    case JumpFamily::A_2_3:
      break;
    case JumpFamily::A_2_4:
      // Half of the Delta(2,4,|n-6|) characters are the knot's dihedral ones.
      out.dihedral = dihedral_character_count(knot);
      break;
    case JumpFamily::A_3_5: {
      // H_1(M(2n+5)) has odd order: no dihedral characters. When n = 5 mod 30
      // the Alexander polynomial vanishes at primitive 15th roots of unity and
      // eight reducible characters jump as well.
      std::int64_t residue = ((knot.n() % 30) + 30) % 30;
      if (residue == 5) out.reducible_jumps = 8;
      break;
    }
  }
  out.irreducible_lifts = 2 * (out.irreducible_psl2 - out.dihedral) + out.dihedral;
  out.total = out.irreducible_lifts + out.reducible_jumps;
  return out;
}

}  // namespace pretzel
