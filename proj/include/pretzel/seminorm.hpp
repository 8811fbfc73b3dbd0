#pragma once

// Culler-Shalen seminorms of the (-2, 3, n) pretzel knot K_n.
//
// Every seminorm has the boundary-slope form
//
//   ||gamma|| = 2 * sum_j a_j * Delta(gamma, beta_j),   a_j >= 0,
//
// over the four boundary slopes beta_j of K_n. The character variety has one
// norm curve X_0 and, when 3 | n, an r-curve X_1 with r = 2n + 6 and s_1 = 2.

#include "pretzel/integer.hpp"
#include "pretzel/knot.hpp"
#include "pretzel/slopes.hpp"

#include <array>
#include <string>
#include <vector>

namespace pretzel {

enum class CurveKind { norm_curve, r_curve };

std::string to_string(CurveKind kind);

struct CurveTerm {
  Slope boundary;
  Integer coeff;
};

/// One curve of the character variety, described by its seminorm.
struct CurveSpec {
  CurveKind kind;
  std::vector<CurveTerm> terms;
  /// ||mu|| = minimal nonzero value of the seminorm.
  Integer s;
};

/// All seminorm data for one knot. Immutable after construction.
struct SeminormSystem {
  KnotIndex knot;
  std::array<Slope, 4> boundary_slopes;
  /// curves[0] is the norm curve; curves[1], when present, the r-curve.
  std::vector<CurveSpec> curves;
  /// Sum of s_i over all curves.
  Integer S;

  const CurveSpec& norm_curve() const { return curves.front(); }
  bool has_r_curve() const { return curves.size() > 1; }
};

/// [0, 2n+6, beta_3, beta_4] with beta_3 = 16 (n >= 7) or 10 (n <= -1) and
/// beta_4 = (n^2 - n - 5) / ((n - 3)/2) (n >= 7) or 2(n + 1)^2 / n (n <= -1).
/// Coincident slopes (n = -1: beta_4 = 0; n = -3: beta_2 = 0) keep their own
/// positions.
std::array<Slope, 4> boundary_slopes(const KnotIndex& knot);

/// True if any two positions of boundary_slopes coincide.
bool has_coincident_boundary_slopes(const KnotIndex& knot);

bool is_boundary_slope(const KnotIndex& knot, const Slope& slope);

/// Norm-curve coefficients (a_1, a_2, a_3, a_4) on boundary_slopes order.
std::array<Integer, 4> norm_curve_coefficients(const KnotIndex& knot);

SeminormSystem curve_system(const KnotIndex& knot);

/// 2 * sum_j a_j |x q_j - y p_j|. Throws ValidationError for the zero class.
Integer curve_norm(const CurveSpec& spec, const PeripheralClass& gamma);

/// Sum of curve_norm over every curve of the system.
Integer total_norm(const SeminormSystem& system, const PeripheralClass& gamma);

/// Minimal total norm of a (-2, p, q) pretzel knot:
/// |pq| - (|p| + |q|) + |pq - 2(p + q)|.
Integer general_pretzel_S(const Integer& p, const Integer& q);

}  // namespace pretzel
