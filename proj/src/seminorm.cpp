#include "pretzel/seminorm.hpp"

#include <algorithm>

namespace pretzel {

std::string to_string(CurveKind kind) {
  return kind == CurveKind::norm_curve ? "norm_curve" : "r_curve";
}

std::array<Slope, 4> boundary_slopes(const KnotIndex& knot) {
  knot.require_hyperbolic();
  const Integer n = knot.n();
  if (n >= 7) {
    return {integral_slope(0), integral_slope(2 * n + 6), integral_slope(16),
            make_slope(n * n - n - 5, (n - 3) / 2)};
  }
  return {integral_slope(0), integral_slope(2 * n + 6), integral_slope(10),
          make_slope(2 * (n + 1) * (n + 1), n)};
}

bool has_coincident_boundary_slopes(const KnotIndex& knot) {
  auto slopes = boundary_slopes(knot);
  std::sort(slopes.begin(), slopes.end());
  return std::adjacent_find(slopes.begin(), slopes.end()) != slopes.end();
}

bool is_boundary_slope(const KnotIndex& knot, const Slope& slope) {
  auto slopes = boundary_slopes(knot);
  return std::find(slopes.begin(), slopes.end(), slope) != slopes.end();
}

std::array<Integer, 4> norm_curve_coefficients(const KnotIndex& knot) {
  knot.require_hyperbolic();
  const Integer n = knot.n();
  const bool divisible = n % 3 == 0;
  if (n >= 7) return {0, divisible ? (n - 7) / 2 : (n - 5) / 2, 1, 2};
  return {0, divisible ? -(n + 1) / 2 : (1 - n) / 2, 1, 1};
}

namespace {

CurveSpec make_curve(CurveKind kind, std::vector<CurveTerm> terms) {
  CurveSpec spec{kind, std::move(terms), 0};
  spec.s = curve_norm(spec, {1, 0});
  return spec;
}

}  // namespace

SeminormSystem curve_system(const KnotIndex& knot) {
  knot.require_hyperbolic();
  const auto slopes = boundary_slopes(knot);
  const auto coeffs = norm_curve_coefficients(knot);

  std::vector<CurveTerm> terms;
  for (std::size_t j = 0; j < slopes.size(); ++j) terms.push_back({slopes[j], coeffs[j]});

  SeminormSystem system{knot, slopes, {}, 0};
  system.curves.push_back(make_curve(CurveKind::norm_curve, std::move(terms)));
  if (knot.n() % 3 == 0) {
    // ||gamma||_1 = s_1 Delta(gamma, 2n+6) with s_1 = 2.
    system.curves.push_back(make_curve(CurveKind::r_curve, {{integral_slope(2 * Integer(knot.n()) + 6), 1}}));
  }
  for (const auto& c : system.curves) system.S += c.s;
  return system;
}

Integer curve_norm(const CurveSpec& spec, const PeripheralClass& gamma) {
  if (gamma.x == 0 && gamma.y == 0) throw ValidationError("the zero class has no slope");
  Integer sum = 0;
  for (const auto& term : spec.terms) {
    sum += term.coeff * abs(gamma.x * term.boundary.q() - gamma.y * term.boundary.p());
  }
  return 2 * sum;
}

Integer total_norm(const SeminormSystem& system, const PeripheralClass& gamma) {
  Integer total = 0;
  for (const auto& c : system.curves) total += curve_norm(c, gamma);
  return total;
}

Integer general_pretzel_S(const Integer& p, const Integer& q) {
  return abs(p * q) - (abs(p) + abs(q)) + abs(p * q - 2 * (p + q));
}

}  // namespace pretzel
