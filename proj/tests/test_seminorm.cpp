#include "pretzel/seminorm.hpp"
#include "pretzel/triangle.hpp"

#include <doctest.h>

#include <random>

using namespace pretzel;

namespace {

std::array<Slope, 4> slopes(std::initializer_list<Slope> s) {
  std::array<Slope, 4> out;
  std::copy(s.begin(), s.end(), out.begin());
  return out;
}

std::vector<Integer> coeffs(const CurveSpec& spec) {
  std::vector<Integer> out;
  for (const auto& t : spec.terms) out.push_back(t.coeff);
  return out;
}

Integer total(std::int64_t n, Integer x, Integer y) {
  return total_norm(curve_system(KnotIndex::make(n)), {std::move(x), std::move(y)});
}

}  // namespace

TEST_CASE("boundary slopes") {
  using S = std::initializer_list<Slope>;
  CHECK(boundary_slopes(KnotIndex::make(7)) ==
        slopes(S{integral_slope(0), integral_slope(20), integral_slope(16), make_slope(37, 2)}));
  CHECK(boundary_slopes(KnotIndex::make(9)) ==
        slopes(S{integral_slope(0), integral_slope(24), integral_slope(16), make_slope(67, 3)}));
  CHECK(boundary_slopes(KnotIndex::make(-7)) ==
        slopes(S{integral_slope(0), integral_slope(-8), integral_slope(10), make_slope(-72, 7)}));
  CHECK(boundary_slopes(KnotIndex::make(-1))[3] == integral_slope(0));
  CHECK(has_coincident_boundary_slopes(KnotIndex::make(-1)));
  CHECK(has_coincident_boundary_slopes(KnotIndex::make(-3)));
  CHECK_FALSE(has_coincident_boundary_slopes(KnotIndex::make(-5)));
  CHECK(is_boundary_slope(KnotIndex::make(7), make_slope(37, 2)));
  CHECK_FALSE(is_boundary_slope(KnotIndex::make(7), integral_slope(18)));
}

TEST_CASE("curve systems") {
  const auto s7 = curve_system(KnotIndex::make(7));
  CHECK(coeffs(s7.norm_curve()) == std::vector<Integer>{0, 1, 1, 2});
  CHECK(s7.norm_curve().s == 12);
  CHECK_FALSE(s7.has_r_curve());
  CHECK(s7.S == 12);

  const auto s9 = curve_system(KnotIndex::make(9));
  CHECK(coeffs(s9.norm_curve()) == std::vector<Integer>{0, 1, 1, 2});
  CHECK(s9.norm_curve().s == 16);
  REQUIRE(s9.has_r_curve());
  CHECK(s9.curves[1].kind == CurveKind::r_curve);
  CHECK(s9.curves[1].terms.size() == 1);
  CHECK(s9.curves[1].terms[0].boundary == integral_slope(24));
  CHECK(s9.curves[1].s == 2);
  CHECK(s9.S == 18);

  const auto m3 = curve_system(KnotIndex::make(-3));
  CHECK(coeffs(m3.norm_curve()) == std::vector<Integer>{0, 1, 1, 1});
  CHECK(m3.boundary_slopes[3] == make_slope(-8, 3));
  CHECK(m3.norm_curve().s == 10);
  REQUIRE(m3.has_r_curve());
  CHECK(m3.curves[1].terms[0].boundary == integral_slope(0));
  CHECK(m3.S == 12);

  CHECK(curve_system(KnotIndex::make(-1)).norm_curve().s == 6);
  CHECK_THROWS_AS(curve_system(KnotIndex::make(5, true)), ValidationError);
  CHECK(to_string(CurveKind::r_curve) == "r_curve");
}

TEST_CASE("norm examples") {
  const auto s7 = curve_system(KnotIndex::make(7));
  CHECK(curve_norm(s7.norm_curve(), {1, 0}) == 12);
  CHECK(curve_norm(s7.norm_curve(), {18, 1}) == 12);
  const auto s9 = curve_system(KnotIndex::make(9));
  CHECK(curve_norm(s9.norm_curve(), {21, 1}) == 32);
  CHECK(curve_norm(s9.norm_curve(), {22, 1}) == 20);
  CHECK(curve_norm(s9.curves[1], {22, 1}) == 4);
  CHECK(curve_norm(s9.curves[1], {24, 1}) == 0);
  CHECK(curve_norm(s9.curves[1], {48, 2}) == 0);
  CHECK(total(9, 22, 1) == 24);
  CHECK(total(9, 23, 1) == 26);
  CHECK(total(-7, -10, 1) == 60);
  CHECK_THROWS_AS(curve_norm(s7.norm_curve(), {0, 0}), ValidationError);

  CHECK(general_pretzel_S(3, 7) == 12);
  CHECK(general_pretzel_S(3, -7) == 24);
  CHECK(general_pretzel_S(3, 9) == 18);
}

TEST_CASE("total norm identities over the test range") {
  for (std::int64_t n : hyperbolic_indices(-99, 99)) {
    CAPTURE(n);
    const auto knot = KnotIndex::make(n);
    const auto sys = curve_system(knot);
    const Integer S = 3 * (abs(Integer(n - 2)) - 1);
    CHECK(sys.S == S);
    CHECK(total_norm(sys, {1, 0}) == S);
    CHECK(sys.has_r_curve() == (n % 3 == 0));
    CHECK(sys.norm_curve().s == (n % 3 == 0 ? 3 * abs(Integer(n - 2)) - 5 : S));

    const Integer t4 = total_norm(sys, {2 * n + 4, 1});
    const Integer t5 = total_norm(sys, {2 * n + 5, 1});
    CHECK(t4 == S + 3 * (abs(Integer(n - 6)) - 1));
    CHECK(t5 == S + 4 * (abs(Integer(n - 5)) - 2));
    CHECK(t4 - S == 2 * sl2_jumping_count(JumpFamily::A_2_4, knot));
    CHECK(t5 - S == 2 * sl2_jumping_count(JumpFamily::A_3_5, knot));
    CHECK(general_pretzel_S(3, n) == S);

    int positive = 0;
    for (const auto& t : sys.norm_curve().terms) positive += t.coeff > 0;
    CHECK(positive >= 2);
    for (const auto& c : sys.curves) CHECK(c.s % 2 == 0);
  }
}

TEST_CASE("seminorm properties on random classes") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coord(-200, 200), mult(-9, 9);
  const auto indices = hyperbolic_indices(-99, 99);
  std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
  for (int trial = 0; trial < 4000; ++trial) {
    const auto sys = curve_system(KnotIndex::make(indices[pick(rng)]));
    Integer x = coord(rng), y = coord(rng);
    if (x == 0 && y == 0) x = 1;
    int k = mult(rng);
    if (k == 0) k = 2;
    for (const auto& c : sys.curves) {
      const Integer v = curve_norm(c, {x, y});
      CHECK(v % 2 == 0);
      CHECK(curve_norm(c, {k * x, k * y}) == abs(Integer(k)) * v);
      CHECK(curve_norm(c, {-x, -y}) == v);
      // Minimum over primitive classes sits at the meridian.
      if (gcd(x, y) == 1 && v != 0) CHECK(c.s <= v);
    }
  }
}
