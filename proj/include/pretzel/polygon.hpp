#pragma once

// Fundamental polygon B = {v : ||v||_0 <= s_0} of the norm curve and the
// Newton polygon N of the A-polynomial, realized as the zonotope dual to B.

#include "pretzel/integer.hpp"
#include "pretzel/knot.hpp"
#include "pretzel/slopes.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

namespace pretzel {

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct LatticePoint {
  Integer i;
  Integer j;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Convex polygon with exact rational vertices, counterclockwise from the
/// lexicographically smallest vertex.
struct RationalPolygon {
  std::vector<RationalPoint> vertices;
};

/// Convex lattice polygon, counterclockwise from the lexicographically
/// smallest vertex.
struct LatticePolygon {
  std::vector<LatticePoint> vertices;
};

/// Strictly convex hull, counterclockwise from the lexicographically
/// smallest point. Collinear and duplicate points are dropped.
RationalPolygon convex_hull(std::vector<RationalPoint> points);
LatticePolygon convex_hull(std::vector<LatticePoint> points);

/// Fundamental polygon scaled by `scale` (scale = 2 gives 2B). Vertices sit at
/// (s_0 / ||beta||_0) * beta and its negative for every boundary slope beta
/// carrying a positive norm-curve coefficient.
RationalPolygon fundamental_polygon(const KnotIndex& knot, const Rational& scale = 1);

/// Zonotope sum of the segments [0, a_j (p_j, q_j)] over the norm-curve terms,
/// in (i, j) = (l-exponent, m-exponent) coordinates, translated so that
/// min i = min j = 0.
LatticePolygon newton_polygon(const KnotIndex& knot);

/// Lattice width in the direction of lines of slope p/q in the (i, j) plane:
/// max - min of p*i - q*j over N.
Integer width(const LatticePolygon& polygon, const Slope& direction);

RationalPolygon scaled(const RationalPolygon& polygon, const Rational& factor);

/// Closed containment test (boundary counts as inside).
bool contains(const RationalPolygon& polygon, const RationalPoint& point);
bool strictly_contains(const RationalPolygon& polygon, const RationalPoint& point);

bool is_strictly_convex(const RationalPolygon& polygon);
bool is_strictly_convex(const LatticePolygon& polygon);

/// -P = P.
bool is_origin_symmetric(const RationalPolygon& polygon);
/// Invariant under (i, j) -> (i_max + i_min - i, j_max + j_min - j).
bool is_centrally_symmetric(const LatticePolygon& polygon);

/// Slopes of the edges, each edge vector (di, dj) read as the slope di/dj.
std::set<Slope> edge_slopes(const RationalPolygon& polygon);
std::set<Slope> edge_slopes(const LatticePolygon& polygon);

/// Slopes of the lines through pairs of antipodal vertices.
std::set<Slope> antipodal_slopes(const RationalPolygon& polygon);
std::set<Slope> antipodal_slopes(const LatticePolygon& polygon);

enum class PolygonFormat { svg, csv, json };

/// Throws ValidationError on an unknown name.
PolygonFormat parse_polygon_format(const std::string& text);

/// Deterministic serialization. CSV: one "x,y" line per vertex (rationals as
/// "num/den"). JSON: {"vertices": [[x, y], ...]}. SVG: one closed path; the
/// caption goes in a header comment together with the exact vertex list.
std::string emit(const RationalPolygon& polygon, PolygonFormat format, const std::string& caption = "");
std::string emit(const LatticePolygon& polygon, PolygonFormat format, const std::string& caption = "");

nlohmann::ordered_json to_json(const RationalPolygon& polygon);
nlohmann::ordered_json to_json(const LatticePolygon& polygon);

/// JSON value for an Integer: a number when it fits in 64 bits, else a string.
nlohmann::ordered_json integer_json(const Integer& value);

}  // namespace pretzel
