#include "pretzel/polygon.hpp"

#include "pretzel/seminorm.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <type_traits>

namespace pretzel {

namespace {

// Coordinate access shared by the rational and lattice code paths.
const Rational& cx(const RationalPoint& p) { return p.x; }
const Rational& cy(const RationalPoint& p) { return p.y; }
const Integer& cx(const LatticePoint& p) { return p.i; }
const Integer& cy(const LatticePoint& p) { return p.j; }

template <class Point>
auto cross(const Point& o, const Point& a, const Point& b) {
  using Scalar = std::remove_cvref_t<decltype(cx(o))>;
  return Scalar((cx(a) - cx(o)) * (cy(b) - cy(o)) - (cy(a) - cy(o)) * (cx(b) - cx(o)));
}

template <class Point>
bool lex_less(const Point& a, const Point& b) {
  return cx(a) != cx(b) ? cx(a) < cx(b) : cy(a) < cy(b);
}

// Andrew's monotone chain; output starts at the lexicographic minimum and
// runs counterclockwise.
template <class Point>
std::vector<Point> hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less<Point>);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> out(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(out[k - 2], out[k - 1], p) <= 0) --k;
    out[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(out[k - 2], out[k - 1], pts[i]) <= 0) --k;
    out[k++] = pts[i];
  }
  out.resize(k - 1);
  return out;
}

template <class Point>
bool strictly_convex(const std::vector<Point>& v) {
  if (v.size() < 3) return false;
  for (std::size_t a = 0; a < v.size(); ++a) {
    const auto& o = v[a];
    const auto& p = v[(a + 1) % v.size()];
    const auto& q = v[(a + 2) % v.size()];
    if (cross(o, p, q) <= 0) return false;
  }
  return true;
}

Slope slope_of(const Integer& dx, const Integer& dy) { return make_slope(dx, dy); }

Slope slope_of(const Rational& dx, const Rational& dy) {
  // Clear denominators; make_slope divides out the gcd.
  Integer l = denominator(dx) * denominator(dy);
  return make_slope(numerator(dx * l), numerator(dy * l));
}

template <class Point>
std::set<Slope> edge_slopes_of(const std::vector<Point>& v) {
  std::set<Slope> out;
  for (std::size_t a = 0; a < v.size(); ++a) {
    const auto& p = v[a];
    const auto& q = v[(a + 1) % v.size()];
    out.insert(slope_of(cx(q) - cx(p), cy(q) - cy(p)));
  }
  return out;
}

// In a centrally symmetric polygon with 2k vertices listed cyclically, vertex
// a is antipodal to vertex a + k.
template <class Point>
std::set<Slope> antipodal_slopes_of(const std::vector<Point>& v) {
  std::set<Slope> out;
  const std::size_t half = v.size() / 2;
  for (std::size_t a = 0; a < half; ++a) {
    const auto& p = v[a];
    const auto& q = v[a + half];
    out.insert(slope_of(cx(q) - cx(p), cy(q) - cy(p)));
  }
  return out;
}

std::string coord(const Rational& r) { return to_fraction_string(r); }
std::string coord(const Integer& i) { return i.str(); }

nlohmann::ordered_json coord_json(const Rational& r) { return to_fraction_string(r); }
nlohmann::ordered_json coord_json(const Integer& i) { return integer_json(i); }

template <class Point>
std::string emit_csv(const std::vector<Point>& v) {
  std::string out;
  for (const auto& p : v) out += coord(cx(p)) + "," + coord(cy(p)) + "\n";
  return out;
}

template <class Point>
std::string emit_svg(const std::vector<Point>& v, const std::string& caption) {
  // SVG y grows downward, so the path uses -y.
  Rational min_x = cx(v.front()), max_x = min_x, min_y = cy(v.front()), max_y = min_y;
  for (const auto& p : v) {
    min_x = std::min<Rational>(min_x, cx(p));
    max_x = std::max<Rational>(max_x, cx(p));
    min_y = std::min<Rational>(min_y, cy(p));
    max_y = std::max<Rational>(max_y, cy(p));
  }
  Integer left = floor(min_x) - 1;
  Integer top = floor(Rational(-max_y)) - 1;
  Integer w = ceil(max_x) + 1 - left;
  Integer h = ceil(Rational(-min_y)) + 1 - top;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"" << left << " "
      << top << " " << w << " " << h << "\" preserveAspectRatio=\"none\">\n";
  out << "<!-- " << (caption.empty() ? "polygon" : caption) << "; vertices:";
  for (const auto& p : v) out << " (" << coord(cx(p)) << "," << coord(cy(p)) << ")";
  out << " -->\n";
  out << "<path d=\"";
  for (std::size_t a = 0; a < v.size(); ++a) {
    out << (a == 0 ? "M " : " L ") << to_decimal_string(Rational(cx(v[a])), 6) << " "
        << to_decimal_string(Rational(-cy(v[a])), 6);
  }
  out << " Z\" fill=\"none\" stroke=\"black\" vector-effect=\"non-scaling-stroke\"/>\n";
  out << "</svg>\n";
  return out.str();
}

template <class Point>
nlohmann::ordered_json vertices_json(const std::vector<Point>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : v) arr.push_back({coord_json(cx(p)), coord_json(cy(p))});
  return {{"vertices", arr}};
}

template <class Polygon>
std::string emit_any(const Polygon& polygon, PolygonFormat format, const std::string& caption) {
  if (polygon.vertices.size() < 3) throw ValidationError("cannot emit a degenerate polygon");
  switch (format) {
    case PolygonFormat::csv: return emit_csv(polygon.vertices);
    case PolygonFormat::json: return to_json(polygon).dump(2) + "\n";
    case PolygonFormat::svg: return emit_svg(polygon.vertices, caption);
  }
  return {};
}

}  // namespace

RationalPolygon convex_hull(std::vector<RationalPoint> points) { return {hull(std::move(points))}; }
LatticePolygon convex_hull(std::vector<LatticePoint> points) { return {hull(std::move(points))}; }

RationalPolygon fundamental_polygon(const KnotIndex& knot, const Rational& scale) {
  if (scale <= 0) throw ValidationError("polygon scale must be positive");
  const SeminormSystem system = curve_system(knot);
  const CurveSpec& norm = system.norm_curve();

  std::map<Slope, Integer> weight;
  for (const auto& term : norm.terms) weight[term.boundary] += term.coeff;

  std::vector<RationalPoint> points;
  for (const auto& [beta, a] : weight) {
    if (a <= 0) continue;
    Rational t = scale * Rational(norm.s, curve_norm(norm, to_class(beta)));
    RationalPoint v{t * Rational(beta.p()), t * Rational(beta.q())};
    points.push_back(v);
    points.push_back({-v.x, -v.y});
  }
  return convex_hull(std::move(points));
}

LatticePolygon newton_polygon(const KnotIndex& knot) {
  const SeminormSystem system = curve_system(knot);
  std::vector<LatticePoint> sums{{0, 0}};
  for (const auto& term : system.norm_curve().terms) {
    if (term.coeff <= 0) continue;
    const Integer di = term.coeff * term.boundary.p();
    const Integer dj = term.coeff * term.boundary.q();
    const std::size_t count = sums.size();
    for (std::size_t k = 0; k < count; ++k) sums.push_back({sums[k].i + di, sums[k].j + dj});
  }
  LatticePolygon polygon = convex_hull(std::move(sums));
  Integer min_i = polygon.vertices.front().i, min_j = polygon.vertices.front().j;
  for (const auto& v : polygon.vertices) {
    min_i = std::min(min_i, v.i);
    min_j = std::min(min_j, v.j);
  }
  for (auto& v : polygon.vertices) {
    v.i -= min_i;
    v.j -= min_j;
  }
  return polygon;
}

Integer width(const LatticePolygon& polygon, const Slope& direction) {
  if (polygon.vertices.empty()) return 0;
  auto level = [&](const LatticePoint& v) { return Integer(direction.p() * v.i - direction.q() * v.j); };
  Integer lo = level(polygon.vertices.front()), hi = lo;
  for (const auto& v : polygon.vertices) {
    Integer f = level(v);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  return hi - lo;
}

RationalPolygon scaled(const RationalPolygon& polygon, const Rational& factor) {
  RationalPolygon out;
  for (const auto& v : polygon.vertices) out.vertices.push_back({v.x * factor, v.y * factor});
  if (factor < 0) return convex_hull(std::move(out.vertices));
  return out;
}

bool contains(const RationalPolygon& polygon, const RationalPoint& point) {
  const auto& v = polygon.vertices;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (cross(v[a], v[(a + 1) % v.size()], point) < 0) return false;
  }
  return !v.empty();
}

bool strictly_contains(const RationalPolygon& polygon, const RationalPoint& point) {
  const auto& v = polygon.vertices;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (cross(v[a], v[(a + 1) % v.size()], point) <= 0) return false;
  }
  return !v.empty();
}

bool is_strictly_convex(const RationalPolygon& polygon) { return strictly_convex(polygon.vertices); }
bool is_strictly_convex(const LatticePolygon& polygon) { return strictly_convex(polygon.vertices); }

bool is_origin_symmetric(const RationalPolygon& polygon) {
  for (const auto& v : polygon.vertices) {
    RationalPoint neg{-v.x, -v.y};
    if (std::find(polygon.vertices.begin(), polygon.vertices.end(), neg) == polygon.vertices.end()) return false;
  }
  return true;
}

bool is_centrally_symmetric(const LatticePolygon& polygon) {
  if (polygon.vertices.empty()) return true;
  Integer min_i = polygon.vertices.front().i, max_i = min_i;
  Integer min_j = polygon.vertices.front().j, max_j = min_j;
  for (const auto& v : polygon.vertices) {
    min_i = std::min(min_i, v.i);
    max_i = std::max(max_i, v.i);
    min_j = std::min(min_j, v.j);
    max_j = std::max(max_j, v.j);
  }
  for (const auto& v : polygon.vertices) {
    LatticePoint image{max_i + min_i - v.i, max_j + min_j - v.j};
    if (std::find(polygon.vertices.begin(), polygon.vertices.end(), image) == polygon.vertices.end()) return false;
  }
  return true;
}

std::set<Slope> edge_slopes(const RationalPolygon& polygon) { return edge_slopes_of(polygon.vertices); }
std::set<Slope> edge_slopes(const LatticePolygon& polygon) { return edge_slopes_of(polygon.vertices); }
std::set<Slope> antipodal_slopes(const RationalPolygon& polygon) { return antipodal_slopes_of(polygon.vertices); }
std::set<Slope> antipodal_slopes(const LatticePolygon& polygon) { return antipodal_slopes_of(polygon.vertices); }

PolygonFormat parse_polygon_format(const std::string& text) {
  if (text == "svg") return PolygonFormat::svg;
  if (text == "csv") return PolygonFormat::csv;
  if (text == "json") return PolygonFormat::json;
  throw ValidationError("unknown polygon format '" + text + "' (expected svg, csv or json)");
}

std::string emit(const RationalPolygon& polygon, PolygonFormat format, const std::string& caption) {
  return emit_any(polygon, format, caption);
}

std::string emit(const LatticePolygon& polygon, PolygonFormat format, const std::string& caption) {
  return emit_any(polygon, format, caption);
}

nlohmann::ordered_json to_json(const RationalPolygon& polygon) { return vertices_json(polygon.vertices); }
nlohmann::ordered_json to_json(const LatticePolygon& polygon) { return vertices_json(polygon.vertices); }

nlohmann::ordered_json integer_json(const Integer& value) {
  if (fits_int64(value)) return static_cast<std::int64_t>(value);
  return value.str();
}

}  // namespace pretzel
