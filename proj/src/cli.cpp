#include "pretzel/cli.hpp"

#include "pretzel/alexander.hpp"
#include "pretzel/polygon.hpp"
#include "pretzel/seminorm.hpp"
#include "pretzel/surgery.hpp"
#include "pretzel/triangle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

namespace pretzel::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::int64_t n = 0;
  bool allow_torus = false;
  std::string slope;
  bool per_curve = false;
  // Empty means the subcommand default; each subcommand shares this slot.
  std::string format;
  std::string kind = "fundamental";
  std::string scale = "1";
  std::string triangle;
  std::optional<std::int64_t> characters_n;
  std::int64_t n_start = 0;
  std::int64_t n_end = 0;
  unsigned jobs = 0;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json slope_list(const std::array<Slope, 4>& slopes) {
  Json arr = Json::array();
  for (const auto& s : slopes) arr.push_back(to_string(s));
  return arr;
}

std::string cmd_system(const Options& o) {
  const auto system = curve_system(KnotIndex::make(o.n));
  Json curves = Json::array();
  for (const auto& c : system.curves) {
    Json terms = Json::array();
    for (const auto& t : c.terms) terms.push_back({{"slope", to_string(t.boundary)}, {"coeff", integer_json(t.coeff)}});
    curves.push_back({{"kind", to_string(c.kind)}, {"terms", terms}, {"s", integer_json(c.s)}});
  }
  return dump({{"n", o.n},
               {"boundary_slopes", slope_list(system.boundary_slopes)},
               {"curves", curves},
               {"S", integer_json(system.S)}});
}

std::string cmd_norm(const Options& o) {
  const auto system = curve_system(KnotIndex::make(o.n));
  const Slope slope = parse_slope(o.slope);
  const auto gamma = to_class(slope);
  Json out = {{"n", o.n}, {"slope", to_string(slope)}};
  if (o.per_curve) {
    Json per = Json::array();
    for (const auto& c : system.curves) {
      per.push_back({{"kind", to_string(c.kind)}, {"norm", integer_json(curve_norm(c, gamma))}, {"s", integer_json(c.s)}});
    }
    out["per_curve"] = per;
  }
  out["total"] = integer_json(total_norm(system, gamma));
  return dump(out);
}

std::string cmd_alexander(const Options& o) {
  const auto knot = KnotIndex::make(o.n, o.allow_torus);
  const auto delta = alexander_polynomial(knot);
  if (o.format == "text") return to_string(delta) + "\n";
  if (o.format != "json") throw ValidationError("unknown alexander format '" + o.format + "' (expected text or json)");
  Json coeffs = Json::array();
  for (const auto& c : delta.coefficients()) coeffs.push_back(integer_json(c));
  Json roots = Json::array();
  for (auto m : cyclotomic_roots(knot)) roots.push_back(m);
  return dump({{"n", o.n},
               {"class", knot.hyperbolic() ? "hyperbolic" : "torus"},
               {"low_exponent", delta.low_exponent()},
               {"coefficients", coeffs},
               {"text", to_string(delta)},
               {"value_at_minus_one", integer_json(numerator(delta.evaluate(-1)))},
               {"dihedral_characters", integer_json(dihedral_character_count(knot))},
               {"cyclotomic_roots", roots}});
}

Json signature_json(const TriangleSignature& sig) {
  return Json::array({integer_json(sig.p), integer_json(sig.q), integer_json(sig.r)});
}

std::string cmd_characters(const Options& o) {
  if (o.triangle.empty() == !o.characters_n.has_value()) {
    throw ValidationError("characters needs exactly one of --triangle P,Q,R or --n N");
  }
  if (!o.triangle.empty()) {
    const auto sig = parse_signature(o.triangle);
    return dump({{"signature", signature_json(sig)},
                 {"total", integer_json(total_psl2_characters(sig))},
                 {"reducible", integer_json(reducible_psl2_characters(sig))},
                 {"irreducible", integer_json(irreducible_psl2_characters(sig))},
                 {"spherical", is_spherical(sig)}});
  }
  const auto knot = KnotIndex::make(*o.characters_n);
  Json families = Json::array();
  for (auto f : {JumpFamily::A_2_3, JumpFamily::A_2_4, JumpFamily::A_3_5}) {
    const auto b = jumping_breakdown(f, knot);
    families.push_back({{"family", to_string(f)},
                        {"signature", signature_json(b.signature)},
                        {"irreducible_psl2", integer_json(b.irreducible_psl2)},
                        {"dihedral", integer_json(b.dihedral)},
                        {"irreducible_lifts", integer_json(b.irreducible_lifts)},
                        {"reducible_jumps", integer_json(b.reducible_jumps)},
                        {"sl2_jumping_points", integer_json(b.total)}});
  }
  return dump({{"n", *o.characters_n}, {"families", families}});
}

std::string cmd_polygon(const Options& o) {
  const auto knot = KnotIndex::make(o.n);
  const auto format = parse_polygon_format(o.format);
  Rational scale;
  try {
    scale = parse_rational(o.scale);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("bad --scale: ") + e.what());
  }
  const std::string caption = o.kind + " polygon of K(" + std::to_string(o.n) + "), scale " + to_fraction_string(scale);
  if (o.kind == "fundamental") {
    const auto b = fundamental_polygon(knot, scale);
    if (format != PolygonFormat::json) return emit(b, format, caption);
    Json out = {{"n", o.n}, {"kind", o.kind}, {"scale", to_fraction_string(scale)}};
    out["vertices"] = to_json(b)["vertices"];
    return dump(out);
  }
  if (o.kind == "newton") {
    if (scale != 1) throw ValidationError("--scale applies to the fundamental polygon only");
    const auto N = newton_polygon(knot);
    if (format != PolygonFormat::json) return emit(N, format, caption);
    Json out = {{"n", o.n}, {"kind", o.kind}};
    out["vertices"] = to_json(N)["vertices"];
    return dump(out);
  }
  throw ValidationError("unknown polygon kind '" + o.kind + "' (expected fundamental or newton)");
}

std::string join_norms(const std::vector<Integer>& norms) {
  std::string out;
  for (std::size_t i = 0; i < norms.size(); ++i) out += (i ? ";" : "") + norms[i].str();
  return out;
}

std::string cmd_surgeries(const Options& o) {
  const auto report = enumerate_candidates(KnotIndex::make(o.n));
  if (o.format == "csv") {
    std::string out = "slope,curve_norms,total,status,reason\n";
    for (const auto& v : report.verdicts) {
      out += to_string(v.slope) + "," + join_norms(v.curve_norms) + "," + v.total.str() + "," +
             to_string(v.status) + "," + to_string(v.reason) + "\n";
    }
    return out;
  }
  if (o.format != "json") throw ValidationError("unknown surgeries format '" + o.format + "' (expected json or csv)");
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    Json norms = Json::array();
    for (const auto& x : v.curve_norms) norms.push_back(integer_json(x));
    verdicts.push_back({{"slope", to_string(v.slope)},
                        {"curve_norms", norms},
                        {"total", integer_json(v.total)},
                        {"status", to_string(v.status)},
                        {"reason", to_string(v.reason)}});
  }
  return dump({{"n", o.n},
               {"s0", integer_json(report.s0)},
               {"search_scale", to_fraction_string(report.search_scale)},
               {"box", {{"p", integer_json(report.box_p)}, {"q", integer_json(report.box_q)}}},
               {"verdicts", verdicts}});
}

struct SweepRow {
  std::int64_t n;
  Integer S, s0, s1, norm_2n4, norm_2n5, dihedral;
  std::string cyclotomic;
  std::string candidates;
};

SweepRow sweep_row(std::int64_t n) {
  const auto knot = KnotIndex::make(n);
  const auto system = curve_system(knot);
  SweepRow row{n, system.S, system.norm_curve().s, system.has_r_curve() ? system.curves[1].s : Integer(0),
               total_norm(system, {2 * Integer(n) + 4, 1}), total_norm(system, {2 * Integer(n) + 5, 1}),
               dihedral_character_count(knot), "", ""};
  for (auto m : cyclotomic_roots(knot)) row.cyclotomic += (row.cyclotomic.empty() ? "" : ";") + std::to_string(m);
  for (const auto& v : enumerate_candidates(knot).verdicts) {
    if (v.status == SurgeryStatus::trivial || v.status == SurgeryStatus::excluded) continue;
    row.candidates += (row.candidates.empty() ? "" : ";") + to_string(v.slope) + ":" + to_string(v.status);
  }
  return row;
}

std::string cmd_sweep(const Options& o) {
  if (o.n_start > o.n_end) throw ValidationError("--n-start must not exceed --n-end");
  if (o.n_start < -kMaxAbsN || o.n_end > kMaxAbsN) throw ValidationError("sweep range out of bounds");
  const auto indices = hyperbolic_indices(o.n_start, o.n_end);
  std::vector<std::optional<SweepRow>> rows(indices.size());
  std::vector<std::string> errors(indices.size());

  unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(indices.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < indices.size();) {
      try {
        rows[k] = sweep_row(indices[k]);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }

  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r->n},
                     {"S", integer_json(r->S)},
                     {"s0", integer_json(r->s0)},
                     {"s1", integer_json(r->s1)},
                     {"total_norm_2n4", integer_json(r->norm_2n4)},
                     {"total_norm_2n5", integer_json(r->norm_2n5)},
                     {"dihedral", integer_json(r->dihedral)},
                     {"cyclotomic_roots", r->cyclotomic},
                     {"candidates", r->candidates}});
    }
    return dump(arr);
  }
  if (o.format != "csv") throw ValidationError("unknown sweep format '" + o.format + "' (expected csv or json)");
  std::string out = "n,S,s0,s1,total_norm_2n4,total_norm_2n5,dihedral,cyclotomic_roots,candidates\n";
  for (const auto& r : rows) {
    out += std::to_string(r->n) + "," + r->S.str() + "," + r->s0.str() + "," + r->s1.str() + "," +
           r->norm_2n4.str() + "," + r->norm_2n5.str() + "," + r->dihedral.str() + "," + r->cyclotomic + "," +
           r->candidates + "\n";
  }
  return out;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Culler-Shalen seminorms, polygons and surgeries of the (-2,3,n) pretzel knots", "pretzel"};
  app.require_subcommand(1);
  Options o;

  auto* system = app.add_subcommand("system", "Boundary slopes, curves and minimal norms");
  system->add_option("--n", o.n, "Odd pretzel parameter")->required();

  auto* norm = app.add_subcommand("norm", "Seminorms of a slope");
  norm->add_option("--n", o.n, "Odd pretzel parameter")->required();
  norm->add_option("--slope", o.slope, "Slope P/Q")->required();
  norm->add_flag("--per-curve", o.per_curve, "Report every curve separately");

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial and cyclotomic roots");
  alexander->add_option("--n", o.n, "Odd pretzel parameter")->required();
  alexander->add_flag("--allow-torus", o.allow_torus, "Accept n = 1, 3, 5 (informational)");
  alexander->add_option("--format", o.format, "text or json (default text)");

  auto* characters = app.add_subcommand("characters", "Triangle-group character counts");
  characters->add_option("--triangle", o.triangle, "Signature P,Q,R");
  characters->add_option("--n", o.characters_n, "Jumping-point census for K(n)");

  auto* polygon = app.add_subcommand("polygon", "Fundamental or Newton polygon");
  polygon->add_option("--n", o.n, "Odd pretzel parameter")->required();
  polygon->add_option("--kind", o.kind, "fundamental or newton")->default_val("fundamental");
  polygon->add_option("--format", o.format, "svg, csv or json (default json)");
  polygon->add_option("--scale", o.scale, "Scale factor for B (e.g. 2 or 14/6)")->default_val("1");

  auto* surgeries = app.add_subcommand("surgeries", "Cyclic/finite surgery candidates");
  surgeries->add_option("--n", o.n, "Odd pretzel parameter")->required();
  surgeries->add_option("--format", o.format, "json or csv (default json)");

  auto* sweep = app.add_subcommand("sweep", "Summary table over a range of n");
  sweep->add_option("--n-start", o.n_start, "First n")->required();
  sweep->add_option("--n-end", o.n_end, "Last n")->required();
  sweep->add_option("--jobs", o.jobs, "Worker threads (0 = hardware concurrency)")->default_val(0);
  sweep->add_option("--format", o.format, "csv or json (default csv)");

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }

  if (o.format.empty()) {
    if (alexander->parsed()) o.format = "text";
    else if (sweep->parsed()) o.format = "csv";
    else o.format = "json";
  }

  try {
    std::string text;
    if (system->parsed()) text = cmd_system(o);
    else if (norm->parsed()) text = cmd_norm(o);
    else if (alexander->parsed()) text = cmd_alexander(o);
    else if (characters->parsed()) text = cmd_characters(o);
    else if (polygon->parsed()) text = cmd_polygon(o);
    else if (surgeries->parsed()) text = cmd_surgeries(o);
    else if (sweep->parsed()) text = cmd_sweep(o);
    out << text;
  } catch (const std::invalid_argument& e) {
    // ValidationError and slope/rational parse failures.
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kOk;
}

}  // namespace pretzel::cli
