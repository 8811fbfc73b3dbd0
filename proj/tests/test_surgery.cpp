#include "pretzel/seminorm.hpp"
#include "pretzel/surgery.hpp"

#include <doctest.h>

#include <map>

using namespace pretzel;

namespace {

using Summary = std::map<std::string, std::string>;

// "slope" -> "status" or "status(reason)" for every non-excluded verdict and
// every exclusion other than the norm bound.
Summary summarize(const SurgeryReport& report) {
  Summary out;
  for (const auto& v : report.verdicts) {
    if (v.reason == ExclusionReason::norm_exceeds_bound) continue;
    std::string text = to_string(v.status);
    if (v.reason != ExclusionReason::none) text += "(" + to_string(v.reason) + ")";
    out[to_string(v.slope)] = text;
  }
  return out;
}

Summary summarize(std::int64_t n) { return summarize(enumerate_candidates(KnotIndex::make(n))); }

}  // namespace

TEST_CASE("published surgery classifications") {
  CHECK(summarize(7) == Summary{{"1/0", "trivial"},
                                {"17/1", "realized_finite"},
                                {"18/1", "realized_cyclic"},
                                {"19/1", "realized_cyclic"},
                                {"20/1", "excluded(boundary_slope)"},
                                {"37/2", "excluded(boundary_slope)"}});
  CHECK(summarize(9) == Summary{{"1/0", "trivial"},
                                {"21/1", "excluded(odd_dihedral_exclusion)"},
                                {"22/1", "realized_finite"},
                                {"23/1", "realized_finite"}});
  CHECK(summarize(13) == Summary{{"1/0", "trivial"},
                                 {"30/1", "excluded(nonspherical_seifert_base)"},
                                 {"31/1", "excluded(nonspherical_seifert_base)"}});
  CHECK(summarize(-7) == Summary{{"1/0", "trivial"}});

  const auto r1 = enumerate_candidates(KnotIndex::make(-1));
  CHECK(r1.search_scale == Rational(14, 6));
  CHECK(summarize(r1) == Summary{{"1/0", "trivial"}});
}

TEST_CASE("sphericity") {
  CHECK(is_spherical_triple(2, 4, 3));
  CHECK_FALSE(is_spherical_triple(2, 4, 5));
  CHECK(is_spherical_triple(3, 5, 2));
  CHECK_FALSE(is_spherical_triple(2, 3, 6));
}

TEST_CASE("verdict invariants over the test range") {
  for (std::int64_t n : hyperbolic_indices(-99, 99)) {
    CAPTURE(n);
    const auto knot = KnotIndex::make(n);
    const auto sys = curve_system(knot);
    const auto report = enumerate_candidates(knot);
    CHECK(report.s0 == sys.norm_curve().s);

    std::set<std::string> realized;
    for (const auto& v : report.verdicts) {
      CHECK(abs(v.slope.p()) < report.box_p);
      CHECK(v.slope.q() < report.box_q);
      if (v.status == SurgeryStatus::excluded) CHECK(v.reason != ExclusionReason::none);
      else CHECK(v.reason == ExclusionReason::none);
      if (is_realized(v.status)) realized.insert(to_string(v.slope) + ":" + to_string(v.status));
      if (v.status == SurgeryStatus::trivial) CHECK(v.slope == Slope());

      const bool is_candidate = v.status == SurgeryStatus::cyclic_candidate ||
                                v.status == SurgeryStatus::finite_candidate || is_realized(v.status);
      if (is_candidate) {
        for (std::size_t i = 0; i < sys.curves.size(); ++i) {
          const Integer s = sys.curves[i].s;
          CHECK(v.curve_norms[i] <= std::max(2 * s, s + 8));
        }
      }
      if (v.status == SurgeryStatus::cyclic_candidate || v.status == SurgeryStatus::realized_cyclic) {
        for (std::size_t i = 0; i < sys.curves.size(); ++i) CHECK(v.curve_norms[i] == sys.curves[i].s);
      }
    }

    std::set<std::string> expected;
    if (n == 7) expected = {"17/1:realized_finite", "18/1:realized_cyclic", "19/1:realized_cyclic"};
    if (n == 9) expected = {"22/1:realized_finite", "23/1:realized_finite"};
    CHECK(realized == expected);
  }
}

TEST_CASE("search covers the bounded region") {
  // Independent sweep of a box three times larger; every class within the
  // norm-curve bound must show up in the report, and nothing else may.
  for (std::int64_t n : hyperbolic_indices(-41, 41)) {
    CAPTURE(n);
    const auto knot = KnotIndex::make(n);
    const auto sys = curve_system(knot);
    const auto report = enumerate_candidates(knot);
    const Integer s0 = sys.norm_curve().s;
    const Integer bound = std::max(2 * s0, s0 + 8);

    std::set<Slope> reported;
    for (const auto& v : report.verdicts) reported.insert(v.slope);

    std::set<Slope> within;
    const Integer P = 3 * report.box_p, Q = 3 * report.box_q;
    for (Integer q = 0; q < Q; ++q) {
      for (Integer p = -P; p <= P; ++p) {
        if (gcd(p, q) != 1 || (q == 0 && p != 1)) continue;
        if (curve_norm(sys.norm_curve(), {p, q}) <= bound) within.insert(make_slope(p, q));
      }
    }
    CHECK(reported == within);
  }
}

TEST_CASE("reports are sorted and deterministic") {
  const auto a = enumerate_candidates(KnotIndex::make(15));
  const auto b = enumerate_candidates(KnotIndex::make(15));
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    CHECK(a.verdicts[i].slope == b.verdicts[i].slope);
    CHECK(a.verdicts[i].status == b.verdicts[i].status);
    if (i > 0) CHECK(a.verdicts[i - 1].slope < a.verdicts[i].slope);
  }
  CHECK_THROWS_AS(enumerate_candidates(KnotIndex::make(3, true)), ValidationError);
}
