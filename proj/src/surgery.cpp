#include "pretzel/surgery.hpp"

#include "pretzel/polygon.hpp"
#include "pretzel/seminorm.hpp"
#include "pretzel/triangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace pretzel {

namespace {

struct RealizedSurgery {
  std::int64_t n;
  std::int64_t slope;
  SurgeryStatus status;
};

// Known non-trivial finite fillings of the hyperbolic members of the family.
constexpr RealizedSurgery kRealized[] = {
    {7, 17, SurgeryStatus::realized_finite},
    {7, 18, SurgeryStatus::realized_cyclic},
    {7, 19, SurgeryStatus::realized_cyclic},
    {9, 22, SurgeryStatus::realized_finite},
    {9, 23, SurgeryStatus::realized_finite},
};

const RealizedSurgery* find_realized(std::int64_t n, const Slope& slope) {
  if (!slope.is_integral()) return nullptr;
  for (const auto& entry : kRealized) {
    if (entry.n == n && slope.p() == entry.slope) return &entry;
  }
  return nullptr;
}

Integer finite_bound(const Integer& s) { return std::max<Integer>(2 * s, s + 8); }

}  // namespace

std::string to_string(SurgeryStatus status) {
  switch (status) {
    case SurgeryStatus::trivial: return "trivial";
    case SurgeryStatus::cyclic_candidate: return "cyclic_candidate";
    case SurgeryStatus::finite_candidate: return "finite_candidate";
    case SurgeryStatus::realized_cyclic: return "realized_cyclic";
    case SurgeryStatus::realized_finite: return "realized_finite";
    case SurgeryStatus::excluded: return "excluded";
  }
  return "?";
}

std::string to_string(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::none: return "none";
    case ExclusionReason::boundary_slope: return "boundary_slope";
    case ExclusionReason::norm_exceeds_bound: return "norm_exceeds_bound";
    case ExclusionReason::odd_dihedral_exclusion: return "odd_dihedral_exclusion";
    case ExclusionReason::nonspherical_seifert_base: return "nonspherical_seifert_base";
  }
  return "?";
}

bool is_realized(SurgeryStatus status) {
  return status == SurgeryStatus::realized_cyclic || status == SurgeryStatus::realized_finite;
}

bool is_spherical_triple(const Integer& p, const Integer& q, const Integer& r) {
  return is_spherical(TriangleSignature{p, q, r});
}

SurgeryReport enumerate_candidates(const KnotIndex& knot) {
  const SeminormSystem system = curve_system(knot);
  const CurveSpec& norm = system.norm_curve();
  const Integer s0 = norm.s;
  const Integer bound0 = finite_bound(s0);
  const Rational scale(bound0, s0);
  const Integer n = knot.n();

  // The region {||v||_0 <= bound0} is exactly scale * B.
  const RationalPolygon region = fundamental_polygon(knot, scale);
  Rational max_x = 0, max_y = 0;
  for (const auto& v : region.vertices) {
    max_x = std::max<Rational>(max_x, v.x < 0 ? Rational(-v.x) : v.x);
    max_y = std::max<Rational>(max_y, v.y);
  }

  SurgeryReport report{knot, s0, scale, floor(max_x) + 1, floor(max_y) + 1, {}};

  for (Integer q = 0; q < report.box_q; ++q) {
    for (Integer p = -report.box_p + 1; p < report.box_p; ++p) {
      if (q == 0 ? p != 1 : gcd(abs(p), q) != 1) continue;
      const PeripheralClass gamma{p, q};
      if (curve_norm(norm, gamma) > bound0) continue;

      SurgeryVerdict verdict{make_slope(p, q), {}, 0};
      for (const auto& c : system.curves) verdict.curve_norms.push_back(curve_norm(c, gamma));
      verdict.total = total_norm(system, gamma);
      const Slope& slope = verdict.slope;

      bool within_bounds = true;
      bool minimal_everywhere = true;
      for (std::size_t i = 0; i < system.curves.size(); ++i) {
        const Integer& s = system.curves[i].s;
        within_bounds = within_bounds && verdict.curve_norms[i] <= finite_bound(s);
        minimal_everywhere = minimal_everywhere && verdict.curve_norms[i] == s;
      }

      if (slope.is_meridian()) {
        verdict.status = SurgeryStatus::trivial;
      } else if (is_boundary_slope(knot, slope)) {
        verdict.reason = ExclusionReason::boundary_slope;
      } else if (!within_bounds) {
        verdict.reason = ExclusionReason::norm_exceeds_bound;
      } else if (slope.is_integral() && slope.p() % 2 != 0 && verdict.curve_norms[0] == 2 * s0 && s0 >= 8) {
        // Norm exactly 2 s_0 forces a finite filling to be dihedral, which an
        // odd integral slope cannot be.
        verdict.reason = ExclusionReason::odd_dihedral_exclusion;
      } else if (slope.is_integral() && slope.p() == 2 * n + 4 &&
                 !is_spherical_triple(2, 4, abs(n - 6))) {
        verdict.reason = ExclusionReason::nonspherical_seifert_base;
      } else if (slope.is_integral() && slope.p() == 2 * n + 5 &&
                 !is_spherical_triple(3, 5, abs(n - 5) / 2)) {
        verdict.reason = ExclusionReason::nonspherical_seifert_base;
      } else {
        verdict.status = minimal_everywhere ? SurgeryStatus::cyclic_candidate : SurgeryStatus::finite_candidate;
        if (const auto* known = find_realized(knot.n(), slope)) {
          if (known->status == SurgeryStatus::realized_cyclic && !minimal_everywhere) {
            throw std::logic_error("known cyclic filling " + to_string(slope) + " does not have minimal norm");
          }
          verdict.status = known->status;
        }
      }
      report.verdicts.push_back(std::move(verdict));
    }
  }

  std::sort(report.verdicts.begin(), report.verdicts.end(),
            [](const SurgeryVerdict& a, const SurgeryVerdict& b) { return a.slope < b.slope; });
  return report;
}

}  // namespace pretzel
