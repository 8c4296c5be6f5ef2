#include "holonum/selftest.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "holonum/automorphisms.hpp"
#include "holonum/bers.hpp"
#include "holonum/cauchy.hpp"
#include "holonum/dbar.hpp"
#include "holonum/dirichlet.hpp"
#include "holonum/metrics.hpp"
#include "holonum/osgood.hpp"
#include "holonum/quadrature.hpp"
#include "holonum/rng.hpp"
#include "holonum/serialize.hpp"

namespace holonum {

namespace {

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void check(const char* name, bool ok, double value, double tolerance) {
    out << (ok ? "ok   " : "FAIL ") << name << "  value=" << format_double(value)
        << " tolerance=" << format_double(tolerance) << '\n';
    if (!ok) ++failures;
  }
};

}  // namespace

int run_selftest(std::ostream& out) {
  Reporter r{out};
  QuadratureSpec q;

  {  // residue of 1/z on the unit circle
    Contour circle = Contour::circle(0.0, 1.0);
    cplx got = contour_integral([](cplx z) { return 1.0 / z; }, circle, q);
    double err = std::abs(got - cplx(0.0, 2.0 * kPi));
    r.check("contour_residue_2pii", err < 1e-12, err, 1e-12);

    cplx rev = contour_integral([](cplx z) { return 1.0 / z; }, circle.reversed(), q);
    double anti = std::abs(rev + got);
    r.check("contour_orientation_antisymmetry", anti < 1e-12, anti, 1e-12);
  }

  {  // area of the unit disc
    PlanarDomain disc = PlanarDomain::disc(0.0, 1.0);
    cplx a = area_integral([](cplx) { return cplx{1.0}; }, disc, q);
    double err = std::abs(a - kPi);
    r.check("area_of_unit_disc", err < 1e-2, err, 1e-2);
  }

  {  // Stokes identity for u = z conj(z) on the unit disc
    PlanarDomain disc = PlanarDomain::disc(0.0, 1.0);
    Contour circle = Contour::circle(0.0, 1.0);
    cplx lhs = contour_integral([](cplx z) { return z * std::conj(z); }, circle, q);
    cplx rhs = cplx(0.0, 2.0) * area_integral([](cplx z) { return z; }, disc, q);
    double err = std::abs(lhs - rhs);
    r.check("stokes_identity", err < 1e-2, err, 1e-2);
  }

  {  // Cauchy formula reproduces exp
    PlanarDomain disc = PlanarDomain::disc(0.0, 1.0);
    cplx z(0.3, 0.1);
    cplx got = cauchy_eval([](cplx w) { return std::exp(w); }, disc, z, q);
    double err = std::abs(got - std::exp(z));
    r.check("cauchy_reproduces_exp", err < 1e-10, err, 1e-10);
  }

  {  // Pompeiu reconstruction of conj at 0.5
    PlanarDomain disc = PlanarDomain::disc(0.0, 1.0);
    cplx got = pompeiu_eval([](cplx w) { return std::conj(w); }, disc, cplx(0.5, 0.0), q);
    double err = std::abs(got - cplx(0.5, 0.0));
    r.check("pompeiu_reconstructs_conj", err < 1e-2, err, 1e-2);
  }

  {  // transform of the disc indicator
    DbarProblem p = DbarProblem::from_function([](cplx) { return cplx{1.0}; }, 1.0, 256);
    cplx inside = cauchy_transform_point(p, cplx(0.5, 0.0), q);
    cplx outside = cauchy_transform_point(p, cplx(2.0, 0.0), q);
    double err = std::max(std::abs(inside - cplx(0.5, 0.0)), std::abs(outside - cplx(0.5, 0.0)));
    r.check("dbar_disc_indicator", err < 2e-2, err, 2e-2);
  }

  {  // Poisson kernel normalization and mean value
    double acc = 0.0;
    for (int m = 0; m < 256; ++m) acc += poisson_kernel(0.5, 2.0 * kPi * m / 256.0);
    double err = std::abs(acc / 256.0 - 1.0);
    r.check("poisson_kernel_normalization", err < 1e-12, err, 1e-12);

    BoundaryData f = BoundaryData::from_function(
        [](double psi) { return cplx(1.0 + std::cos(psi), 0.0); }, 256);
    double mv = std::abs(poisson_solve(f, 0.0, 0.3) - f.mean());
    r.check("poisson_mean_value", mv < 1e-12, mv, 1e-12);

    HarnackCheck chk = harnack_lower_bound_check(f, 0.5);
    r.check("harnack_lower_bound", chk.ok, chk.lhs - chk.rhs, 0.0);
  }

  {  // metric closed forms at the origin
    Rng rng(7);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      CVec xi{rng.complex_in_box(1.0), rng.complex_in_box(1.0)};
      double ball = metric_length({DomainModel::UnitBall2, MetricKind::Kobayashi,
                                   {cplx{0.0}, cplx{0.0}}, xi});
      double bidisc = metric_length({DomainModel::UnitBidisc, MetricKind::Caratheodory,
                                     {cplx{0.0}, cplx{0.0}}, xi});
      worst = std::max(worst, std::abs(ball - norm2(xi)));
      worst = std::max(worst, std::abs(bidisc - std::max(std::abs(xi[0]), std::abs(xi[1]))));
    }
    r.check("metric_closed_forms", worst < 1e-12, worst, 1e-12);
  }

  {  // distance decreasing through a projection and automorphism equality
    DistanceCheck proj = distance_decreasing_check(
        projection_map(0), {DomainModel::UnitBidisc, MetricKind::Kobayashi,
                            {cplx{0.0}, cplx{0.0}}, {cplx(0.3, 0.0), cplx(0.0, 0.4)}});
    r.check("distance_decreasing_projection", proj.ok && proj.lhs >= proj.rhs,
            proj.lhs - proj.rhs, 0.0);

    BidiscAutomorphism a{cplx(0.3, 0.2), cplx(-0.1, 0.4)};
    DistanceCheck equal = distance_decreasing_check(
        bidisc_automorphism_map(a), {DomainModel::UnitBidisc, MetricKind::Kobayashi,
                                     {cplx(0.2, 0.1), cplx(-0.3, 0.0)},
                                     {cplx(1.0, 0.5), cplx(0.2, -0.7)}});
    double gap = std::abs(equal.lhs - equal.rhs);
    r.check("automorphism_preserves_metric", gap < 1e-8, gap, 1e-8);
  }

  {  // isotropy separation
    IsotropyReport rep = isotropy_abelian_report(64, 11);
    r.check("bidisc_isotropy_abelian", rep.bidisc_max_defect == 0.0, rep.bidisc_max_defect, 0.0);
    r.check("ball_isotropy_witness", rep.ball_defect > 0.1, rep.ball_defect, 0.1);
  }

  {  // Poincare witness for the hand-built midpoint matrix
    CMatrix L(2, 2);
    L.at(0, 0) = -1.0;
    L.at(1, 0) = 1.0;
    L.at(0, 1) = 1.0;
    L.at(1, 1) = 0.0;
    PoincareWitness w = poincare_witness(L);
    double err = std::abs(w.image_norm - std::sqrt(0.5));
    r.check("poincare_midpoint_witness",
            w.branch == WitnessBranch::Midpoint && err < 1e-12, err, 1e-12);
  }

  {  // Bers pullback audit
    AlgebraHom hom = hom_from_map(Poly({cplx{0.0}, cplx{0.0}, cplx{1.0}}));  // z^2
    MorphismAudit audit = morphism_audit([&hom](const Poly& f) { return pullback(hom, f); }, 16, 3);
    bool ok = audit.is_homomorphism && audit.recovered_h.coeff_distance(hom.h) == 0.0;
    r.check("bers_pullback_audit", ok, audit.composition_defect, 1e-10);
  }

  {  // boundedness masks and the dense ball
    const SequenceSpec* power = find_sequence("power");
    FunctionSequence seq{power->member, 32};
    GridField geom = GridField::lattice(cplx(-1.0, -1.0), 2.0, 32,
                                        [](cplx z) { return std::abs(z) <= 1.0; });
    std::vector<BoundednessMask> masks{boundedness_set(seq, geom, 1.0)};
    CoverResult cover = cover_check(masks);
    DenseBall ball = dense_ball_search(masks);
    r.check("osgood_power_cover", cover.covered && ball.radius >= geom.spacing, ball.radius,
            geom.spacing);
  }

  return r.failures;
}

}  // namespace holonum
