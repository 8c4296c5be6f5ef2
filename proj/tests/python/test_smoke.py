"""Smoke tests for the python bindings."""

import cmath
import math

import pytest

import holonum as hn


def test_version():
    assert hn.__version__


def test_poisson_kernel_values():
    assert hn.poisson_kernel(0.0, 1.7) == pytest.approx(1.0)
    assert hn.poisson_kernel(0.5, 0.0) == pytest.approx(3.0)
    assert hn.poisson_kernel(0.5, math.pi) == pytest.approx(1.0 / 3.0)
    with pytest.raises(hn.NumericError):
        hn.poisson_kernel(1.0, 0.0)


def test_poisson_solve_harmonic_extension():
    data = hn.BoundaryData.from_function(lambda psi: math.cos(psi), 256)
    for r, theta in [(0.0, 0.3), (0.5, 1.1), (0.85, 2.9)]:
        assert hn.poisson_solve(data, r, theta) == pytest.approx(r * math.cos(theta), abs=1e-10)
    lhs, rhs, ok = hn.harnack_lower_bound_check(
        hn.BoundaryData.from_function(lambda psi: 1.0 + math.cos(psi), 256), 0.5
    )
    assert ok and lhs >= rhs


def test_contour_and_cauchy():
    circle = hn.Contour.circle(0j, 1.0)
    res = hn.contour_integral(lambda z: 1.0 / z, circle)
    assert abs(res - 2j * math.pi) < 1e-12

    disc = hn.PlanarDomain.disc(0j, 1.0)
    z = 0.3 + 0.1j
    assert abs(hn.cauchy_eval(lambda w: cmath.exp(w), disc, z) - cmath.exp(z)) < 1e-10
    assert abs(hn.pompeiu_eval(lambda w: w.conjugate(), disc, 0.5 + 0j) - 0.5) < 1e-2


def test_wirtinger():
    dz, dzbar = hn.wirtinger(lambda z: z * z.conjugate(), 1 + 1j)
    assert dz == pytest.approx(1 - 1j, abs=1e-6)
    assert dzbar == pytest.approx(1 + 1j, abs=1e-6)


def test_dbar_transform_of_disc_indicator():
    p = hn.DbarProblem.from_function(lambda z: 1.0 + 0j, 1.0, 128)
    inside, outside = hn.cauchy_transform(p, [0.5 + 0j, 2.0 + 0j])
    assert abs(inside - 0.5) < 2e-2
    assert abs(outside - 0.5) < 1e-2
    assert hn.boundedness_bound(p) == pytest.approx(4.0)

    field = hn.cauchy_transform_grid(p)
    assert hn.dbar_residual(field, p.alpha) < 0.2  # indicator jump is excluded by margin


def test_gridfield_json_roundtrip():
    g = hn.GridField.sample(-1 - 1j, 2.0, 16, lambda z: z * z, lambda z: abs(z) <= 1.0)
    back = hn.GridField.from_json(g.to_json())
    assert back.width == g.width
    assert back.value(5, 7) == g.value(5, 7)


def test_metric_closed_forms():
    assert hn.metric_length("bidisc", "kobayashi", [0j, 0j], [0.3, 0.4j]) == pytest.approx(0.4)
    assert hn.metric_length("ball", "caratheodory", [0j, 0j], [0.6, 0.7]) == pytest.approx(
        math.hypot(0.6, 0.7)
    )
    assert hn.metric_length("disc", "kobayashi", [0.5 + 0j], [1.0]) == pytest.approx(4.0 / 3.0)
    with pytest.raises(hn.NumericError):
        hn.metric_length("ball", "kobayashi", [0.1 + 0j, 0j], [1.0, 0j])
    assert hn.indicatrix_membership("bidisc", "kobayashi", [0.99, 0.99])
    assert not hn.indicatrix_membership("ball", "kobayashi", [0.99, 0.99])


def test_distance_decreasing():
    lhs, rhs, ok = hn.distance_decreasing_check(
        hn.projection_map(0), "bidisc", "kobayashi", [0j, 0j], [0.3, 0.4]
    )
    assert ok and lhs == pytest.approx(0.4) and rhs == pytest.approx(0.3)

    auto = hn.bidisc_automorphism_map(0.3 + 0.2j, -0.1 + 0.4j)
    lhs, rhs, ok = hn.distance_decreasing_check(
        auto, "bidisc", "kobayashi", [0.2 + 0j, 0.1 + 0j], [1.0, 0.5j]
    )
    assert ok and abs(lhs - rhs) < 1e-8


def test_automorphisms_and_witness():
    w1, w2 = hn.apply_bidisc_automorphism(0.5 + 0j, 0j, 0.0, 0.0, 0.5 + 0j, 0.3 + 0j)
    assert abs(w1) < 1e-14 and w2 == pytest.approx(0.3 + 0j)

    assert hn.commutator_defect_rotations(0.3, 1.2, 2.1, 0.7) == 0.0
    assert hn.commutator_defect_unitaries([[0, 1], [1, 0]], [[1, 0], [0, -1]]) == pytest.approx(2.0)

    w = hn.poincare_witness([[-1, 1], [1, 0]])
    assert w["branch"] == "midpoint"
    assert w["image_norm"] == pytest.approx(math.sqrt(0.5))

    assert hn.strict_convexity_check(1, 0, 0, 1) == pytest.approx(math.sqrt(0.5))


def test_polynomials():
    p = hn.Poly([1, 0, 1])  # z^2 + 1
    assert p.evaluate(2.0) == 5.0
    assert p.evaluate(2j) == -3.0

    value, quotient = hn.divide_at_point(hn.Poly([0, 0, 1]), 1.0)
    assert value == 1.0
    assert quotient.coefficients == [(1 + 0j), (1 + 0j)]

    composed = hn.compose(hn.Poly([1, 1]), hn.Poly([0, 0, 1]))
    assert composed.coefficients == [(1 + 0j), 0j, (1 + 0j)]

    c, consistent, defect = hn.character_point([1, 2j, -4, -8j])
    assert consistent and c == 2j and defect < 1e-12

    audit = hn.morphism_audit(lambda f: hn.pullback(hn.Poly([0, 0, 1]), f), 16, 3)
    assert audit["is_homomorphism"]
    assert audit["recovered_h"].coefficients == [0j, 0j, (1 + 0j)]


def test_osgood_machinery():
    geom = hn.GridField.lattice(-1 - 1j, 2.0, 24, lambda z: abs(z) <= 1.0)
    mask = hn.boundedness_set(lambda j, z: z**j, 16, geom, 1.0)
    covered, uncovered = hn.cover_check([mask])
    assert covered and not uncovered
    k, center, radius = hn.dense_ball_search([mask])
    assert k == 1.0 and radius >= mask.spacing
    resid = hn.limit_holomorphy_residual(
        lambda j, z: sum(z**m / math.factorial(m) for m in range(j + 1)), 20, 0j, 0.5
    )
    assert resid < 1e-8


def test_selftest():
    failures, report = hn.selftest()
    assert failures == 0
    assert "ok" in report
