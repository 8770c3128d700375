import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nullumbilics.errors import DegeneracyError
from nullumbilics.liecartan import (D1, D2, D3, DEGENERATE_CUBIC, NODE,
                                    NOT_TRANSVERSAL, SADDLE, BdeOneJet,
                                    FiberCubic, bde_one_jet_numeric,
                                    classify_surface, classify_umbilic,
                                    cubic_from_jet, eigenvalues_at_root,
                                    lie_cartan_F, lie_cartan_field,
                                    numeric_linearization_check, real_roots,
                                    reference_one_jet)
from nullumbilics.surfaces import (HOST_CYLINDER, HOST_LIGHT_CONE,
                                   HOST_NULL_PLANE, GraphSurface,
                                   RotationSurface)

CONE_D1 = RotationSurface(HOST_LIGHT_CONE, k=0.0, a=3, b=1, c=0)
CONE_D2 = RotationSurface(HOST_LIGHT_CONE, k=0.0, a=3, b=2, c=1)
CONE_D3 = RotationSurface(HOST_LIGHT_CONE, k=0.0, a=1, b=2, c=5)


# -- measured 1-jets -----------------------------------------------------------


def test_generic_graph_one_jet():
    s = GraphSurface(k=0.2, gxx=0.5, gyy=-0.1, fa=1, fd=2, fb=3, fc=4,
                     delta=5, epsilon=6, zeta=7, lam=8)
    measured = bde_one_jet_numeric(s).as_array()
    # closed form in the measured normalization; the same direction field is
    # described by twice these values in the alternative normalization
    # (d + 2*epsilon, b + 2*zeta, a - b + 2*(delta - zeta), d - c + 2*(epsilon - lam))
    expected = np.array([7.0, 8.5, -3.0, -3.0])
    assert measured == pytest.approx(expected, abs=1e-5)
    assert reference_one_jet(s).as_array() == pytest.approx(expected)
    doubled = np.array([14.0, 17.0, -6.0, -6.0])
    scale = float(measured @ doubled) / float(doubled @ doubled)
    assert scale == pytest.approx(0.5, abs=1e-6)
    assert np.linalg.norm(measured - scale * doubled) < 1e-5 * np.linalg.norm(doubled)


def test_light_cone_one_jet():
    assert bde_one_jet_numeric(CONE_D1).as_array() == pytest.approx(
        [0.0, 1.0, 2.0, 0.0], abs=1e-8)


def test_null_plane_matches_light_cone_jet():
    plane = RotationSurface(HOST_NULL_PLANE, k=0.0, a=3, b=1, c=0)
    jp = bde_one_jet_numeric(plane).as_array()
    jc = bde_one_jet_numeric(CONE_D1).as_array()
    assert np.max(np.abs(jp - jc)) < 1e-8


def test_reference_jet_matches_measurement_for_all_hosts(rng):
    for host in (HOST_NULL_PLANE, HOST_LIGHT_CONE, HOST_CYLINDER):
        k, a, b, c = rng.uniform(-2, 2, size=4)
        s = RotationSurface(host, k=k, a=a, b=b, c=c)
        assert bde_one_jet_numeric(s).as_array() == pytest.approx(
            reference_one_jet(s).as_array(), abs=1e-8)


def test_one_jet_rejects_bad_step():
    with pytest.raises(ValueError):
        bde_one_jet_numeric(CONE_D1, h=0.5)


# -- fiber cubic ----------------------------------------------------------------


def test_cubic_from_rotation_jet():
    a, b, c = 3.0, 1.0, 0.0
    cub = cubic_from_jet(BdeOneJet(0.0, b, a - b, -c))
    assert cub.coefficients() == pytest.approx([b, -c, a - 2 * b, 0.0])


def test_cubic_from_generic_jet():
    cub = cubic_from_jet(BdeOneJet(14.0, 17.0, -6.0, -6.0))
    assert cub.coefficients() == pytest.approx([17.0, 8.0, -23.0, -14.0])


def test_cubic_degenerates_to_quadratic():
    cub = cubic_from_jet(BdeOneJet(1.0, 0.0, 0.0, 0.0))
    assert cub.c3 == 0.0
    with pytest.raises(DegeneracyError):
        real_roots(cub)


@pytest.mark.parametrize("abc, expected", [
    ((3, 1, 0), [0.0]),
    ((3, 2, 1), [-0.5, 0.0, 1.0]),
    ((1, 2, 5), [-0.5, 0.0, 3.0]),
])
def test_real_roots_closed_forms(abc, expected):
    a, b, c = abc
    roots = real_roots(cubic_from_jet(BdeOneJet(0.0, b, a - b, -c)))
    assert [r.z for r in roots] == pytest.approx(expected, abs=1e-12)
    assert all(r.simple for r in roots)


def test_root_residuals_are_tiny(rng):
    for _ in range(100):
        a, b, c = rng.uniform(-5, 5, size=3)
        if abs(b) < 0.05:
            continue
        cub = cubic_from_jet(BdeOneJet(0.0, b, a - b, -c))
        for r in real_roots(cub):
            norm = 1.0 + float(np.max(np.abs(cub.coefficients())))
            assert abs(cub(r.z)) < 1e-10 * norm


# -- eigenvalues ------------------------------------------------------------------


def test_eigenvalues_at_central_root():
    a, b, c = 3.0, 1.0, 0.0
    jet = BdeOneJet(0.0, b, a - b, -c)
    beta2, beta3 = eigenvalues_at_root(jet, cubic_from_jet(jet), 0.0)
    assert (beta2, beta3) == pytest.approx((a - b, 2 * b - a))


@pytest.mark.parametrize("z, expected", [(1.0, (4.0, -3.0)), (-0.5, (2.5, -1.5))])
def test_eigenvalues_at_outer_roots(z, expected):
    a, b, c = 3.0, 2.0, 1.0
    jet = BdeOneJet(0.0, b, a - b, -c)
    assert eigenvalues_at_root(jet, cubic_from_jet(jet), z) == pytest.approx(expected)


@pytest.mark.parametrize("surface, z, betas", [
    (CONE_D1, 0.0, (2.0, -1.0)),
    (RotationSurface(HOST_CYLINDER, k=0.0, a=3, b=2, c=1), 1.0, (4.0, -3.0)),
    (RotationSurface(HOST_NULL_PLANE, k=0.0, a=1, b=2, c=5), 0.0, (-1.0, 3.0)),
], ids=["cone-z0", "cylinder-z1", "plane-z0"])
def test_numeric_linearization_matches_closed_form(surface, z, betas):
    assert numeric_linearization_check(surface, z) < 1e-4
    jet = bde_one_jet_numeric(surface)
    assert eigenvalues_at_root(jet, cubic_from_jet(jet), z) == pytest.approx(
        betas, abs=1e-7)


# -- the lifted field --------------------------------------------------------------


def test_field_vanishes_on_fiber_except_third_component():
    v = lie_cartan_field(CONE_D2, 0.0, 0.0, 0.3)
    assert v[0] == 0.0 and v[1] == 0.0
    # dz/dt = -f(z) with f the fiber cubic
    cub = cubic_from_jet(bde_one_jet_numeric(CONE_D2))
    assert v[2] == pytest.approx(-cub(0.3), abs=1e-6)


def test_field_vanishes_at_fiber_singularities():
    jet = bde_one_jet_numeric(CONE_D2)
    for root in real_roots(cubic_from_jet(jet)):
        v = lie_cartan_field(CONE_D2, 0.0, 0.0, root.z)
        assert np.max(np.abs(v)) < 1e-6


def test_projected_direction_is_parallel_to_lift_coordinate():
    # on F = 0 off the fiber, (dx, dy) = F_z * (1, z) by construction
    x, y = 0.05, 0.02
    A, B, C = __import__("nullumbilics.kernel", fromlist=["abc_at"]).abc_at(CONE_D2, x, y)
    disc = max(B * B - 4 * A * C, 0.0)
    z = (-B - np.sqrt(disc)) / (2 * A)
    assert abs(lie_cartan_F(CONE_D2, x, y, z)) < 1e-12
    v = lie_cartan_field(CONE_D2, x, y, z)
    assert v[1] == pytest.approx(z * v[0], rel=1e-12, abs=1e-15)


# -- classification ------------------------------------------------------------------


@pytest.mark.parametrize("surface, kind, kinds", [
    (CONE_D1, D1, [SADDLE]),
    (CONE_D2, D2, [SADDLE, NODE, SADDLE]),
    (CONE_D3, D3, [SADDLE, SADDLE, SADDLE]),
])
def test_classify_witnesses(surface, kind, kinds):
    verdict = classify_surface(surface)
    assert verdict.kind == kind
    assert [s.kind for s in verdict.singularities] == kinds
    assert verdict.transversal and verdict.simple


def test_not_transversal_when_b_equals_a():
    verdict = classify_surface(RotationSurface(HOST_CYLINDER, k=0.0, a=2, b=2, c=1))
    assert verdict.kind == NOT_TRANSVERSAL
    assert not verdict.transversal


def test_degenerate_cubic_when_leading_coefficient_vanishes():
    # transversal (a1*b2 - a2*b1 = 1) but the fiber cubic drops to a quadratic
    verdict = classify_umbilic(BdeOneJet(1.0, 0.0, 0.0, 1.0))
    assert verdict.kind == DEGENERATE_CUBIC
    assert verdict.transversal


def test_repeated_root_is_degenerate():
    # a/b = (c/2b)^2 + 2 makes the two outer roots collide
    b, c = 1.0, 2.0
    a = (c / (2 * b)) ** 2 * b + 2 * b
    verdict = classify_umbilic(BdeOneJet(0.0, b, a - b, -c))
    assert verdict.kind == DEGENERATE_CUBIC


@given(s=st.floats(min_value=1e-3, max_value=1e3),
       a=st.floats(min_value=-5, max_value=5), b=st.floats(min_value=-5, max_value=5),
       c=st.floats(min_value=-5, max_value=5))
@settings(max_examples=150, deadline=None)
def test_verdict_invariant_under_positive_scaling(s, a, b, c):
    jet = BdeOneJet(0.0, b, a - b, -c)
    scaled = BdeOneJet(0.0, s * b, s * (a - b), -s * c)
    assert classify_umbilic(jet).kind == classify_umbilic(scaled).kind


@given(a1=st.floats(-5, 5), a2=st.floats(-5, 5),
       b1=st.floats(-5, 5), b2=st.floats(-5, 5))
@settings(max_examples=200, deadline=None)
def test_half_middle_coefficient_convention(a1, a2, b1, b2):
    # The same cubic arises from the half-middle-coefficient convention
    # phi(z) = a2 z^3 + (2 b2' + a1) z^2 + (2 b1' - a2) z - a1 with
    # b1' = b1/2, b2' = b2/2.
    cub = cubic_from_jet(BdeOneJet(a1, a2, b1, b2))
    half = FiberCubic(c3=a2, c2=2 * (b2 / 2) + a1, c1=2 * (b1 / 2) - a2, c0=-a1)
    assert cub.coefficients() == pytest.approx(half.coefficients())


def test_single_real_root_is_always_a_saddle(rng):
    found = 0
    while found < 60:
        a1, a2, b1, b2 = rng.uniform(-5, 5, size=4)
        jet = BdeOneJet(a1, a2, b1, b2)
        verdict = classify_umbilic(jet)
        if len(verdict.roots) == 1 and verdict.kind != DEGENERATE_CUBIC:
            assert verdict.kind == D1
            found += 1
