import numpy as np
import pytest

from conftest import (random_graph_surfaces, random_rotation_surfaces,
                      sample_domain_point)
from nullumbilics.errors import DegeneracyError
from nullumbilics.frame import solve_eta
from nullumbilics.minkowski import minkowski_dot
from nullumbilics.shape import (BdePoint, ScreenCoefficients, bde_at,
                                principal_curvatures, screen_at,
                                screen_coefficients, shape_matrix,
                                xi_umbilicity_deviation)
from nullumbilics.surfaces import (HOST_LIGHT_CONE, HOST_NULL_PLANE,
                                   RotationSurface, immersion_point)


def test_screen_coefficients_at_origin_null_plane():
    s = RotationSurface(HOST_NULL_PLANE, k=3.0, a=1, b=1, c=1)
    sc = screen_at(s, 0.0, 0.0)
    assert (sc.e, sc.f, sc.g) == pytest.approx((3.0, 0.0, 3.0), abs=1e-12)


def test_screen_coefficients_at_origin_light_cone():
    s = RotationSurface(HOST_LIGHT_CONE, k=1.0, a=2, b=1, c=0)
    sc = screen_at(s, 0.0, 0.0)
    assert (sc.e, sc.f, sc.g) == pytest.approx((1.0, 0.0, 1.0), abs=1e-12)


def test_screen_pairing_matches_independent_recomputation():
    s = RotationSurface(HOST_NULL_PLANE, k=0.0, a=6, b=0, c=0)
    jet = immersion_point(s, 0.1, 0.0)
    sc = screen_coefficients(jet)
    eta = solve_eta(jet).eta
    assert sc.e == pytest.approx(minkowski_dot(jet.phi_xx, eta), rel=1e-8)


def test_shape_matrix_umbilic():
    sc = ScreenCoefficients(e=5.0, f=0.0, g=5.0, E=1.0, F=0.0, G=1.0)
    m = shape_matrix(sc)
    assert (m.a11, m.a22, m.a12, m.a21) == pytest.approx((5, 5, 0, 0))
    assert principal_curvatures(m) == pytest.approx((5.0, 5.0))


def test_shape_matrix_diagonal():
    sc = ScreenCoefficients(e=2.0, f=0.0, g=1.0, E=1.0, F=0.0, G=1.0)
    m = shape_matrix(sc)
    assert (m.a11, m.a22) == pytest.approx((2.0, 1.0))
    assert principal_curvatures(m) == pytest.approx((1.0, 2.0))


def test_shape_matrix_reproduces_screen_coefficients(rng):
    for _ in range(50):
        E = 1.0 + rng.uniform(0, 2)
        G = 1.0 + rng.uniform(0, 2)
        F = rng.uniform(-0.9, 0.9) * np.sqrt(E * G)
        e, f, g = rng.uniform(-3, 3, size=3)
        sc = ScreenCoefficients(e=e, f=f, g=g, E=E, F=F, G=G)
        m = shape_matrix(sc)
        assert m.a11 * E + m.a21 * F == pytest.approx(e, rel=1e-9, abs=1e-9)
        assert m.a11 * F + m.a21 * G == pytest.approx(f, rel=1e-9, abs=1e-9)
        assert m.a12 * E + m.a22 * F == pytest.approx(f, rel=1e-9, abs=1e-9)
        assert m.a12 * F + m.a22 * G == pytest.approx(g, rel=1e-9, abs=1e-9)


def test_real_eigenvalues_for_metric_selfadjoint_operators(rng):
    # the quadratic-formula oracle: discriminant of the characteristic
    # polynomial is nonnegative whenever the metric is positive definite
    for _ in range(200):
        E = 1.0 + rng.uniform(0, 2)
        G = 1.0 + rng.uniform(0, 2)
        F = rng.uniform(-0.95, 0.95) * np.sqrt(E * G)
        e, f, g = rng.uniform(-3, 3, size=3)
        m = shape_matrix(ScreenCoefficients(e=e, f=f, g=g, E=E, F=F, G=G))
        tr = m.a11 + m.a22
        det = m.a11 * m.a22 - m.a12 * m.a21
        disc = tr * tr - 4 * det
        assert disc >= -1e-12 * (tr * tr + abs(det) + 1.0)
        k1, k2 = principal_curvatures(m)
        assert k1 == pytest.approx((tr - np.sqrt(max(disc, 0))) / 2, rel=1e-10, abs=1e-10)
        assert k2 == pytest.approx((tr + np.sqrt(max(disc, 0))) / 2, rel=1e-10, abs=1e-10)


def test_shape_matrix_rejects_degenerate_metric():
    with pytest.raises(DegeneracyError):
        shape_matrix(ScreenCoefficients(e=1, f=0, g=1, E=1.0, F=1.0, G=1.0))


def test_bde_triple_umbilic_and_direct_substitution():
    assert bde_at(ScreenCoefficients(2, 0, 2, 1, 0, 1)) == BdePoint(0.0, 0.0, 0.0)
    p = bde_at(ScreenCoefficients(e=2, f=0, g=1, E=1, F=0, G=1))
    assert (p.A, p.B, p.C) == (0.0, 1.0, 0.0)


def test_orthogonality_identity_everywhere(rng):
    surfaces = random_rotation_surfaces(rng, per_host=2) + \
        random_graph_surfaces(rng, 2)
    for s in surfaces:
        for _ in range(150):
            x, y = sample_domain_point(s, rng)
            sc = screen_at(s, x, y)
            p = bde_at(sc)
            scale = max(1.0, abs(p.A * sc.E) + abs(p.B * sc.F) + abs(p.C * sc.G))
            assert abs(p.A * sc.E - p.B * sc.F + p.C * sc.G) < 1e-10 * scale
            disc = p.B * p.B - 4 * p.A * p.C
            assert disc >= -1e-10 * max(1.0, p.B * p.B + abs(p.A * p.C))


def test_selfadjointness_of_shape_operator(rng):
    s = RotationSurface(HOST_LIGHT_CONE, k=0.6, a=2, b=1, c=-1)
    for _ in range(60):
        x, y = sample_domain_point(s, rng)
        sc = screen_at(s, x, y)
        m = shape_matrix(sc)
        left = m.a11 * sc.F + m.a21 * sc.G   # <A phi_x, phi_y>
        right = m.a12 * sc.E + m.a22 * sc.F  # <phi_x, A phi_y>
        assert abs(left - right) < 1e-10 * max(1.0, abs(left))


def test_umbilic_at_origin_for_every_host(rng):
    for s in random_rotation_surfaces(rng, per_host=2) + random_graph_surfaces(rng, 2):
        p = bde_at(screen_at(s, 0.0, 0.0))
        assert max(abs(p.A), abs(p.B), abs(p.C)) < 1e-12


@pytest.mark.parametrize("k, a, b, c, tol", [
    (0.3, 1, 2, 3, 1e-9),
    (0.0, 0, 0, 0, 1e-12),
    (-0.4, 5, -1, 2, 1e-9),
])
def test_xi_umbilicity_on_light_cone(k, a, b, c, tol):
    s = RotationSurface(HOST_LIGHT_CONE, k=k, a=a, b=b, c=c)
    assert xi_umbilicity_deviation(s, samples=200, seed=11) < tol


def test_xi_umbilicity_rejects_other_hosts():
    with pytest.raises(ValueError):
        xi_umbilicity_deviation(RotationSurface(HOST_NULL_PLANE, k=0.0))
