"""Closed-form spacelike surfaces inside the null hosts.

Every configuration places an isolated umbilic (with respect to the null
transversal frame) at the origin of the chart.  Three rotation hosts take a
curvature k plus cubic height coefficients (a, b, c) in the convention with
no x^2*y term:

    g = (quadratic forced terms) + a/6 x^3 + b/2 x y^2 + c/6 y^3

The generic graph host takes the full parameter set: cubic coefficients of
the graph function f (fa, fd, fb, fc), free second partials of the height
term g (gxx, gyy) and its cubic coefficients (delta, epsilon, zeta, lam),
where g = gxx/2 x^2 + gyy/2 y^2 + delta/6 x^3 + epsilon/2 x^2 y
+ zeta/2 x y^2 + lam/6 y^3.  The second partials of f are forced by
umbilicity to f_xx = 2(k - gxx), f_xy = 0, f_yy = 2(k - gyy).

The quadratic part of g on the rotation hosts is likewise forced by the
umbilicity at the origin: g_xx = g_yy = k on the null hyperplane,
g_xx = g_yy = k + 1/2 on the light cone, and g_xx = k + 1/2, g_yy = k on
the null cylinder.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError, DomainError
from .jets import Jet2, jet_const, jet_sqrt, jet_x, jet_y

HOST_NULL_PLANE = "null-plane"
HOST_LIGHT_CONE = "light-cone"
HOST_CYLINDER = "cylinder"
HOST_GENERIC = "generic"

ROTATION_HOSTS = (HOST_NULL_PLANE, HOST_LIGHT_CONE, HOST_CYLINDER)
ALL_HOSTS = ROTATION_HOSTS + (HOST_GENERIC,)

#: Minimum chart distance kept from the light-cone / cylinder boundary.
DOMAIN_MARGIN = 1e-6


@dataclass(frozen=True)
class RotationSurface:
    """Spacelike surface in one of the three null rotation hosts."""

    host: str
    k: float = 0.0
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0

    def __post_init__(self):
        if self.host not in ROTATION_HOSTS:
            raise ValueError(f"unknown rotation host {self.host!r}")


@dataclass(frozen=True)
class GraphSurface:
    """Spacelike surface in the graph-based null host."""

    k: float = 0.0
    gxx: float = 0.0
    gyy: float = 0.0
    fa: float = 0.0
    fd: float = 0.0
    fb: float = 0.0
    fc: float = 0.0
    delta: float = 0.0
    epsilon: float = 0.0
    zeta: float = 0.0
    lam: float = 0.0
    f0: float = 0.0

    @property
    def host(self) -> str:
        return HOST_GENERIC


Surface = RotationSurface | GraphSurface


@dataclass(frozen=True)
class SurfaceJet:
    """Immersion value, partials up to order two, and the host's null field."""

    phi: np.ndarray
    phi_x: np.ndarray
    phi_y: np.ndarray
    phi_xx: np.ndarray
    phi_xy: np.ndarray
    phi_yy: np.ndarray
    xi: np.ndarray


def quadratic_terms(surface: RotationSurface) -> tuple[float, float]:
    """Forced second partials (g_xx, g_yy) of the height term at the origin."""
    k = surface.k
    if surface.host == HOST_NULL_PLANE:
        return k, k
    if surface.host == HOST_LIGHT_CONE:
        return k + 0.5, k + 0.5
    return k + 0.5, k


def check_domain(surface: Surface, x: float, y: float,
                 margin: float = DOMAIN_MARGIN) -> None:
    """Raise :class:`DomainError` when (x, y) is outside the host's chart."""
    if surface.host == HOST_LIGHT_CONE:
        if x * x + y * y > (1.0 - margin) ** 2:
            raise DomainError(
                f"point (x={x!r}, y={y!r}) outside the light-cone chart "
                f"(unit disk with margin {margin:g})")
    elif surface.host == HOST_CYLINDER:
        if abs(x) > 1.0 - margin:
            raise DomainError(
                f"coordinate x={x!r} outside the cylinder strip "
                f"(|x| < 1 with margin {margin:g})")


def in_domain(surface: Surface, x: float, y: float,
              margin: float = DOMAIN_MARGIN) -> bool:
    try:
        check_domain(surface, x, y, margin)
    except DomainError:
        return False
    return True


def _rotation_g(surface: RotationSurface, X: Jet2, Y: Jet2) -> Jet2:
    qx, qy = quadratic_terms(surface)
    return ((0.5 * qx) * (X * X) + (0.5 * qy) * (Y * Y)
            + (surface.a / 6.0) * (X * X * X)
            + (0.5 * surface.b) * (X * (Y * Y))
            + (surface.c / 6.0) * (Y * Y * Y))


def component_jets(surface: Surface, x: float, y: float
                   ) -> tuple[tuple[Jet2, ...], tuple[Jet2, ...]]:
    """Order-2 jets of the four immersion components and of the null field."""
    check_domain(surface, x, y)
    X, Y = jet_x(x), jet_y(y)
    one = jet_const(1.0)
    zero = jet_const(0.0)

    if isinstance(surface, RotationSurface):
        g = _rotation_g(surface, X, Y)
        w = one + g
        if surface.host == HOST_NULL_PLANE:
            phi = (w, X, Y, g)
            xi = (one, zero, zero, one)
        elif surface.host == HOST_LIGHT_CONE:
            s = jet_sqrt(one - X * X - Y * Y)
            phi = (w, w * X, w * Y, w * s)
            xi = (one, X, Y, s)
        else:
            s = jet_sqrt(one - X * X)
            phi = (w, w * X, Y, w * s)
            xi = (one, X, zero, s)
        if abs(w.v) < 1e-12:
            raise DegeneracyError("immersion factor 1 + g vanishes")
        return phi, xi

    k = surface.k
    cxx = k - surface.gxx
    cyy = k - surface.gyy
    f = (jet_const(surface.f0) + cxx * (X * X) + cyy * (Y * Y)
         + (surface.fa / 6.0) * (X * X * X)
         + (0.5 * surface.fd) * ((X * X) * Y)
         + (0.5 * surface.fb) * (X * (Y * Y))
         + (surface.fc / 6.0) * (Y * Y * Y))
    # Exact partials of the cubic polynomial f, as jets in their own right.
    fx = ((2.0 * cxx) * X + (0.5 * surface.fa) * (X * X)
          + surface.fd * (X * Y) + (0.5 * surface.fb) * (Y * Y))
    fy = ((2.0 * cyy) * Y + (0.5 * surface.fd) * (X * X)
          + surface.fb * (X * Y) + (0.5 * surface.fc) * (Y * Y))
    g = ((0.5 * surface.gxx) * (X * X) + (0.5 * surface.gyy) * (Y * Y)
         + (surface.delta / 6.0) * (X * X * X)
         + (0.5 * surface.epsilon) * ((X * X) * Y)
         + (0.5 * surface.zeta) * (X * (Y * Y))
         + (surface.lam / 6.0) * (Y * Y * Y))
    w = jet_sqrt(one + fx * fx + fy * fy)
    n1 = -fx / w
    n2 = -fy / w
    n3 = one / w
    phi = (one + g, X + g * n1, Y + g * n2, f + g * n3)
    xi = (one, n1, n2, n3)
    return phi, xi


def _slot(jets: tuple[Jet2, ...], name: str) -> np.ndarray:
    return np.array([getattr(j, name) for j in jets], dtype=float)


def immersion_point(surface: Surface, x: float, y: float) -> SurfaceJet:
    """Evaluate the immersion and its partials up to order two at (x, y)."""
    phi, xi = component_jets(surface, x, y)
    return SurfaceJet(
        phi=_slot(phi, "v"),
        phi_x=_slot(phi, "dx"),
        phi_y=_slot(phi, "dy"),
        phi_xx=_slot(phi, "dxx"),
        phi_xy=_slot(phi, "dxy"),
        phi_yy=_slot(phi, "dyy"),
        xi=_slot(xi, "v"),
    )


def xi_at(surface: Surface, x: float, y: float) -> np.ndarray:
    """The host's null field at (x, y)."""
    _, xi = component_jets(surface, x, y)
    return _slot(xi, "v")


def xi_jet_at(surface: Surface, x: float, y: float
              ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Null field value and its first partials at (x, y)."""
    _, xi = component_jets(surface, x, y)
    return _slot(xi, "v"), _slot(xi, "dx"), _slot(xi, "dy")


def first_fundamental_form(jet: SurfaceJet) -> tuple[float, float, float]:
    """Coefficients (E, F, G) of the induced metric; must be positive definite."""
    from .minkowski import minkowski_dot

    E = minkowski_dot(jet.phi_x, jet.phi_x)
    F = minkowski_dot(jet.phi_x, jet.phi_y)
    G = minkowski_dot(jet.phi_y, jet.phi_y)
    if E * G - F * F <= 0.0:
        raise DegeneracyError(
            f"tangent plane is not spacelike: EG - F^2 = {E * G - F * F!r}")
    return E, F, G
