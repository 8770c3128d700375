"""Screen second fundamental form, shape operator, and the coefficient
functions of the principal-line equation.

With eta the null transversal field, the screen coefficients are the
pairings e = <phi_xx, eta>, f = <phi_xy, eta>, g = <phi_yy, eta>.  The
eigendirection equation of the shape operator reads

    A dy^2 + B dx dy + C dx^2 = 0,
    A = f G - g F,   B = e G - g E,   C = -(f E - e F),

kept unnormalized (the equation is homogeneous, and skipping the division
by EG - F^2 keeps derivative extraction exact).  The identity
A E - B F + C G = 0 encodes the metric orthogonality of the two direction
fields and holds pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import DegeneracyError
from .frame import NullFrame, solve_eta
from .minkowski import minkowski_dot
from .surfaces import (HOST_LIGHT_CONE, Surface, SurfaceJet,
                       first_fundamental_form, immersion_point, xi_jet_at)


@dataclass(frozen=True)
class ScreenCoefficients:
    e: float
    f: float
    g: float
    E: float
    F: float
    G: float


@dataclass(frozen=True)
class ShapeMatrix:
    """Matrix of the shape operator in the basis (phi_x, phi_y)."""

    a11: float
    a12: float
    a21: float
    a22: float


@dataclass(frozen=True)
class BdePoint:
    A: float
    B: float
    C: float


def screen_coefficients(jet: SurfaceJet, frame: NullFrame | None = None
                        ) -> ScreenCoefficients:
    """The five pairings defining the screen form and the induced metric."""
    if frame is None:
        frame = solve_eta(jet)
    E, F, G = first_fundamental_form(jet)
    return ScreenCoefficients(
        e=minkowski_dot(jet.phi_xx, frame.eta),
        f=minkowski_dot(jet.phi_xy, frame.eta),
        g=minkowski_dot(jet.phi_yy, frame.eta),
        E=E, F=F, G=G,
    )


def screen_at(surface: Surface, x: float, y: float) -> ScreenCoefficients:
    return screen_coefficients(immersion_point(surface, x, y))


def shape_matrix(s: ScreenCoefficients) -> ShapeMatrix:
    """Solve the 2x2 metric systems for the operator matrix."""
    det = s.E * s.G - s.F * s.F
    if det <= 0.0:
        raise DegeneracyError("singular metric in shape operator solve")
    a11 = (s.e * s.G - s.f * s.F) / det
    a21 = (s.f * s.E - s.e * s.F) / det
    a12 = (s.f * s.G - s.g * s.F) / det
    a22 = (s.g * s.E - s.f * s.F) / det
    return ShapeMatrix(a11=a11, a12=a12, a21=a21, a22=a22)


def principal_curvatures(m: ShapeMatrix) -> tuple[float, float]:
    """Real eigenvalues of the shape matrix, ordered k1 <= k2.

    Self-adjointness with respect to a positive-definite metric makes the
    characteristic discriminant nonnegative; tiny negative values from
    rounding are clamped to zero.
    """
    tr = m.a11 + m.a22
    det = m.a11 * m.a22 - m.a12 * m.a21
    disc = tr * tr - 4.0 * det
    scale = tr * tr + abs(det) + 1.0
    if disc < 0.0:
        if disc < -1e-12 * scale:
            raise DegeneracyError(f"complex shape eigenvalues: disc={disc!r}")
        disc = 0.0
    r = sqrt(disc)
    return (tr - r) / 2.0, (tr + r) / 2.0


def bde_at(s: ScreenCoefficients) -> BdePoint:
    """Unnormalized coefficients of the principal-line equation."""
    return BdePoint(
        A=s.f * s.G - s.g * s.F,
        B=s.e * s.G - s.g * s.E,
        C=-(s.f * s.E - s.e * s.F),
    )


def abc_at(surface: Surface, x: float, y: float) -> tuple[float, float, float]:
    p = bde_at(screen_at(surface, x, y))
    return p.A, p.B, p.C


def xi_umbilicity_deviation(surface: Surface, samples: int = 200,
                            seed: int = 0, radius: float = 0.8) -> float:
    """Total umbilicity of the light cone with respect to its own null field.

    Every surface inside the light cone is totally umbilical for the screen
    shape operator of xi, so the xi-based coefficient triple vanishes
    identically.  This samples the chart and returns the largest deviation.
    The xi-screen coefficients carry the Weingarten sign: e* = -<d_x xi, phi_x>.
    """
    if surface.host != HOST_LIGHT_CONE:
        raise ValueError("the xi-umbilicity check applies to the light-cone host")
    rng = np.random.default_rng(seed)
    worst = 0.0
    n = 0
    while n < samples:
        x, y = rng.uniform(-radius, radius, size=2)
        if x * x + y * y > radius * radius:
            continue
        n += 1
        jet = immersion_point(surface, x, y)
        _, xi_x, xi_y = xi_jet_at(surface, x, y)
        e = -minkowski_dot(xi_x, jet.phi_x)
        f = -minkowski_dot(xi_x, jet.phi_y)
        g = -minkowski_dot(xi_y, jet.phi_y)
        E, F, G = first_fundamental_form(jet)
        a = f * G - g * F
        b = e * G - g * E
        c = -(f * E - e * F)
        worst = max(worst, abs(a), abs(b), abs(c))
    return worst
