"""Blow-up classification of the umbilic at the chart origin.

The coefficient functions (A, B, C) of the principal-line equation vanish
at an umbilic.  Their 1-jet there,

    A ~ a1 x + a2 y,   B ~ b1 x + b2 y,   C ~ -(a1 x + a2 y),

determines the local configuration.  Lifting to the projectivized tangent
bundle with fiber coordinate z = dy/dx resolves the direction ambiguity:
the surface F(x, y, z) = A z^2 + B z + C = 0 carries the vector field

    X = (F_z, z F_z, -(F_x + z F_y)),

whose singularities over the origin sit at (0, 0, z) with z a real root of
the fiber cubic

    f(z) = a2 z^3 + (a1 + b2) z^2 + (b1 - a2) z - a1.

At a simple root the nonzero linearization eigenvalues are

    beta2(z) = b1 + (2 a1 + b2) z + 2 a2 z^2      (eigenvector (1, z, 0)),
    beta3(z) = -f'(z)                              (eigenvector (0, 0, 1)),

and the saddle/node pattern of the roots yields the Darbouxian type:
one saddle -> D1, saddle-node-saddle in root order -> D2, three
saddles -> D3.  Transversality of A = 0 and B = 0 at the origin
(a1 b2 - a2 b1 != 0) is exactly the simplicity of the umbilic here: with
C = -A, the Hessian determinant of B^2 - 4AC at the origin equals
4 (a1 b2 - a2 b1)^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernel
from .errors import ConsistencyError, DegeneracyError
from .surfaces import GraphSurface, RotationSurface, Surface

D1 = "D1"
D2 = "D2"
D3 = "D3"
NOT_SIMPLE = "NotSimple"
NOT_TRANSVERSAL = "NotTransversal"
DEGENERATE_CUBIC = "DegenerateCubic"

SADDLE = "saddle"
NODE = "node"
DEGENERATE = "degenerate"

#: Relative threshold below which |beta2*beta3| marks a non-hyperbolic point.
KIND_TOL = 1e-9
#: Relative root spacing under which roots stop counting as simple.
ROOT_TIE_TOL = 1e-7


@dataclass(frozen=True)
class BdeOneJet:
    """First-order coefficients of A and B at the umbilic (C carries -A's)."""

    a1: float
    a2: float
    b1: float
    b2: float

    def as_array(self) -> np.ndarray:
        return np.array([self.a1, self.a2, self.b1, self.b2])


@dataclass(frozen=True)
class FiberCubic:
    """Restriction of the lift's third component to the fiber over the umbilic."""

    c3: float
    c2: float
    c1: float
    c0: float

    def __call__(self, z: float) -> float:
        return ((self.c3 * z + self.c2) * z + self.c1) * z + self.c0

    def derivative(self, z: float) -> float:
        return (3.0 * self.c3 * z + 2.0 * self.c2) * z + self.c1

    def coefficients(self) -> np.ndarray:
        return np.array([self.c3, self.c2, self.c1, self.c0])


@dataclass(frozen=True)
class FiberRoot:
    z: float
    simple: bool


@dataclass(frozen=True)
class FiberSingularity:
    """A zero of the lifted field on the fiber with its hyperbolic type."""

    z: float
    beta2: float
    beta3: float
    kind: str


@dataclass(frozen=True)
class UmbilicVerdict:
    kind: str
    roots: tuple[float, ...] = ()
    singularities: tuple[FiberSingularity, ...] = ()
    transversality: float = 0.0
    transversal: bool = False
    simple: bool = False

    @property
    def is_darbouxian(self) -> bool:
        return self.kind in (D1, D2, D3)

    def saddles(self) -> tuple[FiberSingularity, ...]:
        return tuple(s for s in self.singularities if s.kind == SADDLE)

    def nodes(self) -> tuple[FiberSingularity, ...]:
        return tuple(s for s in self.singularities if s.kind == NODE)


# -- 1-jet extraction ------------------------------------------------------


def _richardson(values: dict[float, float], h: float) -> float:
    d_h = (values[h] - values[-h]) / (2.0 * h)
    d_h2 = (values[h / 2] - values[-h / 2]) / h
    return (4.0 * d_h2 - d_h) / 3.0


def bde_one_jet_numeric(surface: Surface, h: float = 1e-3) -> BdeOneJet:
    """Measure the 1-jet of (A, B) at the origin by Richardson-extrapolated
    central differences, and cross-check that C's 1-jet equals -(A's).
    """
    if not 1e-6 <= h <= 1e-2:
        raise ValueError("step h must lie in [1e-6, 1e-2]")
    offsets = (h, -h, h / 2, -h / 2)
    ax: dict[float, float] = {}
    bx: dict[float, float] = {}
    cx: dict[float, float] = {}
    ay: dict[float, float] = {}
    by: dict[float, float] = {}
    cy: dict[float, float] = {}
    for t in offsets:
        ax[t], bx[t], cx[t] = kernel.abc_at(surface, t, 0.0)
        ay[t], by[t], cy[t] = kernel.abc_at(surface, 0.0, t)
    a1 = _richardson(ax, h)
    a2 = _richardson(ay, h)
    b1 = _richardson(bx, h)
    b2 = _richardson(by, h)
    c1 = _richardson(cx, h)
    c2 = _richardson(cy, h)
    scale = max(1.0, abs(a1), abs(a2), abs(b1), abs(b2))
    if max(abs(c1 + a1), abs(c2 + a2)) > 1e-6 * scale:
        raise ConsistencyError(
            f"C's 1-jet ({c1!r}, {c2!r}) is not -(A's 1-jet) ({a1!r}, {a2!r})")
    return BdeOneJet(a1=a1, a2=a2, b1=b1, b2=b2)


def reference_one_jet(surface: Surface) -> BdeOneJet:
    """Closed-form 1-jet of the coefficient functions built here.

    Rotation hosts:  (a1, a2, b1, b2) = (0, b, a - b, -c).
    Generic graphs:  ((d + 2 eps)/2, (b + 2 zeta)/2, (a - b + 2(delta - zeta))/2,
    (d - c + 2(eps - lam))/2) in terms of the cubic coefficients of f and g.
    The equation itself is homogeneous, so any positive multiple describes
    the same direction field; this normalization is the one the measured
    coefficients satisfy exactly.
    """
    if isinstance(surface, RotationSurface):
        return BdeOneJet(0.0, surface.b, surface.a - surface.b, -surface.c)
    s: GraphSurface = surface
    return BdeOneJet(
        a1=0.5 * (s.fd + 2.0 * s.epsilon),
        a2=0.5 * (s.fb + 2.0 * s.zeta),
        b1=0.5 * (s.fa - s.fb + 2.0 * (s.delta - s.zeta)),
        b2=0.5 * (s.fd - s.fc + 2.0 * (s.epsilon - s.lam)),
    )


# -- fiber cubic and its roots ----------------------------------------------


def cubic_from_jet(jet: BdeOneJet) -> FiberCubic:
    return FiberCubic(
        c3=jet.a2,
        c2=jet.a1 + jet.b2,
        c1=jet.b1 - jet.a2,
        c0=-jet.a1,
    )


def real_roots(cubic: FiberCubic, tol: float = 1e-9) -> list[FiberRoot]:
    """Real roots of the fiber cubic via companion-matrix eigenvalues plus a
    single Newton polish, ordered ascending and flagged for simplicity."""
    cscale = float(np.max(np.abs(cubic.coefficients())))
    if cscale == 0.0 or abs(cubic.c3) < tol * cscale:
        raise DegeneracyError(
            f"fiber cubic degenerates: leading coefficient {cubic.c3!r} "
            f"against scale {cscale!r}")
    p = cubic.c2 / cubic.c3
    q = cubic.c1 / cubic.c3
    r = cubic.c0 / cubic.c3
    companion = np.array([[-p, -q, -r],
                          [1.0, 0.0, 0.0],
                          [0.0, 1.0, 0.0]])
    eig = np.linalg.eigvals(companion)
    zs = []
    for w in eig:
        if abs(w.imag) > ROOT_TIE_TOL * max(1.0, abs(w)):
            continue
        z = float(w.real)
        d = cubic.derivative(z)
        if d != 0.0:
            z = z - cubic(z) / d
        # Discard stray projections of genuinely complex pairs.
        if abs(cubic(z)) > 1e-6 * cscale * max(1.0, abs(z)) ** 3:
            continue
        zs.append(z)
    zs.sort()
    zmax = max([1.0] + [abs(z) for z in zs])
    spacing_tol = ROOT_TIE_TOL * zmax
    roots = []
    for i, z in enumerate(zs):
        close = any(abs(z - other) < spacing_tol
                    for j, other in enumerate(zs) if j != i)
        dscale = cscale * max(1.0, z * z)
        simple = (not close) and abs(cubic.derivative(z)) >= tol * dscale
        roots.append(FiberRoot(z=z, simple=simple))
    return roots


def eigenvalues_at_root(jet: BdeOneJet, cubic: FiberCubic, z: float
                        ) -> tuple[float, float]:
    """Nonzero linearization eigenvalues of the lifted field at (0, 0, z)."""
    beta2 = jet.b1 + (2.0 * jet.a1 + jet.b2) * z + 2.0 * jet.a2 * z * z
    beta3 = -cubic.derivative(z)
    return beta2, beta3


def singularity_kind(beta2: float, beta3: float, tol: float = KIND_TOL) -> str:
    product = beta2 * beta3
    if abs(product) < tol * (beta2 * beta2 + beta3 * beta3):
        return DEGENERATE
    return SADDLE if product < 0.0 else NODE


def fiber_singularities(jet: BdeOneJet, tol: float = 1e-9
                        ) -> list[FiberSingularity]:
    cubic = cubic_from_jet(jet)
    out = []
    for root in real_roots(cubic, tol):
        beta2, beta3 = eigenvalues_at_root(jet, cubic, root.z)
        kind = singularity_kind(beta2, beta3) if root.simple else DEGENERATE
        out.append(FiberSingularity(z=root.z, beta2=beta2, beta3=beta3, kind=kind))
    return out


# -- classification ----------------------------------------------------------


def classify_umbilic(jet: BdeOneJet, tol: float = 1e-9) -> UmbilicVerdict:
    """Darbouxian verdict from the measured 1-jet.

    Every failure mode is a verdict variant, never an exception: loss of
    transversality (equivalently, of simplicity), a degenerate or
    repeated-root cubic, and non-hyperbolic fiber singularities all map to
    diagnostic kinds.
    """
    arr = jet.as_array()
    scale2 = float(arr @ arr)
    det = jet.a1 * jet.b2 - jet.a2 * jet.b1
    transversal = scale2 > 0.0 and abs(det) >= tol * scale2
    if not transversal:
        return UmbilicVerdict(kind=NOT_TRANSVERSAL, transversality=det,
                              transversal=False, simple=False)
    cubic = cubic_from_jet(jet)
    cscale = float(np.max(np.abs(cubic.coefficients())))
    if cscale == 0.0 or abs(cubic.c3) < tol * cscale:
        return UmbilicVerdict(kind=DEGENERATE_CUBIC, transversality=det,
                              transversal=True, simple=True)
    try:
        sings = fiber_singularities(jet, tol)
    except DegeneracyError:
        return UmbilicVerdict(kind=DEGENERATE_CUBIC, transversality=det,
                              transversal=True, simple=True)
    roots = tuple(s.z for s in sings)
    base = dict(roots=roots, singularities=tuple(sings), transversality=det,
                transversal=True, simple=True)
    kinds = [s.kind for s in sings]
    if DEGENERATE in kinds:
        return UmbilicVerdict(kind=DEGENERATE_CUBIC, **base)
    if len(sings) == 1:
        if kinds == [SADDLE]:
            return UmbilicVerdict(kind=D1, **base)
        return UmbilicVerdict(kind=DEGENERATE_CUBIC, **base)
    if len(sings) == 3:
        if kinds == [SADDLE, NODE, SADDLE]:
            return UmbilicVerdict(kind=D2, **base)
        if kinds == [SADDLE, SADDLE, SADDLE]:
            return UmbilicVerdict(kind=D3, **base)
    # Two real roots means a collision the tie threshold missed, and any
    # other pattern only arises on a degeneracy boundary.
    return UmbilicVerdict(kind=DEGENERATE_CUBIC, **base)


def classify_surface(surface: Surface, h: float = 1e-3,
                     tol: float = 1e-9) -> UmbilicVerdict:
    """Full numeric pipeline: measure the 1-jet, then classify."""
    return classify_umbilic(bde_one_jet_numeric(surface, h), tol)


# -- the lifted field ---------------------------------------------------------


def lie_cartan_F(surface: Surface, x: float, y: float, z: float) -> float:
    """The lift function F = A z^2 + B z + C at chart point (x, y, z)."""
    A, B, C = kernel.abc_at(surface, x, y)
    return (A * z + B) * z + C


def lie_cartan_field(surface: Surface, x: float, y: float, z: float,
                     fd_step: float = 1e-5) -> np.ndarray:
    """The lifted vector field (F_z, z F_z, -(F_x + z F_y)).

    F_z is exact in z; F_x and F_y come from central differences of the
    full nonlinear coefficient functions with an adaptively scaled step.
    """
    A, B, _ = kernel.abc_at(surface, x, y)
    fz = 2.0 * A * z + B
    d = fd_step * max(1.0, abs(x), abs(y))
    fxp = lie_cartan_F(surface, x + d, y, z)
    fxm = lie_cartan_F(surface, x - d, y, z)
    fyp = lie_cartan_F(surface, x, y + d, z)
    fym = lie_cartan_F(surface, x, y - d, z)
    fx = (fxp - fxm) / (2.0 * d)
    fy = (fyp - fym) / (2.0 * d)
    return np.array([fz, z * fz, -(fx + z * fy)])


def numeric_linearization_check(surface: Surface, z: float,
                                h: float = 1e-4,
                                fd_step: float = 1e-5) -> float:
    """Relative mismatch between the finite-difference Jacobian spectrum of
    the lifted field at (0, 0, z) and the closed-form eigenvalue pair."""
    base = np.array([0.0, 0.0, z])
    jac = np.empty((3, 3))
    for i in range(3):
        step = np.zeros(3)
        step[i] = h
        fp = lie_cartan_field(surface, *(base + step), fd_step=fd_step)
        fm = lie_cartan_field(surface, *(base - step), fd_step=fd_step)
        jac[:, i] = (fp - fm) / (2.0 * h)
    eig = list(np.linalg.eigvals(jac))
    jet = bde_one_jet_numeric(surface)
    beta2, beta3 = eigenvalues_at_root(jet, cubic_from_jet(jet), z)
    worst = 0.0
    for beta in (beta2, beta3):
        idx = int(np.argmin([abs(w - beta) for w in eig]))
        w = eig.pop(idx)
        worst = max(worst, abs(w - beta) / max(abs(beta), 1e-12))
    return worst
