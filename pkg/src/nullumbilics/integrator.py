"""Integration of the two principal foliations and of the lifted field.

Away from the umbilic the equation A dy^2 + B dx dy + C dx^2 = 0 defines
two metric-orthogonal direction fields; they are integrated by adaptive
continuation with an embedded 2nd/3rd-order pair and local orientation
memory (line fields carry no global orientation, so each evaluation picks
the root aligned with the previous heading).  Near the umbilic the
direction field is ill-conditioned and the dynamics are integrated in the
lift instead, where the field

    X = (F_z, z F_z, -(F_x + z F_y)),   F = A z^2 + B z + C

is a genuine vector field on the surface F = 0; trajectories are projected
back onto F = 0 after every step by one Newton correction in z.  Saddle
separatrices launched along the fiber eigenvector (1, z_i, 0) project to
the curves that reach the umbilic with limiting direction (1, z_i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import cos, hypot, pi, sin, sqrt

import numpy as np

from . import kernel, liecartan
from .errors import ConsistencyError, DegeneracyError, DomainError
from .liecartan import FiberSingularity, UmbilicVerdict
from .shape import BdePoint, ScreenCoefficients
from .surfaces import Surface, in_domain


@dataclass(frozen=True)
class DirectionPair:
    """Unit chart directions of the two foliations at a non-umbilic point."""

    d1: np.ndarray
    d2: np.ndarray


@dataclass(frozen=True)
class Separatrix:
    """Principal line through the umbilic with a definite limiting direction."""

    points: np.ndarray          # (n, 2) polyline through the origin
    direction: np.ndarray       # unit (1, z_i) / |.|
    family: int
    singularity: FiberSingularity


@dataclass
class Portrait:
    verdict: UmbilicVerdict
    radius: float
    separatrices: list[Separatrix] = field(default_factory=list)
    curves: dict[int, list[np.ndarray]] = field(default_factory=lambda: {1: [], 2: []})

    @property
    def saddle_directions(self) -> list[np.ndarray]:
        return [s.direction for s in self.separatrices]

    @property
    def node_directions(self) -> list[np.ndarray]:
        out = []
        for s in self.verdict.nodes():
            v = np.array([1.0, s.z])
            out.append(v / np.linalg.norm(v))
        return out


def _solve_quadratic_directions(A: float, B: float, C: float
                                ) -> tuple[np.ndarray, np.ndarray]:
    scale = max(abs(A), abs(B), abs(C))
    if scale == 0.0:
        raise DegeneracyError("umbilic point: direction field undefined")
    disc = B * B - 4.0 * A * C
    if disc < 0.0:
        if disc < -1e-10 * max(1.0, B * B + abs(A * C)):
            raise DegeneracyError(f"negative direction discriminant {disc!r}")
        disc = 0.0
    # Numerically stable co-root split, written homogeneously so both charts
    # (z = dy/dx and w = dx/dy) are covered without division: the solutions
    # of A dy^2 + B dx dy + C dx^2 = 0 are spanned by (A, q) and (q, C).
    q = -(B + (1.0 if B >= 0 else -1.0) * sqrt(disc)) / 2.0
    v1 = np.array([A, q])
    v2 = np.array([q, C])
    n1 = float(np.linalg.norm(v1))
    n2 = float(np.linalg.norm(v2))
    if n1 < 1e-14 * scale or n2 < 1e-14 * scale:
        raise DegeneracyError("direction field has a double root here")
    return v1 / n1, v2 / n2


def _normal_curvature(s: ScreenCoefficients, d: np.ndarray) -> float:
    u, v = d
    num = s.e * u * u + 2.0 * s.f * u * v + s.g * v * v
    den = s.E * u * u + 2.0 * s.F * u * v + s.G * v * v
    return num / den


def principal_directions(p: BdePoint, s: ScreenCoefficients) -> DirectionPair:
    """Both principal directions, ordered by normal curvature (family 1 is
    the direction of the smaller principal curvature)."""
    v1, v2 = _solve_quadratic_directions(p.A, p.B, p.C)
    if _normal_curvature(s, v1) <= _normal_curvature(s, v2):
        return DirectionPair(d1=v1, d2=v2)
    return DirectionPair(d1=v2, d2=v1)


def direction_at(surface: Surface, x: float, y: float, family: int) -> np.ndarray:
    from .shape import screen_at

    s = screen_at(surface, x, y)
    pair = principal_directions(BdePoint(*kernel.abc_at(surface, x, y)), s)
    return pair.d1 if family == 1 else pair.d2


def _aligned_direction(surface: Surface, p: np.ndarray, ref: np.ndarray
                       ) -> np.ndarray:
    """The root direction best aligned with ``ref`` (sign-corrected)."""
    A, B, C = kernel.abc_at(surface, float(p[0]), float(p[1]))
    v1, v2 = _solve_quadratic_directions(A, B, C)
    d = v1 if abs(v1 @ ref) >= abs(v2 @ ref) else v2
    return d if d @ ref >= 0.0 else -d


# -- embedded RK 2(3) with orientation memory --------------------------------


def _rk23(rhs, p0: np.ndarray, step: float, max_len: float, tol: float,
          stop) -> list[np.ndarray]:
    """Bogacki-Shampine style embedded pair on a unit-speed field."""
    pts = [p0.copy()]
    p = p0.copy()
    h = step
    length = 0.0
    max_steps = 200000
    for _ in range(max_steps):
        if length >= max_len:
            break
        try:
            k1 = rhs(p)
            k2 = rhs(p + 0.5 * h * k1)
            k3 = rhs(p + 0.75 * h * k2)
            pn = p + h * (2.0 / 9.0 * k1 + 1.0 / 3.0 * k2 + 4.0 / 9.0 * k3)
            k4 = rhs(pn)
            zn = p + h * (7.0 / 24.0 * k1 + 0.25 * k2 + 1.0 / 3.0 * k3 + 0.125 * k4)
        except (DomainError, DegeneracyError):
            break
        err = float(np.linalg.norm(pn - zn))
        if err <= tol * max(1.0, float(np.linalg.norm(p))):
            length += float(np.linalg.norm(pn - p))
            p = pn
            pts.append(p.copy())
            if stop is not None and stop(p):
                break
        factor = 0.9 * (tol / err) ** (1.0 / 3.0) if err > 0.0 else 5.0
        h = min(step, h * min(5.0, max(0.2, factor)))
        if h < 1e-14:
            break
    return pts


def integrate_curve(surface: Surface, seed: tuple[float, float], family: int,
                    step: float, max_len: float, tol: float = 1e-8,
                    stop_radius: float | None = None,
                    outer_radius: float | None = None,
                    initial_sign: float = 1.0,
                    coeff_scale: float | None = None) -> np.ndarray:
    """Integrate one principal curvature line from a non-umbilic seed.

    Stops at the domain boundary, at ``max_len`` arclength, inside the
    umbilic stop radius (10 * step by default), or outside ``outer_radius``
    when given.  The curve direction at the seed is the family direction
    times ``initial_sign``.  When ``coeff_scale`` (the norm of the equation
    1-jet) is given, curves also terminate on approaching any umbilic:
    family identity is undefined across a coefficient zero, so entering
    such a neighborhood is a normal termination, not a fault.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    p0 = np.array(seed, dtype=float)
    if stop_radius is None:
        stop_radius = 10.0 * step
    heading = {"ref": initial_sign * direction_at(surface, *seed, family)}

    def rhs(p: np.ndarray) -> np.ndarray:
        x, y = float(p[0]), float(p[1])
        if not in_domain(surface, x, y):
            raise DomainError("curve left the chart domain")
        A, B, C = kernel.abc_at(surface, x, y)
        if coeff_scale is not None:
            r = hypot(x, y)
            if abs(A) + abs(B) + abs(C) < 0.02 * coeff_scale * r:
                raise DegeneracyError("entered an umbilical neighborhood")
        v1, v2 = _solve_quadratic_directions(A, B, C)
        ref = heading["ref"]
        d = v1 if abs(v1 @ ref) >= abs(v2 @ ref) else v2
        if d @ ref < 0.0:
            d = -d
        heading["ref"] = d
        return d

    def stop(p: np.ndarray) -> bool:
        r = hypot(p[0], p[1])
        if r < stop_radius:
            return True
        return outer_radius is not None and r > outer_radius

    pts = _rk23(rhs, p0, step, max_len, tol, stop)
    return np.array(pts)


def integrate_lie_cartan(surface: Surface, seed, step: float, max_len: float,
                         tol: float = 1e-8, time_sign: float = 1.0,
                         drift_abort: float = 1e-4,
                         fd_step: float = 1e-5,
                         stop=None) -> np.ndarray:
    """Integrate the lifted field from a seed on the surface F = 0.

    The field is normalized to unit speed (a reparametrization that keeps
    trajectories intact) and every accepted step is projected back onto
    F = 0 by one Newton correction in z.  Drift beyond ``drift_abort``
    aborts with diagnostics.
    """
    p0 = np.array(seed, dtype=float)
    f0 = liecartan.lie_cartan_F(surface, *p0)
    if abs(f0) > 1e-6:
        raise ValueError(f"seed is not on the lifted surface: F = {f0!r}")

    def rhs(p: np.ndarray) -> np.ndarray:
        v = liecartan.lie_cartan_field(surface, p[0], p[1], p[2], fd_step=fd_step)
        n = float(np.linalg.norm(v))
        if n == 0.0:
            raise DegeneracyError("stationary point of the lifted field")
        return time_sign * v / n

    pts = [p0.copy()]
    p = p0.copy()
    h = step
    length = 0.0
    for _ in range(200000):
        if length >= max_len:
            break
        try:
            k1 = rhs(p)
            k2 = rhs(p + 0.5 * h * k1)
            k3 = rhs(p + 0.75 * h * k2)
            pn = p + h * (2.0 / 9.0 * k1 + 1.0 / 3.0 * k2 + 4.0 / 9.0 * k3)
            k4 = rhs(pn)
            zn = p + h * (7.0 / 24.0 * k1 + 0.25 * k2 + 1.0 / 3.0 * k3 + 0.125 * k4)
        except (DomainError, DegeneracyError):
            break
        err = float(np.linalg.norm(pn - zn))
        if err <= tol * max(1.0, float(np.linalg.norm(p))):
            # Newton projection in z back onto F = 0.
            A, B, _C = kernel.abc_at(surface, float(pn[0]), float(pn[1]))
            fval = liecartan.lie_cartan_F(surface, *pn)
            fz = 2.0 * A * pn[2] + B
            if abs(fz) > 1e-12:
                pn[2] -= fval / fz
            fval = liecartan.lie_cartan_F(surface, *pn)
            if abs(fval) > drift_abort:
                raise ConsistencyError(
                    f"lift drift |F| = {abs(fval)!r} at {pn.tolist()!r} "
                    f"exceeds {drift_abort!r}")
            length += float(np.linalg.norm(pn - p))
            p = pn
            pts.append(p.copy())
            if stop is not None and stop(p):
                break
        factor = 0.9 * (tol / err) ** (1.0 / 3.0) if err > 0.0 else 5.0
        h = min(step, h * min(5.0, max(0.2, factor)))
        if h < 1e-15:
            break
    return np.array(pts)


def _family_of_direction(surface: Surface, p: np.ndarray, d: np.ndarray) -> int:
    from .shape import screen_at

    s = screen_at(surface, float(p[0]), float(p[1]))
    pair = principal_directions(BdePoint(*kernel.abc_at(surface, float(p[0]), float(p[1]))), s)
    return 1 if abs(pair.d1 @ d) >= abs(pair.d2 @ d) else 2


def extract_separatrices(surface: Surface, verdict: UmbilicVerdict,
                         stop_radius: float, eps: float = 1e-4,
                         tol: float = 1e-8) -> list[Separatrix]:
    """Launch the lifted field from both sides of every saddle and project.

    Each saddle at (0, 0, z_i) contributes one separatrix curve through the
    umbilic, assembled from the two projected rays; the lift is integrated
    in the time direction that leaves the singularity along the eigenvector
    (1, z_i, 0) (forward when its eigenvalue is positive).
    """
    if not verdict.is_darbouxian:
        raise DegeneracyError(
            f"separatrices require a Darbouxian verdict, got {verdict.kind}")
    out = []
    for sing in verdict.saddles():
        z = sing.z
        v = np.array([1.0, z, 0.0])
        v /= np.linalg.norm(v)
        time_sign = 1.0 if sing.beta2 > 0 else -1.0
        rays = []
        for side in (1.0, -1.0):
            seed = np.array([0.0, 0.0, z]) + side * eps * v

            def stop(p: np.ndarray) -> bool:
                return hypot(p[0], p[1]) >= stop_radius

            traj = integrate_lie_cartan(surface, seed, step=eps * 10.0,
                                        max_len=50.0 * stop_radius, tol=tol,
                                        time_sign=time_sign, stop=stop)
            rays.append(traj[:, :2])
        direction = np.array([1.0, z])
        direction /= np.linalg.norm(direction)
        merged = np.vstack([rays[1][::-1], np.zeros((1, 2)), rays[0]])
        family = _family_of_direction(surface, rays[0][-1], direction)
        out.append(Separatrix(points=merged, direction=direction,
                              family=family, singularity=sing))
    return out


def approach_direction(points: np.ndarray) -> np.ndarray:
    """Limiting direction of a ray at the origin, as a unit vector.

    Chord directions satisfy d(r) = u + O(r); a linear extrapolation of the
    two innermost chords to r = 0 removes the first-order term.
    """
    pts = np.asarray(points, dtype=float)
    radii = np.hypot(pts[:, 0], pts[:, 1])
    order = np.argsort(radii)
    inner = [i for i in order if radii[i] > 1e-9][:2]
    if len(inner) < 2:
        raise ValueError("not enough points near the origin")
    i1, i2 = inner
    r1, r2 = radii[i1], radii[i2]
    d1 = pts[i1] / r1
    d2 = pts[i2] / r2
    if d1 @ d2 < 0:
        d2 = -d2
    u = (r2 * d1 - r1 * d2) / (r2 - r1) if abs(r2 - r1) > 1e-12 * r2 else d1
    return u / np.linalg.norm(u)


def angle_to_line(u: np.ndarray, v: np.ndarray) -> float:
    """Angle between two directions modulo orientation (line fields)."""
    c = abs(float(u @ v)) / (np.linalg.norm(u) * np.linalg.norm(v))
    return float(np.arccos(min(1.0, c)))


def build_portrait(surface: Surface, radius: float, seeds_per_family: int = 8,
                   h: float = 1e-3, tol: float = 1e-8,
                   verdict: UmbilicVerdict | None = None) -> Portrait:
    """Assemble separatrices plus rings of integral curves of both families.

    Near-umbilic dynamics run in the lift up to hand-off at 0.05 * radius;
    from there the separatrices continue by direct line-field integration.
    """
    if verdict is None:
        verdict = liecartan.classify_surface(surface, h)
    if not verdict.is_darbouxian:
        raise DegeneracyError(
            f"portrait requires a Darbouxian umbilic, got {verdict.kind}")
    handoff = 0.05 * radius
    step = 0.01 * radius
    coeff_scale = float(np.linalg.norm(
        liecartan.bde_one_jet_numeric(surface, h).as_array()))
    portrait = Portrait(verdict=verdict, radius=radius)

    for sep in extract_separatrices(surface, verdict, stop_radius=handoff, tol=tol):
        pieces = [sep.points]
        for end, orient in ((sep.points[-1], sep.points[-1] - sep.points[-2]),
                            (sep.points[0], sep.points[0] - sep.points[1])):
            ref = orient / np.linalg.norm(orient)
            d0 = direction_at(surface, float(end[0]), float(end[1]), sep.family)
            sign = 1.0 if d0 @ ref >= 0 else -1.0
            tail = integrate_curve(surface, (float(end[0]), float(end[1])),
                                   sep.family, step=step, max_len=4.0 * radius,
                                   tol=tol, stop_radius=0.5 * handoff,
                                   outer_radius=radius, initial_sign=sign,
                                   coeff_scale=coeff_scale)
            pieces.append(tail)
        merged = np.vstack([pieces[2][::-1], sep.points, pieces[1]])
        portrait.separatrices.append(
            Separatrix(points=merged, direction=sep.direction,
                       family=sep.family, singularity=sep.singularity))

    for family in (1, 2):
        for i in range(seeds_per_family):
            theta = 2.0 * pi * (i + 0.5 * (family - 1)) / seeds_per_family
            seed = (0.85 * radius * cos(theta), 0.85 * radius * sin(theta))
            if not in_domain(surface, *seed):
                continue
            halves = []
            for sign in (1.0, -1.0):
                try:
                    run = integrate_curve(surface, seed, family, step=step,
                                          max_len=4.0 * radius, tol=tol,
                                          stop_radius=handoff,
                                          outer_radius=radius,
                                          initial_sign=sign,
                                          coeff_scale=coeff_scale)
                except DegeneracyError:
                    continue
                halves.append(run)
            if len(halves) == 2:
                curve = np.vstack([halves[1][::-1], halves[0][1:]])
            elif halves:
                curve = halves[0]
            else:
                continue
            portrait.curves[family].append(curve)
    return portrait


# -- intersection sweep --------------------------------------------------------


def _segments_cross(p1, p2, q1, q2) -> bool:
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    eps = 1e-12
    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    return (o1 * o2 < -eps) and (o3 * o4 < -eps)


def same_family_crossings(curves: list[np.ndarray], exclude_radius: float) -> int:
    """Strict interior crossings between segments of one family, outside the
    umbilic's exclusion radius, via a uniform grid sweep."""
    segs = []
    for ci, curve in enumerate(curves):
        for j in range(len(curve) - 1):
            a, b = curve[j], curve[j + 1]
            if hypot(*a) < exclude_radius or hypot(*b) < exclude_radius:
                continue
            segs.append((ci, j, a, b))
    if not segs:
        return 0
    cell = max(max(np.linalg.norm(b - a) for _, _, a, b in segs), 1e-9)
    grid: dict[tuple[int, int], list[int]] = {}
    for idx, (_, _, a, b) in enumerate(segs):
        for pt in (a, b, (a + b) / 2.0):
            key = (int(pt[0] // cell), int(pt[1] // cell))
            bucket = grid.setdefault(key, [])
            if not bucket or bucket[-1] != idx:
                bucket.append(idx)
    crossings = 0
    checked = set()
    for bucket_key, bucket in grid.items():
        near = []
        bx, by = bucket_key
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                near.extend(grid.get((bx + dx, by + dy), []))
        for i in bucket:
            ci, si, a1, b1 = segs[i]
            for j in near:
                if j <= i or (i, j) in checked:
                    continue
                checked.add((i, j))
                cj, sj, a2, b2 = segs[j]
                if ci == cj and abs(si - sj) <= 1:
                    continue
                if _segments_cross(a1, b1, a2, b2):
                    crossings += 1
    return crossings
