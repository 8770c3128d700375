"""The unique null transversal field of a spacelike surface in a null host.

At every surface point there is exactly one null vector eta that pairs to 1
with the host's null field xi and is orthogonal to both tangents.  It is
built pointwise: solve the three linear pairing constraints (one degree of
freedom pinned by a completion vector), then apply the null correction

    eta = w - (<w, w> / 2) xi,

which is branch-free and leaves the linear constraints untouched because
xi is null and orthogonal to the tangents.  The result does not depend on
the completion choice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError
from .minkowski import minkowski_dot
from .surfaces import Surface, SurfaceJet, check_domain, immersion_point

#: Expected value and first partials of eta at the umbilic, as functions of
#: the principal curvature k:  eta ~ (-1/2 - 0, -k x, -k y, 1/2).
ETA_ORIGIN = np.array([-0.5, 0.0, 0.0, 0.5])


@dataclass(frozen=True)
class NullFrame:
    """eta together with the surface data it was solved against."""

    eta: np.ndarray
    xi: np.ndarray
    phi_x: np.ndarray
    phi_y: np.ndarray


def _pairing_row(v: np.ndarray) -> np.ndarray:
    # Row r with r @ w == <v, w> for the (-,+,+,+) product.
    return np.array([-v[0], v[1], v[2], v[3]])


def solve_eta(jet: SurfaceJet, completion: int | None = None) -> NullFrame:
    """Solve for the null transversal field at one surface point.

    ``completion`` picks the canonical basis vector used to close the
    3x4 linear system; by default the best-conditioned choice (largest
    absolute determinant) is taken.  The returned eta is independent of
    this choice.
    """
    rows = [_pairing_row(jet.xi), _pairing_row(jet.phi_x), _pairing_row(jet.phi_y)]
    if completion is None:
        dets = []
        for j in range(4):
            e = np.zeros(4)
            e[j] = 1.0
            m = np.vstack(rows + [_pairing_row(e)])
            dets.append(abs(np.linalg.det(m)))
        completion = int(np.argmax(dets))
    e = np.zeros(4)
    e[completion] = 1.0
    m = np.vstack(rows + [_pairing_row(e)])
    rhs = np.array([1.0, 0.0, 0.0, 0.0])
    try:
        w = np.linalg.solve(m, rhs)
    except np.linalg.LinAlgError as exc:
        raise DegeneracyError(f"frame system is rank deficient: {exc}") from exc
    if not np.all(np.isfinite(w)) or np.max(np.abs(m @ w - rhs)) > 1e-8 * (1.0 + np.max(np.abs(w))):
        raise DegeneracyError("frame system is numerically singular")
    eta = w - 0.5 * minkowski_dot(w, w) * jet.xi
    return NullFrame(eta=eta, xi=jet.xi.copy(), phi_x=jet.phi_x.copy(),
                     phi_y=jet.phi_y.copy())


def eta_at(surface: Surface, x: float, y: float) -> np.ndarray:
    """Convenience wrapper: eta at chart point (x, y)."""
    return solve_eta(immersion_point(surface, x, y)).eta


def frame_residuals(frame: NullFrame) -> tuple[float, float, float, float]:
    """The four contract residuals (<eta,eta>, <eta,xi>-1, <eta,phi_x>, <eta,phi_y>)."""
    return (
        minkowski_dot(frame.eta, frame.eta),
        minkowski_dot(frame.eta, frame.xi) - 1.0,
        minkowski_dot(frame.eta, frame.phi_x),
        minkowski_dot(frame.eta, frame.phi_y),
    )


def eta_jet_check(surface: Surface, h: float) -> float:
    """Compare the finite-difference 1-jet of eta at the origin with its
    closed form (-1/2, -k x, -k y, 1/2).

    Uses a five-point stencil of spacing ``h`` with central differences and
    returns the largest absolute deviation over the value and both partials.
    """
    if not 1e-7 <= h <= 1e-2:
        raise ValueError("stencil spacing h must lie in [1e-7, 1e-2]")
    for (sx, sy) in ((0.0, 0.0), (h, 0.0), (-h, 0.0), (0.0, h), (0.0, -h)):
        check_domain(surface, sx, sy)

    def eta(px: float, py: float) -> np.ndarray:
        return solve_eta(immersion_point(surface, px, py)).eta

    e0 = eta(0.0, 0.0)
    dx = (eta(h, 0.0) - eta(-h, 0.0)) / (2.0 * h)
    dy = (eta(0.0, h) - eta(0.0, -h)) / (2.0 * h)
    k = surface.k
    dev = max(
        float(np.max(np.abs(e0 - ETA_ORIGIN))),
        float(np.max(np.abs(dx - np.array([0.0, -k, 0.0, 0.0])))),
        float(np.max(np.abs(dy - np.array([0.0, 0.0, -k, 0.0])))),
    )
    return dev
