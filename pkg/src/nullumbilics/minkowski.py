"""Linear algebra over Minkowski 4-space with signature (-, +, +, +).

Vectors are plain numpy arrays of shape (4,); index 0 is the timelike
coordinate relative to the canonical basis e0..e3.
"""

from __future__ import annotations

import numpy as np

SPACELIKE = "spacelike"
TIMELIKE = "timelike"
NULL = "null"
ZERO = "zero"

#: Default width of the null band, scaled by the Euclidean square of the vector.
NULL_BAND_TOL = 1e-9


def vec(u0: float, u1: float, u2: float, u3: float) -> np.ndarray:
    """Build a spacetime vector from its canonical coordinates."""
    return np.array([u0, u1, u2, u3], dtype=float)


def minkowski_dot(u, v) -> float:
    """Scalar product -u0*v0 + u1*v1 + u2*v2 + u3*v3."""
    return float(-u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3])


def minkowski_norm2(v) -> float:
    """Self-pairing <v, v>; negative for timelike, zero for null vectors."""
    return minkowski_dot(v, v)


def causal_character(v, tol: float = NULL_BAND_TOL) -> str:
    """Classify a vector as spacelike/timelike/null/zero.

    A vector counts as zero when every coordinate is below ``tol`` in
    magnitude, and as null when its self-pairing is below ``tol`` times its
    Euclidean square (all vectors produced by the host parametrizations are
    exactly null up to rounding, so a scaled band is appropriate).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    v = np.asarray(v, dtype=float)
    if np.max(np.abs(v)) < tol:
        return ZERO
    q = minkowski_norm2(v)
    euclid2 = float(v @ v)
    if abs(q) < tol * euclid2:
        return NULL
    return SPACELIKE if q > 0 else TIMELIKE
