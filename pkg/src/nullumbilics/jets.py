"""Order-2 truncated Taylor arithmetic in two surface coordinates.

A :class:`Jet2` carries a value together with its first and second partial
derivatives with respect to surface coordinates (x, y).  Sums, products,
quotients and square roots propagate every slot by the Leibniz and chain
rules, so a closed-form expression assembled from the generators
:func:`jet_x` / :func:`jet_y` is differentiated exactly (to second order)
at its base point.  Jets are immutable; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt as _sqrt

from .errors import JetDomainError


@dataclass(frozen=True, slots=True)
class Jet2:
    """Value and partial derivatives up to order two at a point."""

    v: float
    dx: float = 0.0
    dy: float = 0.0
    dxx: float = 0.0
    dxy: float = 0.0
    dyy: float = 0.0

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        o = _lift(other)
        return Jet2(self.v + o.v, self.dx + o.dx, self.dy + o.dy,
                    self.dxx + o.dxx, self.dxy + o.dxy, self.dyy + o.dyy)

    __radd__ = __add__

    def __sub__(self, other):
        o = _lift(other)
        return Jet2(self.v - o.v, self.dx - o.dx, self.dy - o.dy,
                    self.dxx - o.dxx, self.dxy - o.dxy, self.dyy - o.dyy)

    def __rsub__(self, other):
        return _lift(other) - self

    def __neg__(self):
        return Jet2(-self.v, -self.dx, -self.dy, -self.dxx, -self.dxy, -self.dyy)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            s = float(other)
            return Jet2(self.v * s, self.dx * s, self.dy * s,
                        self.dxx * s, self.dxy * s, self.dyy * s)
        a, b = self, other
        return Jet2(
            a.v * b.v,
            a.dx * b.v + a.v * b.dx,
            a.dy * b.v + a.v * b.dy,
            a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx,
            a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy,
            a.dyy * b.v + 2.0 * a.dy * b.dy + a.v * b.dyy,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _lift(other)
        return self * jet_recip(o)

    def __rtruediv__(self, other):
        return _lift(other) * jet_recip(self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("jet powers are limited to non-negative integers")
        out = jet_const(1.0)
        for _ in range(n):
            out = out * self
        return out


def _lift(x) -> Jet2:
    if isinstance(x, Jet2):
        return x
    if isinstance(x, (int, float)):
        return Jet2(float(x))
    raise TypeError(f"cannot mix Jet2 with {type(x).__name__}")


# -- generators ----------------------------------------------------------


def jet_const(c: float) -> Jet2:
    """Constant jet: all derivative slots zero."""
    return Jet2(float(c))


def jet_x(x: float) -> Jet2:
    """The x-coordinate generator evaluated at x."""
    return Jet2(float(x), dx=1.0)


def jet_y(y: float) -> Jet2:
    """The y-coordinate generator evaluated at y."""
    return Jet2(float(y), dy=1.0)


# -- nonlinear operations -------------------------------------------------


def jet_recip(b: Jet2) -> Jet2:
    """Multiplicative inverse 1/b; requires a nonzero value slot."""
    if b.v == 0.0:
        raise JetDomainError("jet division by zero in the value slot")
    iv = 1.0 / b.v
    iv2 = iv * iv
    iv3 = iv2 * iv
    return Jet2(
        iv,
        -b.dx * iv2,
        -b.dy * iv2,
        (2.0 * b.dx * b.dx - b.v * b.dxx) * iv3,
        (2.0 * b.dx * b.dy - b.v * b.dxy) * iv3,
        (2.0 * b.dy * b.dy - b.v * b.dyy) * iv3,
    )


def jet_sqrt(a: Jet2) -> Jet2:
    """Square root; requires a strictly positive value slot."""
    if a.v <= 0.0:
        raise JetDomainError(
            f"jet sqrt of non-positive value slot ({a.v!r})")
    s = _sqrt(a.v)
    h = 0.5 / s                 # d/du sqrt(u)
    q = 0.25 / (s * a.v)        # -d2/du2 sqrt(u)
    return Jet2(
        s,
        a.dx * h,
        a.dy * h,
        a.dxx * h - a.dx * a.dx * q,
        a.dxy * h - a.dx * a.dy * q,
        a.dyy * h - a.dy * a.dy * q,
    )
