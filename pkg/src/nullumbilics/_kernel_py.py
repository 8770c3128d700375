"""Pure-Python kernel backend.

Single source of truth is the public geometry pipeline; this module only
adapts it to the kernel call signatures.  The completion index is pinned to
e0, which keeps the frame system full rank on every host (all hosts have
xi = (1, N) with <e0, xi> = -1 != 0), and matches the compiled core.
"""

from __future__ import annotations

import numpy as np

from .frame import solve_eta
from .shape import bde_at, screen_coefficients
from .surfaces import Surface, immersion_point


def screen_at(surface: Surface, x: float, y: float):
    jet = immersion_point(surface, x, y)
    frame = solve_eta(jet, completion=0)
    s = screen_coefficients(jet, frame)
    return s.e, s.f, s.g, s.E, s.F, s.G


def abc_at(surface: Surface, x: float, y: float):
    jet = immersion_point(surface, x, y)
    frame = solve_eta(jet, completion=0)
    p = bde_at(screen_coefficients(jet, frame))
    return p.A, p.B, p.C


def eta_at(surface: Surface, x: float, y: float):
    return tuple(solve_eta(immersion_point(surface, x, y), completion=0).eta)


def abc_batch(surface: Surface, xs, ys):
    n = len(xs)
    A = np.empty(n)
    B = np.empty(n)
    C = np.empty(n)
    for i in range(n):
        A[i], B[i], C[i] = abc_at(surface, float(xs[i]), float(ys[i]))
    return A, B, C
