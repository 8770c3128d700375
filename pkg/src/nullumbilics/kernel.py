"""Hot-path evaluation of the coefficient pipeline, with backend selection.

The numeric classifier, the cross-validation harness and the integrators
evaluate surface jets, the null frame and the equation coefficients many
thousands of times.  A compiled core (``_kernel_c``, Cython) covers that
inner loop; a pure-Python fallback built on the public modules is selected
automatically when the extension is unavailable, or when the environment
variable ``NULLUMBILICS_PURE`` is set to a non-empty value other than "0".

Both backends implement the same scalar/batch API and agree to rounding;
``tests/test_kernel_parity.py`` pins that down.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from . import _kernel_py
from .surfaces import (HOST_CYLINDER, HOST_GENERIC, HOST_LIGHT_CONE,
                       HOST_NULL_PLANE, GraphSurface, RotationSurface, Surface)

_FORCE_PURE = os.environ.get("NULLUMBILICS_PURE", "0") not in ("", "0")

try:
    from . import _kernel_c
except ImportError:
    _kernel_c = None

_HOST_CODES = {
    HOST_NULL_PLANE: 0,
    HOST_LIGHT_CONE: 1,
    HOST_CYLINDER: 2,
    HOST_GENERIC: 3,
}

_active = "pure" if (_FORCE_PURE or _kernel_c is None) else "compiled"


def backend() -> str:
    """Name of the active backend: "compiled" or "pure"."""
    return _active


def available_backends() -> tuple[str, ...]:
    return ("compiled", "pure") if _kernel_c is not None else ("pure",)


def set_backend(name: str) -> None:
    """Switch backends at runtime (used by the benchmark and parity tests)."""
    global _active
    if name not in ("compiled", "pure"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _kernel_c is None:
        raise RuntimeError("compiled kernel is not available")
    _active = name


@lru_cache(maxsize=256)
def _encode(surface: Surface) -> tuple[int, np.ndarray]:
    code = _HOST_CODES[surface.host]
    if isinstance(surface, RotationSurface):
        params = np.array([surface.k, surface.a, surface.b, surface.c])
    else:
        params = np.array([surface.k, surface.gxx, surface.gyy,
                           surface.fa, surface.fd, surface.fb, surface.fc,
                           surface.delta, surface.epsilon, surface.zeta,
                           surface.lam, surface.f0])
    return code, params


def abc_at(surface: Surface, x: float, y: float) -> tuple[float, float, float]:
    """Coefficients (A, B, C) of the principal-line equation at (x, y)."""
    if _active == "compiled":
        code, params = _encode(surface)
        return _kernel_c.abc_at(code, params, x, y)
    return _kernel_py.abc_at(surface, x, y)


def screen_at(surface: Surface, x: float, y: float):
    """Screen and metric coefficients (e, f, g, E, F, G) at (x, y)."""
    if _active == "compiled":
        code, params = _encode(surface)
        return _kernel_c.screen_at(code, params, x, y)
    return _kernel_py.screen_at(surface, x, y)


def eta_at(surface: Surface, x: float, y: float):
    """The null transversal field at (x, y), as a 4-tuple."""
    if _active == "compiled":
        code, params = _encode(surface)
        return _kernel_c.eta_at(code, params, x, y)
    return _kernel_py.eta_at(surface, x, y)


def abc_batch(surface: Surface, xs, ys):
    """Vectorized :func:`abc_at` over equal-length coordinate arrays."""
    xs = np.ascontiguousarray(xs, dtype=float)
    ys = np.ascontiguousarray(ys, dtype=float)
    if xs.shape != ys.shape:
        raise ValueError("xs and ys must have matching shapes")
    if _active == "compiled":
        code, params = _encode(surface)
        A = np.empty_like(xs)
        B = np.empty_like(xs)
        C = np.empty_like(xs)
        _kernel_c.abc_batch(code, params, xs, ys, A, B, C)
        return A, B, C
    return _kernel_py.abc_batch(surface, xs, ys)
