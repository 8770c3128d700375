import numpy as np
import pytest

from nullumbilics.surfaces import (ROTATION_HOSTS, GraphSurface,
                                   RotationSurface, in_domain)


def richardson_d1(f, x: float, h: float) -> float:
    """First derivative by Richardson-extrapolated central differences."""
    d = lambda hh: (f(x + hh) - f(x - hh)) / (2.0 * hh)
    return (4.0 * d(h / 2) - d(h)) / 3.0


def richardson_d2(f, x: float, h: float) -> float:
    """Second derivative by Richardson-extrapolated 3-point stencils."""
    d = lambda hh: (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh)
    return (16.0 * d(h / 2) - d(h)) / 15.0


def cross_d2(f, x: float, y: float, h: float) -> float:
    """Mixed second derivative by the 4-point cross stencil, extrapolated."""
    def d(hh):
        return (f(x + hh, y + hh) - f(x + hh, y - hh)
                - f(x - hh, y + hh) + f(x - hh, y - hh)) / (4.0 * hh * hh)
    return (16.0 * d(h / 2) - d(h)) / 15.0


def sample_domain_point(surface, rng, radius: float = 0.6):
    while True:
        x, y = rng.uniform(-radius, radius, size=2)
        if x * x + y * y <= radius * radius and in_domain(surface, x, y):
            return float(x), float(y)


def random_rotation_surfaces(rng, per_host: int, span: float = 2.0):
    out = []
    for host in ROTATION_HOSTS:
        for _ in range(per_host):
            k, a, b, c = rng.uniform(-span, span, size=4)
            out.append(RotationSurface(host, k=k, a=a, b=b, c=c))
    return out


def random_graph_surfaces(rng, count: int, span: float = 2.0):
    return [GraphSurface(*rng.uniform(-span, span, size=11)) for _ in range(count)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
