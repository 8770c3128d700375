"""Throughput comparison of the compiled kernel against the pure fallback.

Run from the repository root:  python benchmarks/bench_backends.py
"""

import time

import numpy as np

from nullumbilics import kernel
from nullumbilics.surfaces import GraphSurface, RotationSurface
from nullumbilics.theorem import cross_validate


def time_scalar(surface, n: int) -> float:
    t0 = time.perf_counter()
    for i in range(n):
        kernel.abc_at(surface, 0.11, 0.07)
    return (time.perf_counter() - t0) / n * 1e6


def time_batch(surface, n: int) -> float:
    rng = np.random.default_rng(0)
    xs = rng.uniform(-0.5, 0.5, n)
    ys = rng.uniform(-0.5, 0.5, n)
    t0 = time.perf_counter()
    kernel.abc_batch(surface, xs, ys)
    return (time.perf_counter() - t0) / n * 1e6


def time_cross_validate(samples: int) -> float:
    t0 = time.perf_counter()
    cross_validate("light-cone", samples, seed=7)
    return time.perf_counter() - t0


def main() -> None:
    cone = RotationSurface("light-cone", 0.2, 3, 2, 1)
    graph = GraphSurface(0.4, 1.1, -0.3, 1, 2, 3, 4, 5, 6, 7, 8)
    rows = []
    for backend in kernel.available_backends():
        kernel.set_backend(backend)
        n_scalar = 20000 if backend == "compiled" else 2000
        n_batch = 200000 if backend == "compiled" else 5000
        n_cv = 2000 if backend == "compiled" else 400
        rows.append((
            backend,
            time_scalar(cone, n_scalar),
            time_scalar(graph, n_scalar),
            time_batch(cone, n_batch),
            time_cross_validate(n_cv) / n_cv * 1e3,
        ))
    kernel.set_backend(kernel.available_backends()[0])
    header = (f"{'backend':<10} {'abc cone us':>12} {'abc graph us':>13} "
              f"{'batch us/pt':>12} {'cross-val ms/sample':>20}")
    print(header)
    print("-" * len(header))
    for backend, a, b, c, d in rows:
        print(f"{backend:<10} {a:>12.2f} {b:>13.2f} {c:>12.3f} {d:>20.3f}")
    if len(rows) == 2:
        print(f"\nscalar speedup (cone): {rows[1][1] / rows[0][1]:.0f}x")


if __name__ == "__main__":
    main()
