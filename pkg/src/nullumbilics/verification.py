"""Programmatic verification battery behind the ``verify`` subcommand.

Each check re-runs one of the package's structural guarantees at a
configurable sample count and reports a pass/fail row; the theorem
cross-validation additionally yields per-sample reports for CSV export.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import liecartan, theorem
from .frame import eta_jet_check, frame_residuals, solve_eta
from .shape import screen_at, bde_at, xi_umbilicity_deviation
from .surfaces import (HOST_LIGHT_CONE, ROTATION_HOSTS, GraphSurface,
                       RotationSurface, Surface, immersion_point, in_domain)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _sample_point(surface: Surface, rng, radius: float = 0.6) -> tuple[float, float]:
    while True:
        x, y = rng.uniform(-radius, radius, size=2)
        if in_domain(surface, x, y) and x * x + y * y <= radius * radius:
            return float(x), float(y)


def _random_surfaces(rng, per_host: int = 2, span: float = 2.0) -> list[Surface]:
    out: list[Surface] = []
    for host in ROTATION_HOSTS:
        for _ in range(per_host):
            k, a, b, c = rng.uniform(-span, span, size=4)
            out.append(RotationSurface(host, k=k, a=a, b=b, c=c))
    for _ in range(per_host):
        p = rng.uniform(-span, span, size=11)
        out.append(GraphSurface(*p))
    return out


def check_frame_contract(seed: int = 0, points: int = 120,
                         tol: float = 1e-11) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for surface in _random_surfaces(rng):
        for _ in range(points):
            x, y = _sample_point(surface, rng)
            res = frame_residuals(solve_eta(immersion_point(surface, x, y)))
            worst = max(worst, max(abs(r) for r in res))
    return CheckResult("frame-contract", worst < tol,
                       f"max residual {worst:.3e} (tol {tol:g})")


def check_eta_linearization(seed: int = 1, draws: int = 10,
                            tol: float = 1e-6) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for surface in _random_surfaces(rng, per_host=max(1, draws // 4)):
        worst = max(worst, eta_jet_check(surface, 1e-4))
    return CheckResult("eta-linearization", worst < tol,
                       f"max deviation {worst:.3e} (tol {tol:g})")


def check_structural_identities(seed: int = 2, points: int = 150,
                                tol: float = 1e-10) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst_orth = 0.0
    worst_disc = 0.0
    for surface in _random_surfaces(rng):
        for _ in range(points):
            x, y = _sample_point(surface, rng)
            s = screen_at(surface, x, y)
            p = bde_at(s)
            scale = max(1.0, abs(p.A * s.E) + abs(p.B * s.F) + abs(p.C * s.G))
            worst_orth = max(worst_orth,
                             abs(p.A * s.E - p.B * s.F + p.C * s.G) / scale)
            disc = p.B * p.B - 4.0 * p.A * p.C
            dscale = max(1.0, p.B * p.B + abs(p.A * p.C))
            worst_disc = max(worst_disc, max(0.0, -disc) / dscale)
    ok = worst_orth < tol and worst_disc < tol
    return CheckResult("structural-identities", ok,
                       f"orthogonality {worst_orth:.3e}, "
                       f"discriminant deficit {worst_disc:.3e} (tol {tol:g})")


def check_xi_umbilicity(seed: int = 3, surfaces: int = 4,
                        tol: float = 1e-9) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(surfaces):
        k, a, b, c = rng.uniform(-2.0, 2.0, size=4)
        s = RotationSurface(HOST_LIGHT_CONE, k=k, a=a, b=b, c=c)
        worst = max(worst, xi_umbilicity_deviation(s, samples=100, seed=seed))
    return CheckResult("xi-total-umbilicity", worst < tol,
                       f"max coefficient {worst:.3e} (tol {tol:g})")


def check_reference_jets(seed: int = 4, draws: int = 12,
                         tol: float = 1e-7) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for surface in _random_surfaces(rng, per_host=max(1, draws // 4)):
        measured = liecartan.bde_one_jet_numeric(surface).as_array()
        expected = liecartan.reference_one_jet(surface).as_array()
        scale = max(1.0, float(np.max(np.abs(expected))))
        worst = max(worst, float(np.max(np.abs(measured - expected))) / scale)
    return CheckResult("reference-one-jets", worst < tol,
                       f"max relative deviation {worst:.3e} (tol {tol:g})")


def check_cross_validation(host: str, samples: int, margin: float,
                           seed: int, k: float = 0.0,
                           keep_rows: bool = False
                           ) -> tuple[CheckResult, theorem.CrossValidationReport]:
    report = theorem.cross_validate(host, samples, margin=margin, seed=seed,
                                    k=k, keep_rows=keep_rows)
    ok = report.all_agree
    detail = (f"{report.agreements}/{report.admitted} admitted samples agree, "
              f"{len(report.disagreements)} disagreements")
    return CheckResult(f"cross-validation-{host}", ok, detail), report


def run_all(samples: int = 10000, margin: float = 0.05, seed: int = 42,
            k: float = 0.0, keep_rows: bool = False
            ) -> tuple[list[CheckResult], dict[str, theorem.CrossValidationReport]]:
    checks = [
        check_frame_contract(seed),
        check_eta_linearization(seed + 1),
        check_structural_identities(seed + 2),
        check_xi_umbilicity(seed + 3),
        check_reference_jets(seed + 4),
    ]
    reports: dict[str, theorem.CrossValidationReport] = {}
    for host in ROTATION_HOSTS:
        result, report = check_cross_validation(host, samples, margin, seed,
                                                k=k, keep_rows=keep_rows)
        checks.append(result)
        reports[host] = report
    return checks, reports
