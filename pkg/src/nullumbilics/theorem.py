"""Closed-form parameter classification for the rotation hosts, and the
harness that cross-validates it against the numerical blow-up pipeline.

For a rotation host with cubic height coefficients (a, b, c) the equation
1-jet is (0, b, a - b, -c), the fiber cubic is b z^3 - c z^2 + (a - 2b) z,
and the verdict depends only on the ratio r = a/b, the corner value
s2 = (c/2b)^2 + 2 (where the two non-central roots collide) and signs:

    D1  iff  r > s2                                (single real root, saddle)
    D2  iff  1 < r < s2 and b > 0,  or  2 < r < s2, b < 0, c > 0
    D3  iff  r < 1 and c != 0

Each covered clause is provable from the closed-form eigenvalues.  For
1 < r < s2 the central root z = 0 has eigenvalue product b^2 (r-1)(2-r);
writing u = 2 b Delta - c sqrt(Delta) for the outer root z1, one has
-u < b (r-2) < b (r-1) = a - b strictly whenever r > 2 and b > 0, so z1 is
a node and the pattern is saddle-node-saddle (D2) on that whole subregion.
For r < 1 all three roots are saddles for every sign of b and c.

Parameter points within a margin of any defining equality (b = 0, r = 1,
r = 2, r = s2, and the c-sign boundaries where a clause names c) are
reported as Boundary; sign patterns no clause covers (1 < r < 2 with
b < 0, and 2 < r < s2 with b < 0, c < 0) are reported as
OutsideClaimedRegion, never guessed.  All conditions are ratios and signs,
so the verdict is invariant under positive scaling of (a, b, c); margins
are applied to (a, b, c) normalized by their largest magnitude to keep the
boundary band scale-invariant as well.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field

import numpy as np

from . import liecartan
from .liecartan import D1, D2, D3
from .surfaces import ROTATION_HOSTS, RotationSurface

OUTSIDE = "OutsideClaimedRegion"
BOUNDARY = "Boundary"

DEFAULT_MARGIN = 0.05


@dataclass(frozen=True)
class ClosedFormVerdict:
    kind: str
    ratio: float | None = None
    corner: float | None = None
    signs: tuple[int, int, int] = (0, 0, 0)
    boundary: str | None = None


def classify_closed_form(a: float, b: float, c: float,
                         margin: float = DEFAULT_MARGIN) -> ClosedFormVerdict:
    """Apply the closed-form clauses with a margin-based boundary band."""
    if margin <= 0:
        raise ValueError("margin must be positive")
    signs = (int(np.sign(a)), int(np.sign(b)), int(np.sign(c)))
    m = max(abs(a), abs(b), abs(c))
    if m == 0.0:
        return ClosedFormVerdict(kind=BOUNDARY, signs=signs,
                                 boundary="all parameters vanish")
    if abs(b) <= margin * m:
        return ClosedFormVerdict(kind=BOUNDARY, signs=signs,
                                 boundary="b near 0")
    r = a / b
    s2 = (c / (2.0 * b)) ** 2 + 2.0
    base = dict(ratio=r, corner=s2, signs=signs)
    for value, name in ((1.0, "a/b near 1"), (2.0, "a/b near 2"),
                        (s2, "a/b near (c/2b)^2+2")):
        if abs(r - value) <= margin:
            return ClosedFormVerdict(kind=BOUNDARY, boundary=name, **base)
    if r > s2:
        return ClosedFormVerdict(kind=D1, **base)
    if r > 2.0:
        # 2 < r < s2: the two non-central roots are real and on one side of 0.
        if b > 0.0:
            return ClosedFormVerdict(kind=D2, **base)
        if abs(c) <= margin * m:
            return ClosedFormVerdict(kind=BOUNDARY, boundary="c near 0", **base)
        if c > 0.0:
            return ClosedFormVerdict(kind=D2, **base)
        return ClosedFormVerdict(kind=OUTSIDE, **base)
    if r > 1.0:
        if b > 0.0:
            return ClosedFormVerdict(kind=D2, **base)
        return ClosedFormVerdict(kind=OUTSIDE, **base)
    if abs(c) <= margin * m:
        return ClosedFormVerdict(kind=BOUNDARY, boundary="c near 0", **base)
    return ClosedFormVerdict(kind=D3, **base)


def matching_clauses(a: float, b: float, c: float) -> list[str]:
    """Evaluate the raw clauses with strict inequalities (no margins).

    Used to assert clause disjointness: no parameter point may satisfy two
    different classes.
    """
    if b == 0.0:
        return []
    r = a / b
    try:
        s2 = (c / (2.0 * b)) ** 2 + 2.0
    except OverflowError:
        s2 = float("inf")
    out = []
    if r > s2 and (a > b > 0 or a < b < 0):
        out.append(D1)
    if (1 < r < s2 and r != 2 and b > 0) or (2 < r < s2 and a < b < 0 and c > 0):
        out.append(D2)
    if r < 1 and c != 0:
        out.append(D3)
    return out


# -- cross-validation ---------------------------------------------------------


@dataclass(frozen=True)
class SampleRow:
    a: float
    b: float
    c: float
    closed_form: str
    numeric: str
    roots: tuple[float, ...]
    betas: tuple[tuple[float, float], ...]


@dataclass
class CrossValidationReport:
    host: str
    samples: int
    margin: float
    seed: int
    k: float
    admitted: int = 0
    agreements: int = 0
    histogram: dict[str, int] = field(default_factory=dict)
    disagreements: list[SampleRow] = field(default_factory=list)
    rows: list[SampleRow] = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return not self.disagreements

    def summary(self) -> dict:
        return {
            "host": self.host,
            "samples": self.samples,
            "margin": self.margin,
            "seed": self.seed,
            "k": self.k,
            "admitted": self.admitted,
            "agreements": self.agreements,
            "disagreements": len(self.disagreements),
            "histogram": dict(sorted(self.histogram.items())),
        }


def cross_validate(host: str, samples: int, margin: float = DEFAULT_MARGIN,
                   seed: int = 42, k: float = 0.0, h: float = 1e-3,
                   keep_rows: bool = False) -> CrossValidationReport:
    """Draw (a, b, c) uniformly from [-5, 5]^3, discard Boundary and
    OutsideClaimedRegion points, and compare the closed-form class against
    the full numerical pipeline on the rest.

    Disagreements are data, not faults; they are collected with their
    witnessing roots and eigenvalues.
    """
    if host not in ROTATION_HOSTS:
        raise ValueError(f"cross-validation applies to rotation hosts, not {host!r}")
    if samples <= 0:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    report = CrossValidationReport(host=host, samples=samples, margin=margin,
                                   seed=seed, k=k)
    draws = rng.uniform(-5.0, 5.0, size=(samples, 3))
    for a, b, c in draws:
        cf = classify_closed_form(float(a), float(b), float(c), margin)
        report.histogram[cf.kind] = report.histogram.get(cf.kind, 0) + 1
        if cf.kind not in (D1, D2, D3):
            continue
        report.admitted += 1
        surface = RotationSurface(host=host, k=k, a=float(a), b=float(b), c=float(c))
        jet = liecartan.bde_one_jet_numeric(surface, h)
        verdict = liecartan.classify_umbilic(jet)
        row = SampleRow(
            a=float(a), b=float(b), c=float(c),
            closed_form=cf.kind, numeric=verdict.kind,
            roots=verdict.roots,
            betas=tuple((s.beta2, s.beta3) for s in verdict.singularities),
        )
        if verdict.kind == cf.kind:
            report.agreements += 1
        else:
            report.disagreements.append(row)
        if keep_rows:
            report.rows.append(row)
    return report


def _fmt(x: float) -> str:
    return repr(float(x))


def report_rows_to_csv(rows: list[SampleRow], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["a", "b", "c", "closed_form", "numeric", "roots", "betas"])
        for row in rows:
            writer.writerow([
                _fmt(row.a), _fmt(row.b), _fmt(row.c),
                row.closed_form, row.numeric,
                ";".join(_fmt(z) for z in row.roots),
                ";".join(f"{_fmt(b2)}|{_fmt(b3)}" for b2, b3 in row.betas),
            ])


def report_summary_json(report: CrossValidationReport) -> str:
    return json.dumps(report.summary(), sort_keys=True, indent=2)
