"""Serialization of portraits: SVG drawings and JSON geometry dumps.

Output is deterministic: floats are formatted with a fixed shortest-form
rule and JSON keys are sorted, so identical portraits produce identical
bytes.
"""

from __future__ import annotations

import json

import numpy as np

from .integrator import Portrait

_SVG_SIZE = 640
_PLOT_HALF = 300.0


def _f(x: float) -> str:
    return format(float(x), ".6g")


def portrait_to_json(portrait: Portrait) -> dict:
    v = portrait.verdict
    return {
        "verdict": v.kind,
        "radius": float(portrait.radius),
        "roots": [float(z) for z in v.roots],
        "singularities": [
            {"z": float(s.z), "beta2": float(s.beta2), "beta3": float(s.beta3),
             "kind": s.kind}
            for s in v.singularities
        ],
        "separatrices": [
            {"family": s.family,
             "direction": [float(s.direction[0]), float(s.direction[1])],
             "points": [[float(x), float(y)] for x, y in s.points]}
            for s in portrait.separatrices
        ],
        "curves": {
            str(fam): [[[float(x), float(y)] for x, y in c] for c in curves]
            for fam, curves in portrait.curves.items()
        },
    }


def portrait_json_text(portrait: Portrait) -> str:
    return json.dumps(portrait_to_json(portrait), sort_keys=True)


def _path(points: np.ndarray, scale: float) -> str:
    cx = cy = _SVG_SIZE / 2.0
    coords = []
    for i, (x, y) in enumerate(points):
        sx = cx + scale * x
        sy = cy - scale * y
        coords.append(f"{'M' if i == 0 else 'L'}{_f(sx)} {_f(sy)}")
    return "".join(coords)


def portrait_to_svg(portrait: Portrait, family: int | None = None) -> str:
    """Render both foliations (or one, via ``family``) with distinguished
    separatrices; the verdict and root table ride along as a comment."""
    v = portrait.verdict
    scale = _PLOT_HALF / portrait.radius
    root_table = ", ".join(
        f"z={_f(s.z)} beta2={_f(s.beta2)} beta3={_f(s.beta3)} {s.kind}"
        for s in v.singularities)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_SIZE}" '
        f'height="{_SVG_SIZE}" viewBox="0 0 {_SVG_SIZE} {_SVG_SIZE}">',
        f"<!-- verdict={v.kind} radius={_f(portrait.radius)} "
        f"singularities=[{root_table}] -->",
        "<style>",
        ".fam1{stroke:#1f77b4;fill:none;stroke-width:1.1}",
        ".fam2{stroke:#d62728;fill:none;stroke-width:1.1}",
        ".sep{stroke:#111111;fill:none;stroke-width:2.4}",
        "</style>",
        f'<rect width="{_SVG_SIZE}" height="{_SVG_SIZE}" fill="#ffffff"/>',
    ]
    for fam in (1, 2):
        if family is not None and fam != family:
            continue
        for curve in portrait.curves[fam]:
            if len(curve) > 1:
                lines.append(f'<path class="fam{fam}" d="{_path(curve, scale)}"/>')
    for sep in portrait.separatrices:
        if family is not None and sep.family != family:
            continue
        if len(sep.points) > 1:
            lines.append(f'<path class="sep" d="{_path(sep.points, scale)}"/>')
    c = _SVG_SIZE / 2.0
    lines.append(f'<circle cx="{_f(c)}" cy="{_f(c)}" r="3.5" fill="#000000"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
