"""Command-line front end.

Subcommands: ``classify`` (one configuration to a JSON verdict), ``jet``
(measured vs closed-form equation 1-jet), ``sweep`` (grid over (a, b) to
CSV), ``portrait`` (SVG rendering), ``verify`` (property battery plus
theorem cross-validation).  Exit codes: 0 ok, 1 verification failure,
2 usage/config error, 3 degenerate or non-Darbouxian input.

Configurations may come from a flat key=value text file (``--config``),
with command-line flags taking precedence.  Generic-host parameters follow
the naming fa/fd/fb/fc for the cubic of the graph function f
(f = ... + fa/6 x^3 + fd/2 x^2 y + fb/2 x y^2 + fc/6 y^3) and
delta/epsilon/zeta/lam for the cubic of the height term g, plus gxx/gyy
for g's free second partials.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import kernel, liecartan, render, theorem, verification
from .errors import GeometryError
from .integrator import build_portrait
from .surfaces import (HOST_GENERIC, ROTATION_HOSTS, GraphSurface,
                       RotationSurface, Surface)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_DEGENERATE = 3


class ConfigError(Exception):
    pass


_FLOAT_KEYS = ("k", "a", "b", "c", "gxx", "gyy", "fa", "fd", "fb", "fc",
               "delta", "epsilon", "zeta", "lam", "f0", "margin", "h",
               "radius", "tol", "a_min", "a_max", "b_min", "b_max")
_INT_KEYS = ("samples", "seed", "seeds", "family", "a_steps", "b_steps")
_STR_KEYS = ("host", "out", "out_dir")
_KNOWN_KEYS = _FLOAT_KEYS + _INT_KEYS + _STR_KEYS


def parse_config(text: str) -> dict:
    """Parse a flat key=value configuration; unknown keys are rejected."""
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            if key in _FLOAT_KEYS:
                out[key] = float(value)
            elif key in _INT_KEYS:
                out[key] = int(value)
            else:
                out[key] = value
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: bad value for {key!r}: {exc}") from exc
    return out


def config_to_text(config: dict) -> str:
    lines = []
    for key in sorted(config):
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"unknown key {key!r}")
        lines.append(f"{key} = {config[key]}")
    return "\n".join(lines) + "\n"


_SURFACE_KEYS = ("host", "k", "a", "b", "c", "gxx", "gyy", "fa", "fd", "fb",
                 "fc", "delta", "epsilon", "zeta", "lam", "f0")


def _merged_options(args: argparse.Namespace) -> dict:
    merged: dict = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            merged.update(parse_config(fh.read()))
    for key, value in vars(args).items():
        if key in _KNOWN_KEYS and value is not None:
            merged[key] = value
    return merged


def build_surface(options: dict) -> Surface:
    host = options.get("host", "light-cone")
    if host in ROTATION_HOSTS:
        return RotationSurface(host=host,
                               k=options.get("k", 0.0),
                               a=options.get("a", 0.0),
                               b=options.get("b", 0.0),
                               c=options.get("c", 0.0))
    if host == HOST_GENERIC:
        return GraphSurface(
            k=options.get("k", 0.0),
            gxx=options.get("gxx", 0.0), gyy=options.get("gyy", 0.0),
            fa=options.get("fa", 0.0), fd=options.get("fd", 0.0),
            fb=options.get("fb", 0.0), fc=options.get("fc", 0.0),
            delta=options.get("delta", 0.0), epsilon=options.get("epsilon", 0.0),
            zeta=options.get("zeta", 0.0), lam=options.get("lam", 0.0),
            f0=options.get("f0", 0.0))
    raise ConfigError(f"unknown host {host!r}")


def _verdict_payload(surface: Surface, h: float, tol: float) -> tuple[dict, str]:
    jet = liecartan.bde_one_jet_numeric(surface, h)
    verdict = liecartan.classify_umbilic(jet, tol)
    if isinstance(surface, RotationSurface):
        closed = theorem.classify_closed_form(surface.a, surface.b, surface.c).kind
    else:
        closed = None
    payload = {
        "closed_form": closed,
        "numeric": verdict.kind,
        "roots": [float(z) for z in verdict.roots],
        "betas": [[float(s.beta2), float(s.beta3)] for s in verdict.singularities],
        "conditions": {"simple": verdict.simple, "transversal": verdict.transversal},
    }
    return payload, verdict.kind


def cmd_classify(args: argparse.Namespace) -> int:
    options = _merged_options(args)
    surface = build_surface(options)
    payload, kind = _verdict_payload(surface, options.get("h", 1e-3),
                                     options.get("tol", 1e-9))
    print(json.dumps(payload, sort_keys=True, indent=2))
    if kind not in (liecartan.D1, liecartan.D2, liecartan.D3):
        message = f"degenerate umbilic: {kind}"
        if isinstance(surface, RotationSurface):
            witness = surface.b * (surface.b - surface.a)
            message += f" (rotation host: b(b-a) = {witness})"
        print(message, file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def cmd_jet(args: argparse.Namespace) -> int:
    options = _merged_options(args)
    surface = build_surface(options)
    measured = liecartan.bde_one_jet_numeric(surface, options.get("h", 1e-3))
    reference = liecartan.reference_one_jet(surface)
    diff = float(np.max(np.abs(measured.as_array() - reference.as_array())))
    payload = {
        "numeric": {"a1": measured.a1, "a2": measured.a2,
                    "b1": measured.b1, "b2": measured.b2},
        "closed_form": {"a1": reference.a1, "a2": reference.a2,
                        "b1": reference.b1, "b2": reference.b2},
        "max_abs_difference": diff,
    }
    print(json.dumps(payload, sort_keys=True, indent=2))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    options = _merged_options(args)
    host = options.get("host", "light-cone")
    if host not in ROTATION_HOSTS:
        raise ConfigError("sweep requires a rotation host")
    a_values = np.linspace(options.get("a_min", -5.0), options.get("a_max", 5.0),
                           options.get("a_steps", 21))
    b_values = np.linspace(options.get("b_min", -5.0), options.get("b_max", 5.0),
                           options.get("b_steps", 21))
    c = options.get("c", 0.0)
    k = options.get("k", 0.0)
    h = options.get("h", 1e-3)
    margin = options.get("margin", theorem.DEFAULT_MARGIN)
    rows = []
    for a in a_values:
        for b in b_values:
            closed = theorem.classify_closed_form(float(a), float(b), c, margin)
            surface = RotationSurface(host, k=k, a=float(a), b=float(b), c=c)
            verdict = liecartan.classify_umbilic(
                liecartan.bde_one_jet_numeric(surface, h))
            rows.append(theorem.SampleRow(
                a=float(a), b=float(b), c=c,
                closed_form=closed.kind, numeric=verdict.kind,
                roots=verdict.roots,
                betas=tuple((s.beta2, s.beta3) for s in verdict.singularities)))
    out = options.get("out", "sweep.csv")
    theorem.report_rows_to_csv(rows, out)
    print(f"wrote {len(rows)} rows to {out}")
    return EXIT_OK


def cmd_portrait(args: argparse.Namespace) -> int:
    options = _merged_options(args)
    surface = build_surface(options)
    radius = options.get("radius", 0.25)
    try:
        portrait = build_portrait(surface, radius=radius,
                                  seeds_per_family=options.get("seeds", 8),
                                  h=options.get("h", 1e-3))
    except GeometryError as exc:
        print(f"cannot draw portrait: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    family = options.get("family")
    if family is not None and family not in (1, 2):
        raise ConfigError("family must be 1 or 2")
    out = options.get("out", "portrait.svg")
    with open(out, "w") as fh:
        fh.write(render.portrait_to_svg(portrait, family=family))
    print(f"wrote {out} ({portrait.verdict.kind}, "
          f"{len(portrait.separatrices)} separatrices)")
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(render.portrait_json_text(portrait))
        print(f"wrote {args.json_out}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    options = _merged_options(args)
    samples = options.get("samples", 10000)
    margin = options.get("margin", theorem.DEFAULT_MARGIN)
    seed = options.get("seed", 42)
    out_dir = options.get("out_dir", "verify-report")
    os.makedirs(out_dir, exist_ok=True)
    checks, reports = verification.run_all(samples=samples, margin=margin,
                                           seed=seed, k=options.get("k", 0.0),
                                           keep_rows=args.dump_samples)
    all_passed = all(c.passed for c in checks)
    with open(os.path.join(out_dir, "checks.csv"), "w") as fh:
        fh.write("name,status,detail\n")
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            print(f"{status} {c.name}: {c.detail}")
            fh.write(f'{c.name},{status},"{c.detail}"\n')
    summary = {"backend": kernel.backend(),
               "all_passed": all_passed,
               "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                          for c in checks],
               "cross_validation": {h: r.summary() for h, r in reports.items()}}
    with open(os.path.join(out_dir, "summary.json"), "w") as fh:
        json.dump(summary, fh, sort_keys=True, indent=2)
        fh.write("\n")
    for host, report in reports.items():
        if report.disagreements:
            theorem.report_rows_to_csv(
                report.disagreements,
                os.path.join(out_dir, f"disagreements_{host}.csv"))
        if args.dump_samples:
            theorem.report_rows_to_csv(
                report.rows, os.path.join(out_dir, f"samples_{host}.csv"))
    print(f"report written to {out_dir}/")
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


def _add_surface_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--host", choices=ROTATION_HOSTS + (HOST_GENERIC,),
                        help="null host (default light-cone)")
    parser.add_argument("--config", help="flat key=value configuration file")
    parser.add_argument("-k", "--k", type=float, help="principal curvature at the umbilic")
    for name, doc in (("a", "x^3/6"), ("b", "x y^2/2"), ("c", "y^3/6")):
        parser.add_argument(f"-{name}", f"--{name}", type=float,
                            help=f"height cubic coefficient of {doc} (rotation hosts)")
    parser.add_argument("--gxx", type=float, help="g_xx(0,0) (generic host)")
    parser.add_argument("--gyy", type=float, help="g_yy(0,0) (generic host)")
    for name in ("fa", "fd", "fb", "fc"):
        parser.add_argument(f"--{name}", type=float,
                            help=f"graph-function cubic coefficient {name} (generic host)")
    for name in ("delta", "epsilon", "zeta", "lam"):
        parser.add_argument(f"--{name}", type=float,
                            help=f"height cubic coefficient {name} (generic host)")
    parser.add_argument("--f0", type=float, help="f(0,0) offset (generic host)")
    parser.add_argument("--h", type=float, help="finite-difference step (default 1e-3)")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nullumbilics",
        description="Classify and draw principal configurations around "
                    "umbilics of spacelike surfaces in null hypersurfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one configuration to JSON")
    _add_surface_arguments(p)
    p.add_argument("--tol", type=float, help="transversality tolerance (default 1e-9)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("jet", help="measured vs closed-form equation 1-jet")
    _add_surface_arguments(p)
    p.set_defaults(func=cmd_jet)

    p = sub.add_parser("sweep", help="grid sweep over (a, b) to CSV")
    _add_surface_arguments(p)
    p.add_argument("--a-min", dest="a_min", type=float)
    p.add_argument("--a-max", dest="a_max", type=float)
    p.add_argument("--a-steps", dest="a_steps", type=int)
    p.add_argument("--b-min", dest="b_min", type=float)
    p.add_argument("--b-max", dest="b_max", type=float)
    p.add_argument("--b-steps", dest="b_steps", type=int)
    p.add_argument("--margin", type=float)
    p.add_argument("--out", help="output CSV path (default sweep.csv)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("portrait", help="render the principal configuration to SVG")
    _add_surface_arguments(p)
    p.add_argument("--radius", type=float, help="chart radius (default 0.25)")
    p.add_argument("--seeds", type=int, help="ring seeds per family (default 8)")
    p.add_argument("--family", type=int, choices=(1, 2),
                   help="render a single family")
    p.add_argument("--out", help="output SVG path (default portrait.svg)")
    p.add_argument("--json-out", dest="json_out", help="also dump geometry JSON")
    p.set_defaults(func=cmd_portrait)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--config", help="flat key=value configuration file")
    p.add_argument("--samples", type=int, help="cross-validation samples per host")
    p.add_argument("--margin", type=float, help="boundary exclusion margin")
    p.add_argument("--seed", type=int, help="rng seed (default 42)")
    p.add_argument("-k", "--k", type=float, help="curvature used for sampled surfaces")
    p.add_argument("--out-dir", dest="out_dir", help="report directory")
    p.add_argument("--dump-samples", action="store_true",
                   help="write every admitted sample row to CSV")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FileNotFoundError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GeometryError as exc:
        print(f"degenerate configuration: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
