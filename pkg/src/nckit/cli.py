"""Command surface.

    nckit reduce "x1*x2 - x2*x1" --theta profile.ini
    nckit verify star --seed 42 --cases 200
    nckit planewave wave.ini --json report.json
    nckit grid-check field.ncg

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage, parse,
or file-format error.  --json <path> writes a structured report (schema
"nckit-report/1") next to the human-readable output; exact rationals are
serialized as strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .config import ConfigError, load_config, load_theta
from .expr import (GradingError, ParseError, poly_to_expr,
                   reduce_expression)
from .grid import (band_limited_field, cross_validate_symbolic,
                   grid_cyclicity_defect, grid_trace_defect, load_grid,
                   phase_law_defect)
from .planewave import effective_action, harmonic_spectrum, is_theta_polarised
from .star import StarContext, ThetaProfile
from .suites import SUITE_NAMES, run_suite, theta_to_text

PHASE_TOL = 1e-8
TRACE_TOL = 1e-10
SERIES_TOL = 1e-6


def _write_json(path: str, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _theta_from_flag(path: str | None) -> ThetaProfile:
    if path is None:
        return ThetaProfile.zero()
    return load_theta(path)


# -- reduce -----------------------------------------------------------------

def _cmd_reduce(args) -> int:
    theta = _theta_from_flag(args.theta)
    ctx = StarContext(theta, eps_cutoff=args.order)
    result = reduce_expression(args.expression, ctx)
    print(result)
    if args.json:
        _write_json(args.json, {
            "schema": "nckit-report/1",
            "kind": "reduce",
            "input": args.expression,
            "theta": theta_to_text(theta),
            "order": args.order,
            "result": result,
        })
    return 0


# -- verify -----------------------------------------------------------------

def _cmd_verify(args) -> int:
    theta = load_theta(args.theta) if args.theta else None
    report = run_suite(args.suite, seed=args.seed, cases=args.cases,
                       order=args.order, theta=theta)
    for line in report.table():
        print(line)
    if args.json:
        _write_json(args.json, report.to_json_dict())
    return 0 if report.passed else 1


# -- planewave --------------------------------------------------------------

def _frac_str(v: Fraction) -> str:
    return str(Fraction(v))


def _cmd_planewave(args) -> int:
    cfg = load_config(args.specfile)
    if cfg.planewave is None:
        raise ConfigError(f"{args.specfile} has no [planewave] section")
    spec = cfg.planewave
    if args.theta:
        theta = load_theta(args.theta)
    elif cfg.theta is not None:
        theta = cfg.theta
    else:
        theta = ThetaProfile.zero()
    ctx = StarContext(theta)

    report = effective_action(spec, ctx)
    polarised = is_theta_polarised(spec, ctx)
    try:
        spectrum = harmonic_spectrum(spec, ctx)
        spectrum_note = None
    except ValueError as exc:
        spectrum = None
        spectrum_note = str(exc)
    passed = report.quad_matches_reference and (
        report.cubic_relative_sign in (None, -1))

    profile_txt = (spec.profile if isinstance(spec.profile, str)
                   else " ".join(str(c) for c in spec.profile))
    rows = [
        ("omega", _frac_str(spec.omega)),
        ("k", " ".join(map(_frac_str, spec.k))),
        ("p", " ".join(map(_frac_str, spec.p))),
        ("profile", profile_txt),
        ("null wave", "yes" if spec.is_null() else "no"),
        ("quadratic identity", "pass" if report.quad_matches_reference
                               else "FAIL"),
        ("cubic sign", "n/a" if report.cubic_relative_sign is None
                       else str(report.cubic_relative_sign)),
        ("quad value", _frac_str(report.quad_value)),
        ("cubic contracted", poly_to_expr(report.cubic_contracted)),
        ("polarised", "yes" if polarised else "no"),
    ]
    if spectrum is None:
        rows.append(("harmonics", f"unavailable ({spectrum_note})"))
    elif spectrum:
        rows.append(("harmonics", ", ".join(
            f"{n}: {_frac_str(c)}" for n, c in sorted(spectrum.items()))))
    else:
        rows.append(("harmonics", "none"))
    for diag in report.diagnostics:
        rows.append(("diagnostic", f"{diag['name']}: {diag['detail']}"))
    width = max(len(k) for k, _ in rows)
    for key, val in rows:
        print(f"{key:<{width}}  {val}")
    print(f"result: {'pass' if passed else 'FAIL'}")

    if args.json:
        _write_json(args.json, {
            "schema": "nckit-report/1",
            "kind": "planewave",
            "spec": {
                "omega": _frac_str(spec.omega),
                "k": [_frac_str(v) for v in spec.k],
                "p": [_frac_str(v) for v in spec.p],
                "profile": (spec.profile if isinstance(spec.profile, str)
                            else [_frac_str(c) for c in spec.profile]),
            },
            "theta": theta_to_text(theta),
            "null": spec.is_null(),
            "quad_matches_reference": report.quad_matches_reference,
            "cubic_relative_sign": report.cubic_relative_sign,
            "quad_value": _frac_str(report.quad_value),
            "cubic_contracted": poly_to_expr(report.cubic_contracted),
            "polarised": polarised,
            "harmonics": (None if spectrum is None else
                          {str(n): _frac_str(c)
                           for n, c in sorted(spectrum.items())}),
            "diagnostics": [dict(d) for d in report.diagnostics],
            "passed": passed,
        })
    return 0 if passed else 1


# -- grid-check ---------------------------------------------------------------

def _occupied_band(values: np.ndarray) -> int:
    """Largest signed mode index carrying more than roundoff weight."""
    n = values.shape[0]
    spec = np.abs(np.fft.fft2(values))
    top = spec.max()
    if top == 0.0:
        return 0
    idx = np.abs(np.fft.fftfreq(n, d=1.0 / n).astype(int))
    live = spec > 1e-12 * top
    band = 0
    for a1 in range(n):
        for a2 in range(n):
            if live[a1, a2]:
                band = max(band, int(idx[a1]), int(idx[a2]))
    return band


def _cmd_grid_check(args) -> int:
    try:
        field, theta = load_grid(args.gridfile)
    except (OSError, ValueError) as exc:
        print(f"nckit: {exc}", file=sys.stderr)
        return 2
    n, box = field.n, field.box_length
    band = _occupied_band(field.values)
    in_quarter = band <= n // 4

    phase = phase_law_defect(n, box, theta, (3, -2), (5, 7))
    partner = band_limited_field(n, box, max(1, n // 4 - 1), seed=args.seed)
    trace = grid_trace_defect(field, partner, theta)
    cyclic = grid_cyclicity_defect(field, partner, theta)
    series = cross_validate_symbolic({(1, 0): 1.0, (0, 1): 0.5},
                                     {(0, 2): 1.0, (0, 0): -0.25})

    checks = [
        ("phase-law defect", phase, PHASE_TOL),
        ("trace defect", trace, TRACE_TOL),
        ("cyclicity defect", cyclic, TRACE_TOL),
        ("series defect", series, SERIES_TOL),
    ]
    passed = all(v <= tol for _, v, tol in checks)

    print(f"grid file        {args.gridfile}")
    print(f"n                {n}")
    print(f"box length       {box!r}")
    print(f"theta            {theta!r}")
    print(f"occupied band    {band} "
          f"({'within' if in_quarter else 'beyond'} n/4 = {n // 4})")
    for name, value, tol in checks:
        mark = "pass" if value <= tol else "FAIL"
        print(f"{name:<16} {value:.3e}  (tol {tol:.0e})  {mark}")
    print(f"result: {'pass' if passed else 'FAIL'}")

    if args.json:
        _write_json(args.json, {
            "schema": "nckit-report/1",
            "kind": "grid-check",
            "gridfile": args.gridfile,
            "n": n,
            "box_length": box,
            "theta": theta,
            "occupied_band": band,
            "band_within_quarter": in_quarter,
            "checks": [
                {"name": name, "value": value, "tolerance": tol,
                 "passed": value <= tol}
                for name, value, tol in checks
            ],
            "passed": passed,
        })
    return 0 if passed else 1


# -- argument plumbing ----------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nckit",
        description="Exact star-product algebra with a time-dependent "
                    "deformation: reductions, verification suites, plane "
                    "wave reports, and the numerical grid oracle.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_red = sub.add_parser("reduce", help="canonicalize an expression")
    p_red.add_argument("expression")
    p_red.add_argument("--theta", metavar="FILE",
                       help="config file with a [theta] section")
    p_red.add_argument("--order", type=int, default=None, metavar="N",
                       help="eps truncation order")
    p_red.add_argument("--json", metavar="PATH",
                       help="also write a JSON report here")
    p_red.set_defaults(fn=_cmd_reduce)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=SUITE_NAMES)
    p_ver.add_argument("--theta", metavar="FILE",
                       help="pin the deformation profile for every case")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--cases", type=int, default=50)
    p_ver.add_argument("--order", type=int, default=2, metavar="N",
                       help="eps truncation order for the gauge sector")
    p_ver.add_argument("--json", metavar="PATH")
    p_ver.set_defaults(fn=_cmd_verify)

    p_pw = sub.add_parser("planewave",
                          help="report on a plane wave spec file")
    p_pw.add_argument("specfile")
    p_pw.add_argument("--theta", metavar="FILE",
                      help="override the spec file's [theta] section")
    p_pw.add_argument("--json", metavar="PATH")
    p_pw.set_defaults(fn=_cmd_planewave)

    p_gc = sub.add_parser("grid-check",
                          help="validate a saved grid field file")
    p_gc.add_argument("gridfile")
    p_gc.add_argument("--seed", type=int, default=0,
                      help="seed for the band-limited partner field")
    p_gc.add_argument("--json", metavar="PATH")
    p_gc.set_defaults(fn=_cmd_grid_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, GradingError, ConfigError) as exc:
        print(f"nckit: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"nckit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
