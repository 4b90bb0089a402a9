"""Command-line front-end.

Subcommands:

* ``analyze``  - full single-point report (spectrum, ground state, E_S/E_F).
* ``sweep``    - theta or anisotropy-ratio sweeps written as CSV/JSON rows.
* ``spectrum`` - energy levels up to a maximum quantum number.
* ``validate`` - run the numerical oracles against the closed forms.

Exit codes: 0 success, 2 usage/configuration error, 3 singular
configuration, 4 I/O error, 5 validation failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import gaussian, oracles, oscillator
from .errors import (
    DomainError,
    GridConfigurationError,
    SingularConfigurationError,
    SpectrumInconsistencyError,
)
from .oscillator import OscillatorParams

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SINGULAR = 3
EXIT_IO = 4
EXIT_VALIDATION = 5

SWEEP_HEADER = "sweep_value,e_s,omega,e_f,sigma1,sigma2"


def _fmt(x: float) -> str:
    """CSV number format: 12 significant digits."""
    return f"{x:.12g}"


def _param_args(p: argparse.ArgumentParser, alphas: bool = True) -> None:
    p.add_argument("--m1", type=float, default=1.0, help="mass of oscillator 1")
    p.add_argument("--m2", type=float, default=1.0, help="mass of oscillator 2")
    if alphas:
        p.add_argument("--alpha1", type=float, default=1.0, help="stiffness of oscillator 1")
        p.add_argument("--alpha2", type=float, default=1.0, help="stiffness of oscillator 2")
    p.add_argument("--theta", type=float, default=0.0, help="noncommutativity parameter")


def _common_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", default=None, help="write results to this path instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default="json", help="output format")
    p.add_argument("--tolerance", type=float, default=1e-10, help="comparison tolerance")
    p.add_argument("--config", default=None, help="JSON file whose keys override flags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncho",
        description="Spectrum and noncommutativity-induced entanglement of the "
        "anisotropic oscillator on a noncommutative plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="single-point entanglement report")
    _param_args(p)
    _common_args(p)

    p = sub.add_parser("sweep", help="theta or anisotropy-ratio sweep")
    p.add_argument("--kind", choices=("theta", "ratio"), required=True)
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--product", type=float, default=2.0,
                   help="alpha1*alpha2 held fixed during a ratio sweep")
    _param_args(p)
    _common_args(p)

    p = sub.add_parser("spectrum", help="energy levels up to --n-max")
    p.add_argument("--n-max", type=int, default=2, help="largest quantum number per mode")
    _param_args(p)
    _common_args(p)

    p = sub.add_parser("validate", help="run numerical oracles")
    p.add_argument("--grid-points", type=int, default=257)
    p.add_argument("--grid-extent", type=float, default=8.0)
    _param_args(p)
    _common_args(p)

    return parser


def _apply_config(args: argparse.Namespace) -> None:
    if not args.config:
        return
    with open(args.config) as fh:
        overrides = json.load(fh)
    for key, value in overrides.items():
        dest = key.replace("-", "_")
        if not hasattr(args, dest):
            raise DomainError(f"unknown configuration key {key!r}")
        setattr(args, dest, value)


def _params_from(args: argparse.Namespace) -> OscillatorParams:
    return OscillatorParams(
        m1=args.m1, m2=args.m2, alpha1=args.alpha1, alpha2=args.alpha2, theta=args.theta
    )


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def analyze_report(params: OscillatorParams) -> dict:
    """All analyze quantities as a flat, ordered mapping."""
    canon = oscillator.bopp_shift(params)
    spec = oscillator.mode_spectrum(params)
    lam = oscillator.ground_state_lambda_closed(params, spec)
    e_s = oscillator.es_closed_form(params)
    omega, e_f = gaussian.entanglement_of_formation(e_s)
    bounds = oscillator.asymptotic_bounds(params)
    return {
        "m1": params.m1,
        "m2": params.m2,
        "alpha1": params.alpha1,
        "alpha2": params.alpha2,
        "theta": params.theta,
        "big_m1": canon.big_m1,
        "big_m2": canon.big_m2,
        "omega1_sq": canon.omega1_sq,
        "omega2_sq": canon.omega2_sq,
        "b": spec.b,
        "c": spec.c,
        "d": spec.d,
        "sigma1": spec.sigma1,
        "sigma2": spec.sigma2,
        "e00": oscillator.energy_level(spec, 0, 0),
        "lambda11": lam.lambda11,
        "lambda22": lam.lambda22,
        "lambda12_imag": lam.lambda12.imag,
        "r": oscillator.anisotropy_ratio(params),
        "e_s": e_s,
        "omega": omega,
        "e_f": e_f,
        "e_s_limit": bounds.e_s_limit,
        "omega0": bounds.omega0,
        "e_f_bound": bounds.e_f_bound,
        "separable": e_s >= 0,
    }


def _render_flat(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    keys = list(report)
    vals = [_fmt(v) if isinstance(v, float) else str(v) for v in report.values()]
    return ",".join(keys) + "\n" + ",".join(vals) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze_report(_params_from(args))
    _emit(_render_flat(report, args.format), args.output)
    return EXIT_OK


def sweep_rows(kind: str, start: float, stop: float, steps: int,
               m1: float, m2: float, alpha1: float, alpha2: float,
               theta: float, product: float) -> list[dict]:
    """Evaluate one sweep; each row carries the CSV column quantities."""
    if steps < 2 or not (start < stop):
        raise DomainError(f"need start < stop and steps >= 2, got [{start}, {stop}] x {steps}")
    if kind == "ratio" and start <= 0:
        raise DomainError("ratio sweeps require start > 0")
    rows = []
    for i in range(steps):
        value = start + (stop - start) * i / (steps - 1)
        if kind == "theta":
            params = OscillatorParams(m1=m1, m2=m2, alpha1=alpha1, alpha2=alpha2, theta=value)
        else:
            # Fix alpha1*alpha2 = product and set the anisotropy ratio to the
            # sweep value; with r = (a1/m1)/(a2/m2) this pins a1 uniquely.
            a1 = math.sqrt(product * value * m1 / m2)
            params = OscillatorParams(m1=m1, m2=m2, alpha1=a1, alpha2=product / a1, theta=theta)
        spec = oscillator.mode_spectrum(params)
        e_s = oscillator.es_closed_form(params)
        omega, e_f = gaussian.entanglement_of_formation(e_s)
        rows.append(
            {
                "sweep_value": value,
                "e_s": e_s,
                "omega": omega,
                "e_f": e_f,
                "sigma1": spec.sigma1,
                "sigma2": spec.sigma2,
            }
        )
    return rows


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = sweep_rows(
        args.kind, args.start, args.stop, args.steps,
        args.m1, args.m2, args.alpha1, args.alpha2, args.theta, args.product,
    )
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        lines = [SWEEP_HEADER]
        for row in rows:
            lines.append(",".join(_fmt(row[k]) for k in SWEEP_HEADER.split(",")))
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    if args.n_max < 0:
        raise DomainError(f"--n-max must be nonnegative, got {args.n_max}")
    spec = oscillator.mode_spectrum(_params_from(args))
    levels = [
        {"n1": n1, "n2": n2, "energy": oscillator.energy_level(spec, n1, n2)}
        for n1 in range(args.n_max + 1)
        for n2 in range(args.n_max + 1)
    ]
    levels.sort(key=lambda row: (row["energy"], row["n1"], row["n2"]))
    if args.format == "json":
        text = json.dumps(levels, indent=2) + "\n"
    else:
        lines = ["n1,n2,energy"]
        lines += [f"{r['n1']},{r['n2']},{_fmt(r['energy'])}" for r in levels]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    grid = oracles.GridSpec(extent=args.grid_extent, points_per_axis=args.grid_points)
    report = oracles.run_validation(_params_from(args), grid)
    payload = {
        "eigen_residual": report.eigen_residual,
        "schrodinger_residual": report.schrodinger_residual,
        "moment_max_err": report.moment_max_err,
        "es_spread": report.es_spread,
        "passed": report.passed,
    }
    _emit(_render_flat(payload, args.format), args.output)
    if report.passed:
        return EXIT_OK
    t = report.thresholds
    failing = [
        name
        for name, value, limit in (
            ("eigen_residual", report.eigen_residual, t.eigen),
            ("schrodinger_residual", report.schrodinger_residual, t.schrodinger),
            ("moment_max_err", report.moment_max_err, t.moments),
            ("es_spread", report.es_spread, t.es_spread),
        )
        if value >= limit
    ]
    print(f"validation failed: {', '.join(failing)} above threshold", file=sys.stderr)
    return EXIT_VALIDATION


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _apply_config(args)
        handler = {
            "analyze": cmd_analyze,
            "sweep": cmd_sweep,
            "spectrum": cmd_spectrum,
            "validate": cmd_validate,
        }[args.command]
        return handler(args)
    except (DomainError, GridConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SingularConfigurationError, SpectrumInconsistencyError) as exc:
        print(f"singular configuration: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())
