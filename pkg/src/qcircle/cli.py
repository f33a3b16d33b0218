"""Command-line front end.

Every subcommand computes a table (or a one-row table for scalar results),
emits it as CSV (header row + rows, UTF-8) or as a JSON object
{"params": {...}, "result": [...]} with floats printed to 17 significant
digits, and optionally renders the matching matplotlib figure next to the
delimited output via --figure.

Exit status: 0 success; 2 invalid parameters; 3 divergent or boundary
convergence verdict; 4 window or overflow failures.  Errors are reported as
a single machine-parsable "error: ..." line on stderr.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from .errors import (
    BoundaryVerdictError,
    DegenerateReferenceError,
    InvalidParameterError,
    NonConvergentError,
    SummationOverflowError,
    WindowTooNarrowError,
)
from . import plots
from .operators import commutator_residual, eigen_residual
from .qmath import q_number
from .series import convergence_gate
from .states import (
    DeformationParams,
    StateLabel,
    amplitude,
    angle_distribution,
    empirical_gate,
    expectation_j,
    expectation_u,
    j_distribution,
    log_amplitude,
    norm_squared,
    overlap,
    relative_expectation_u,
    wavefunction,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_CONVERGENT = 3
EXIT_RANGE = 4


@dataclass
class Report:
    params: dict
    columns: List[str]
    rows: List[list]
    figure: Optional[Callable[[str], None]] = field(default=None, repr=False)


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------

def _cell(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _json_scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if math.isnan(v):
            return '"nan"'
        if math.isinf(v):
            return '"inf"' if v > 0 else '"-inf"'
        return format(v, ".17g")
    if isinstance(v, int):
        return str(v)
    if v is None:
        return "null"
    escaped = str(v).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _json_dumps(obj) -> str:
    if isinstance(obj, dict):
        body = ", ".join(f"{_json_scalar(str(k))}: {_json_dumps(v)}" for k, v in obj.items())
        return "{" + body + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_dumps(v) for v in obj) + "]"
    return _json_scalar(obj)


def _emit(report: Report, fmt: str, stream) -> None:
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(report.columns)
        for row in report.rows:
            writer.writerow([_cell(v) for v in row])
    else:
        doc = {
            "params": report.params,
            "result": [dict(zip(report.columns, row)) for row in report.rows],
        }
        stream.write(_json_dumps(doc) + "\n")


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _float_list(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats, got {text!r}") from exc


def _grid(lo: float, hi: float, step: float) -> List[float]:
    if step <= 0:
        raise InvalidParameterError(f"step must be positive, got {step}")
    n = int(round((hi - lo) / step))
    return [lo + k * step for k in range(n + 1) if lo + k * step <= hi + 1e-12]


def _angles_to_radians(args) -> None:
    if getattr(args, "degrees", False):
        for name in ("alpha", "beta"):
            if hasattr(args, name):
                setattr(args, name, math.radians(getattr(args, name)))


def _params(args) -> DeformationParams:
    return DeformationParams(args.q, getattr(args, "s", 1.0))


def _label(args) -> StateLabel:
    return StateLabel(args.l, getattr(args, "alpha", 0.0))


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_state(args) -> Report:
    params, label = _params(args), _label(args)
    rows = []
    mags = []
    js = list(range(-args.jmax, args.jmax + 1))
    for j in js:
        a = amplitude(j, label, params)
        lm = log_amplitude(j, label, params)[0]
        rows.append([j, a.real, a.imag, abs(a), lm])
        mags.append(abs(a))
    fig = lambda path: plots.save_state_figure(
        js, mags, path, title=f"amplitudes q={args.q:g} s={args.s:g} l={args.l:g}"
    )
    return Report(_echo(args, "q s l alpha jmax tol"), ["j", "re", "im", "abs", "log_abs"], rows, fig)


def _cmd_norm(args) -> Report:
    value = norm_squared(_label(args), _params(args), tol=args.tol)
    return Report(
        _echo(args, "q s l tol"),
        ["q", "s", "l", "norm_squared"],
        [[args.q, args.s, args.l, value]],
    )


def _cmd_overlap(args) -> Report:
    params = _params(args)
    v = overlap(StateLabel(args.l, args.alpha), StateLabel(args.h, args.beta), params, tol=args.tol)
    return Report(
        _echo(args, "q s l alpha h beta tol"),
        ["q", "s", "l", "alpha", "h", "beta", "re", "im", "abs"],
        [[args.q, args.s, args.l, args.alpha, args.h, args.beta, v.real, v.imag, abs(v)]],
    )


def _cmd_expect_j(args) -> Report:
    params = _params(args)
    v = expectation_j(_label(args), params, tol=args.tol)
    bracket = args.l if params.classical else q_number(args.l, args.q)
    rel = abs(v / bracket - 1.0) if bracket != 0.0 else math.nan
    return Report(
        _echo(args, "q s l tol"),
        ["q", "s", "l", "bracket_l", "expect_jq", "rel_err", "abs_err"],
        [[args.q, args.s, args.l, bracket, v, rel, abs(v - bracket)]],
    )


def _cmd_expect_u(args) -> Report:
    v = expectation_u(_label(args), _params(args), tol=args.tol)
    return Report(
        _echo(args, "q s l alpha tol"),
        ["q", "s", "l", "alpha", "re", "im", "abs", "arg"],
        [[args.q, args.s, args.l, args.alpha, v.real, v.imag, abs(v), math.atan2(v.imag, v.real)]],
    )


def _cmd_rel_u(args) -> Report:
    v = relative_expectation_u(_label(args), _params(args), tol=args.tol)
    return Report(
        _echo(args, "q s l alpha tol"),
        ["q", "s", "l", "alpha", "re", "im", "arg"],
        [[args.q, args.s, args.l, args.alpha, v.real, v.imag, math.atan2(v.imag, v.real)]],
    )


def _cmd_dist_j(args) -> Report:
    params, label = _params(args), _label(args)
    table = j_distribution(label, params, half_width=args.jmax)
    rows = [[int(j), float(p)] for j, p in zip(table.support, table.weights)]
    fig = lambda path: plots.save_j_distribution_figure(
        table.support,
        table.weights,
        path,
        title=f"p(j) at q={args.q:g} s={args.s:g} l={args.l:g}",
    )
    return Report(_echo(args, "q s l jmax tol"), ["j", "p"], rows, fig)


def _cmd_dist_phi(args) -> Report:
    params, label = _params(args), _label(args)
    table = angle_distribution(label, params, grid_size=args.grid)
    rows = [[float(phi), float(p)] for phi, p in zip(table.support, table.weights)]
    fig = lambda path: plots.save_angle_distribution_figure(
        table.support,
        table.weights,
        path,
        title=f"p(phi) at q={args.q:g} s={args.s:g} l={args.l:g} alpha={label.alpha:g}",
        alpha=label.alpha,
    )
    return Report(_echo(args, "q s l alpha grid tol"), ["phi", "p"], rows, fig)


def _cmd_scan_error(args) -> Report:
    rows = []
    for q in args.q_list:
        params = DeformationParams(q, args.s)
        for l in _grid(args.l_min, args.l_max, args.l_step):
            v = expectation_j(StateLabel(l, 0.0), params, tol=args.tol)
            bracket = l if params.classical else q_number(l, q)
            rel = abs(v / bracket - 1.0) if bracket != 0.0 else math.nan
            rows.append([q, l, bracket, v, rel])
    fig = lambda path: plots.save_scan_error_figure(
        rows, path, title="relative error of the angular-momentum expectation"
    )
    return Report(
        _echo(args, "q_list s l_min l_max l_step tol"),
        ["q", "l", "bracket_l", "expect_jq", "rel_err"],
        rows,
        fig,
    )


def _cmd_gate_map(args) -> Report:
    rows = []
    columns = ["q", "l", "s", "gate_value", "verdict"]
    if args.empirical:
        columns.append("empirical")
    for l in _grid(args.l_min, args.l_max, args.l_step):
        for s in args.s_list:
            verdict = convergence_gate(args.q, l, s)
            row = [args.q, l, s, verdict.gate_value, verdict.status.value]
            if args.empirical:
                row.append(empirical_gate(args.q, l, s).value)
            rows.append(row)
    fig = lambda path: plots.save_gate_map_figure(
        rows, path, title=f"convergence verdicts at q={args.q:g}"
    )
    return Report(_echo(args, "q l_min l_max l_step s_list empirical"), columns, rows, fig)


def _cmd_limit_check(args) -> Report:
    eps = args.eps
    s = args.s
    angles = (0.0, math.pi / 2.0)
    phis = (0.0, 1.0, math.pi)
    theta_params = DeformationParams(1.0, s)
    rows = []
    nan = math.nan
    for q in (1.0 - eps, 1.0 + eps):
        params = DeformationParams(q, s)
        for l in args.l_list:
            a = norm_squared(StateLabel(l, 0.0), params, tol=args.tol)
            b = norm_squared(StateLabel(l, 0.0), theta_params, tol=args.tol)
            rows.append(["norm", q, s, l, 0.0, nan, nan, nan, a, 0.0, b, 0.0, abs(a / b - 1.0)])
        for l in args.l_list:
            for h in args.l_list:
                for al in angles:
                    for be in angles:
                        a = overlap(StateLabel(l, al), StateLabel(h, be), params, tol=args.tol)
                        b = overlap(StateLabel(l, al), StateLabel(h, be), theta_params, tol=args.tol)
                        rows.append(
                            ["overlap", q, s, l, al, h, be, nan,
                             a.real, a.imag, b.real, b.imag, abs(a - b) / abs(b)]
                        )
        for l in args.l_list:
            for al in angles:
                for phi in phis:
                    a = wavefunction(phi, StateLabel(l, al), params, tol=args.tol)
                    b = wavefunction(phi, StateLabel(l, al), theta_params, tol=args.tol)
                    rows.append(
                        ["wavefunction", q, s, l, al, nan, nan, phi,
                         a.real, a.imag, b.real, b.imag, abs(a - b) / abs(b)]
                    )
    fig = lambda path: plots.save_limit_check_figure(
        rows, path, title=f"deformed vs theta closed forms at q = 1 +/- {eps:g}"
    )
    return Report(
        _echo(args, "eps s l_list tol"),
        ["quantity", "q", "s", "l", "alpha", "h", "beta", "phi",
         "deformed_re", "deformed_im", "theta_re", "theta_im", "rel_err"],
        rows,
        fig,
    )


def _cmd_algebra_check(args) -> Report:
    nan = math.nan
    rows = [
        ["commutator", args.q, nan, nan, nan, args.comm_width,
         commutator_residual(args.q, args.comm_width)],
        ["commutator-classical", 1.0, nan, nan, nan, args.comm_width,
         commutator_residual(1.0, args.comm_width)],
        ["eigen", args.q, args.s, args.l, args.alpha, args.jmax,
         eigen_residual(_label(args), _params(args), half_width=args.jmax)],
    ]
    return Report(
        _echo(args, "q s l alpha jmax comm_width"),
        ["check", "q", "s", "l", "alpha", "half_width", "residual"],
        rows,
    )


def _echo(args, names: str) -> dict:
    out = {"subcommand": args.subcommand}
    for name in names.split():
        out[name] = getattr(args, name)
    return out


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcircle",
        description="Deformed coherent states on the circle: tables, scans and residual checks.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-14, help="series tolerance")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="output file (default: stdout)")
    common.add_argument("--degrees", action="store_true",
                        help="interpret input angles as degrees")
    common.add_argument("--figure", default=None, metavar="PATH",
                        help="also render the matching figure to this file")

    qs = argparse.ArgumentParser(add_help=False)
    qs.add_argument("--q", type=float, required=True, help="deformation parameter q > 0")
    qs.add_argument("--s", type=float, default=1.0, help="squeeze parameter s > 0 (default 1)")

    lab = argparse.ArgumentParser(add_help=False)
    lab.add_argument("--l", type=float, required=True, help="angular-momentum label")
    lab.add_argument("--alpha", type=float, default=0.0, help="angle label (radians)")

    p = sub.add_parser("state", parents=[common, qs, lab], help="basis amplitude table")
    p.add_argument("--jmax", type=int, default=64)
    p.set_defaults(handler=_cmd_state)

    p = sub.add_parser("norm", parents=[common, qs, lab], help="squared norm")
    p.set_defaults(handler=_cmd_norm)

    p = sub.add_parser("overlap", parents=[common, qs, lab], help="overlap of two states")
    p.add_argument("--h", type=float, required=True, help="partner angular-momentum label")
    p.add_argument("--beta", type=float, default=0.0, help="partner angle (radians)")
    p.set_defaults(handler=_cmd_overlap)

    p = sub.add_parser("expect-j", parents=[common, qs, lab],
                       help="angular-momentum expectation")
    p.set_defaults(handler=_cmd_expect_j)

    p = sub.add_parser("expect-u", parents=[common, qs, lab],
                       help="position-unitary expectation")
    p.set_defaults(handler=_cmd_expect_u)

    p = sub.add_parser("rel-u", parents=[common, qs, lab],
                       help="relative position-unitary expectation")
    p.set_defaults(handler=_cmd_rel_u)

    p = sub.add_parser("dist-j", parents=[common, qs, lab],
                       help="momentum distribution table")
    p.add_argument("--jmax", type=int, default=None,
                   help="window half-width (default: auto-widen from 64)")
    p.set_defaults(handler=_cmd_dist_j)

    p = sub.add_parser("dist-phi", parents=[common, qs, lab],
                       help="angular probability density table")
    p.add_argument("--grid", type=int, default=512, help="grid points over [0, 2pi)")
    p.set_defaults(handler=_cmd_dist_phi)

    p = sub.add_parser("scan-error", parents=[common],
                       help="relative-error scan of the angular-momentum expectation")
    p.add_argument("--q-list", type=_float_list, default=[0.5])
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--l-min", type=float, default=0.3)
    p.add_argument("--l-max", type=float, default=3.0)
    p.add_argument("--l-step", type=float, default=0.1)
    p.set_defaults(handler=_cmd_scan_error)

    p = sub.add_parser("gate-map", parents=[common],
                       help="convergence-gate verdicts over the (l, s) plane")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--l-min", type=float, default=-2.0)
    p.add_argument("--l-max", type=float, default=3.0)
    p.add_argument("--l-step", type=float, default=0.25)
    p.add_argument("--s-list", type=_float_list, default=[0.25, 0.5, 0.75, 1.0, 1.5])
    p.add_argument("--empirical", action="store_true",
                   help="add the measured ratio-test verdict column")
    p.set_defaults(handler=_cmd_gate_map)

    p = sub.add_parser("limit-check", parents=[common],
                       help="deformed values against theta closed forms near q = 1")
    p.add_argument("--eps", type=float, default=1e-4)
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--l-list", type=_float_list, default=[0.0, 1.0, 2.0])
    p.set_defaults(handler=_cmd_limit_check)

    p = sub.add_parser("algebra-check", parents=[common, qs, lab],
                       help="commutator and eigen-relation residuals")
    p.add_argument("--jmax", type=int, default=64, help="half-width for the eigen check")
    p.add_argument("--comm-width", type=int, default=50,
                   help="half-width for the commutator checks")
    p.set_defaults(handler=_cmd_algebra_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _angles_to_radians(args)
    try:
        report: Report = args.handler(args)
        if args.figure is not None:
            if report.figure is None:
                raise InvalidParameterError(
                    f"subcommand {args.subcommand!r} has no figure rendering"
                )
            report.figure(args.figure)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (NonConvergentError, BoundaryVerdictError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGENT
    except (WindowTooNarrowError, SummationOverflowError, DegenerateReferenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE

    if args.output is None:
        _emit(report, args.format, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            _emit(report, args.format, handle)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
