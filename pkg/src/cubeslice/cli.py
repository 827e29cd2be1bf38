"""Command-line interface: ``cubeslice <command> [options]``.

Commands
--------
section   A(a, t), D_1..D_n, P(a), bounds and the oracle cross-check
verify    run invariant suites; exit 1 if any check fails
ballfn    Ball's function rows, plot data, special points
bp        cube-versus-ball surface table and crossover roots
extremal  maximal-perimeter search

Output is a stream of rows, as JSON lines (default) or CSV with a fixed
header.  Settings are resolved in the order defaults < ``--config`` file <
``CUBESLICE_*`` environment variables < command-line flags.  A config file
holds flat ``key = value`` lines whose keys are the long flag names (with
either dashes or underscores); the environment variable for ``--abs-tol``
is ``CUBESLICE_ABS_TOL``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Optional, Sequence

import numpy as np

from . import ballfn, bpcheck, oracle
from .extremal import SearchConfig, search_max_perimeter
from .oscint import DivergentIntegralError, QuadratureSpec
from .sections import (ConvergenceError, canonicalize, cor5_bound, dk_all,
                       holder_bound, perimeter, projection_bound, section_volume)
from .suites import SUITES, SuiteOptions, run_suite

__all__ = ["main", "build_parser", "EXIT_OK", "EXIT_FAIL", "EXIT_USAGE", "EXIT_NUMERIC"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
ENV_PREFIX = "CUBESLICE_"


class UsageError(Exception):
    pass


# -- output ------------------------------------------------------------------

class RowWriter:
    """Writes rows with a fixed column order as JSON lines or CSV."""

    def __init__(self, stream, fmt: str, columns: Sequence[str]):
        self.stream = stream
        self.fmt = fmt
        self.columns = list(columns)
        if fmt == "csv":
            self.csv = csv.writer(stream, lineterminator="\n")
            self.csv.writerow(self.columns)

    def write(self, row: dict):
        if self.fmt == "json":
            self.stream.write(json.dumps({c: _jsonable(row.get(c)) for c in self.columns}) + "\n")
        else:
            self.csv.writerow([_cell(row.get(c)) for c in self.columns])


def _jsonable(v):
    if isinstance(v, (np.floating, np.integer)):
        v = v.item()
    if isinstance(v, float) and not math.isfinite(v):
        return None
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return v


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return ";".join(repr(float(x)) for x in v)
    if isinstance(v, dict):
        return json.dumps(_jsonable(v), sort_keys=True)
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


# -- argument parsing --------------------------------------------------------------

def _floats(text: str) -> list:
    try:
        vals = [float(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _n_range(text: str) -> list:
    """'3..8', '3-8' or '3,4,5'."""
    try:
        for sep in ("..", "-", ":"):
            if sep in text:
                lo, hi = text.split(sep)
                return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a dimension range: {text!r}")


def _p_range(text: str) -> list:
    """'start:stop:step' inclusive of stop (up to rounding)."""
    try:
        start, stop, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected start:stop:step, got {text!r}")
    if step <= 0 or stop < start:
        raise argparse.ArgumentTypeError("need step > 0 and stop >= start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["json", "csv"], default="json", help="row format")
    p.add_argument("--output", default="-", help="output path ('-' for stdout)")
    p.add_argument("--abs-tol", type=float, default=1e-10, help="quadrature absolute tolerance")
    p.add_argument("--rel-tol", type=float, default=1e-10, help="quadrature relative tolerance")
    p.add_argument("--config", help="flat key=value file with defaults for any flag")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubeslice", description="Sections of the cube and the polydisc.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("section", help="section volume, D_k, perimeter and bounds for one direction")
    p.add_argument("--a", type=_floats, required=True, help="direction, e.g. 1,1,0")
    p.add_argument("--field", choices=["real", "complex"], default="real")
    p.add_argument("--t", type=float, default=0.0, help="normalized distance from the origin")
    p.add_argument("--mc-samples", type=int, default=0,
                   help="Monte-Carlo samples for the complex cross-check (0 disables)")
    p.add_argument("--seed", type=int, default=0)
    _common(p)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--n", type=_n_range, default=list(range(3, 7)), help="dimensions, e.g. 3..8")
    p.add_argument("--samples", type=int, default=10, help="random directions per dimension and field")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", choices=["real", "complex", "both"], default="both")
    p.add_argument("--mc-samples", type=int, default=10**6)
    p.add_argument("--failures-only", action="store_true", help="emit only failing checks")
    _common(p)

    p = sub.add_parser("ballfn", help="Ball's function and its complex analogue")
    p.add_argument("--p", type=_floats, help="comma-separated exponents")
    p.add_argument("--range", type=_p_range, help="start:stop:step")
    p.add_argument("--special", action="store_true", help="special points p1, p2, p0")
    p.add_argument("--emit", choices=["rows", "plot-data"], default="rows",
                   help="plot-data forces CSV output")
    _common(p)

    p = sub.add_parser("bp", help="cube-versus-ball surface comparison")
    p.add_argument("--field", choices=["real", "complex", "both"], default="both")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--root", action="store_true", help="emit crossover roots only")
    _common(p)

    p = sub.add_parser("extremal", help="maximal-perimeter search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", choices=["real", "complex"], default="real")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid-resolution", type=int, default=12)
    p.add_argument("--multistarts", type=int, default=8)
    p.add_argument("--max-local-evals", type=int, default=200)
    p.add_argument("--local-tol", type=float, default=1e-8)
    p.add_argument("--snap", type=float, default=0.02)
    p.add_argument("--margin-tol", type=float, default=1e-6)
    _common(p)
    return parser


def _read_config(path: str) -> dict:
    out = {}
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key = value")
                key, value = (x.strip() for x in line.split("=", 1))
                out[key.replace("-", "_")] = value
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}")
    return out


def _env_settings(environ) -> dict:
    return {k[len(ENV_PREFIX):].lower(): v for k, v in environ.items()
            if k.startswith(ENV_PREFIX) and len(k) > len(ENV_PREFIX)}


def _subparser(parser, command):
    for action in parser._subparsers._group_actions:
        if command in action.choices:
            return action.choices[command]
    return None


def _apply_settings(sub: argparse.ArgumentParser, settings: dict, source: str) -> None:
    """Convert string settings with each flag's own type and install them as defaults."""
    by_dest = {a.dest: a for a in sub._actions if a.option_strings}
    defaults = {}
    for key, raw in settings.items():
        if key in ("config", "help"):
            continue
        action = by_dest.get(key)
        if action is None:
            if source == "config":
                raise UsageError(f"unknown config key {key!r}")
            continue
        if isinstance(action, argparse._StoreTrueAction):
            value = str(raw).strip().lower() in ("1", "true", "yes", "on")
        else:
            try:
                value = action.type(raw) if action.type else raw
            except (argparse.ArgumentTypeError, ValueError) as exc:
                raise UsageError(f"{source} value for {key}: {exc}")
            if action.choices is not None and value not in action.choices:
                raise UsageError(f"{source} value for {key} must be one of {list(action.choices)}")
        defaults[key] = value
    sub.set_defaults(**defaults)
    for a in sub._actions:
        if a.dest in defaults:
            a.required = False


def parse_args(argv: Optional[Sequence[str]] = None, environ=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    environ = os.environ if environ is None else environ
    parser = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    command = next((a for a in argv if not a.startswith("-")), None)
    sub = _subparser(parser, command) if command else None
    if sub is not None:
        if known.config:
            _apply_settings(sub, _read_config(known.config), "config")
        _apply_settings(sub, _env_settings(environ), "environment")
    return parser.parse_args(argv)


# -- commands -------------------------------------------------------------------------

def _spec(args) -> QuadratureSpec:
    try:
        return QuadratureSpec(abs_tol=args.abs_tol, rel_tol=args.rel_tol)
    except ValueError as exc:
        raise UsageError(str(exc))


SECTION_COLUMNS = ["quantity", "index", "value", "reference", "discrepancy", "field", "direction", "t"]


def cmd_section(args, out) -> int:
    spec = _spec(args)
    try:
        d = canonicalize(args.a, args.field)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.t < 0:
        raise UsageError("--t must be nonnegative")
    w = RowWriter(out, args.format, SECTION_COLUMNS)
    base = {"field": d.field, "direction": list(d.coords), "t": args.t}

    def row(quantity, value, index=None, reference=None):
        disc = None if reference is None else value - reference
        w.write(dict(base, quantity=quantity, index=index, value=value, reference=reference, discrepancy=disc))

    real = d.field == "real"
    A = section_volume(d, args.t, spec)
    ref = oracle.section_volume_oracle(d, args.t) if real else None
    if not real and args.mc_samples > 0 and args.t == 0:
        ref = oracle.mc_complex_section(d, samples=args.mc_samples, seed=args.seed).value
    row("A", A, reference=ref)
    D = dk_all(d, spec)
    for k, v in enumerate(D, start=1):
        dref = None
        if real and not math.isnan(v) and sum(c > 0 for i, c in enumerate(d.coords) if i != k - 1):
            dref = oracle.dk_oracle(d, k)
        row("D", None if math.isnan(v) else v, index=k, reference=dref)
    if d.n >= 3:
        P = perimeter(d, spec)
        row("P", P, reference=oracle.perimeter_oracle(d) if real else None)
    a1 = d.coords[0]
    if a1 > 1.0 / math.sqrt(2.0):
        row("projection_bound", projection_bound(d))
    elif real:
        row("holder_bound", holder_bound(d))
    row("cor5_bound", cor5_bound(args.t, d.l))
    return EXIT_OK


VERIFY_COLUMNS = ["suite", "name", "passed", "value", "bound", "relation", "margin", "tolerance", "inputs"]


def cmd_verify(args, out) -> int:
    fields = ("real", "complex") if args.field == "both" else (args.field,)
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    opts = SuiteOptions(n_values=args.n, samples=args.samples, seed=args.seed, fields=fields,
                        spec=_spec(args), mc_samples=args.mc_samples)
    w = RowWriter(out, args.format, VERIFY_COLUMNS)
    ok = True
    for rep in run_suite(args.suite, opts):
        for r in rep.records:
            if args.failures_only and r.passed:
                continue
            w.write(dict(r.as_dict(), suite=rep.name))
        ok &= rep.passed
        print(rep.summary(), file=sys.stderr)
        for k, v in rep.info.items():
            print(f"  {k}: {v}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


BALLFN_COLUMNS = ["p", "f", "f_complex", "kos"]
SPECIAL_COLUMNS = ["name", "value", "lower", "upper", "inside"]


def cmd_ballfn(args, out) -> int:
    if args.special:
        w = RowWriter(out, args.format, SPECIAL_COLUMNS)
        sp = ballfn.find_special_points()
        ok = True
        for name, value, lo, hi in (("p1", sp.p1, 2.165, 2.166), ("p2", sp.p2, 3.36, 3.37),
                                    ("p0", sp.p0, 4.46, 4.47), ("p0_witness", sp.p0_witness, 4.46, 4.47)):
            inside = lo < value < hi
            ok &= inside
            w.write({"name": name, "value": value, "lower": lo, "upper": hi, "inside": inside})
        return EXIT_OK if ok else EXIT_FAIL
    ps = list(args.p or []) + list(args.range or [])
    if not ps:
        raise UsageError("give --p, --range or --special")
    if any(p <= 1 for p in ps):
        raise UsageError("p must exceed 1")
    fmt = "csv" if args.emit == "plot-data" else args.format
    w = RowWriter(out, fmt, BALLFN_COLUMNS)
    for p in ps:
        fc = ballfn.ball_f_complex(p) if p > 4.0 / 3.0 else None
        w.write({"p": p, "f": ballfn.ball_f(p), "f_complex": fc, "kos": ballfn.kos_asymptotic(p)})
    return EXIT_OK


BP_COLUMNS = ["field", "n", "radius", "bp", "counterexample"]
BP_ROOT_COLUMNS = ["field", "root", "first_counterexample"]


def cmd_bp(args, out) -> int:
    fields = ("real", "complex") if args.field == "both" else (args.field,)
    if not 3 <= args.n_min <= args.n_max <= 200:
        raise UsageError("need 3 <= n-min <= n-max <= 200")
    if args.root:
        w = RowWriter(out, args.format, BP_ROOT_COLUMNS)
        for f in fields:
            w.write({"field": f, "root": bpcheck.bp_root(f), "first_counterexample": bpcheck.first_counterexample(f)})
        return EXIT_OK
    w = RowWriter(out, args.format, BP_COLUMNS)
    for f in fields:
        for r in bpcheck.bp_table(args.n_min, args.n_max, f):
            w.write({"field": f, "n": r.n, "radius": r.radius, "bp": r.bp, "counterexample": r.counterexample})
    return EXIT_OK


EXTREMAL_COLUMNS = ["n", "field", "best_direction", "best_value", "target_value", "margin",
                    "distance_to_a_max", "evaluations"]


def cmd_extremal(args, out) -> int:
    try:
        cfg = SearchConfig(n=args.n, field=args.field, grid_resolution=args.grid_resolution,
                           multistarts=args.multistarts, local_tol=args.local_tol, seed=args.seed,
                           max_local_evals=args.max_local_evals, snap=args.snap, spec=_spec(args))
    except ValueError as exc:
        raise UsageError(str(exc))
    rep = search_max_perimeter(cfg)
    w = RowWriter(out, args.format, EXTREMAL_COLUMNS)
    w.write({"n": args.n, "field": args.field, "best_direction": list(rep.best_direction.coords),
             "best_value": rep.best_value, "target_value": rep.target_value, "margin": rep.margin,
             "distance_to_a_max": rep.distance_to_a_max, "evaluations": rep.evaluations})
    return EXIT_OK if rep.margin >= -args.margin_tol else EXIT_FAIL


COMMANDS = {
    "section": cmd_section,
    "verify": cmd_verify,
    "ballfn": cmd_ballfn,
    "bp": cmd_bp,
    "extremal": cmd_extremal,
}


def main(argv: Optional[Sequence[str]] = None, environ=None) -> int:
    try:
        args = parse_args(argv, environ)
    except UsageError as exc:
        print(f"cubeslice: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    buffer = io.StringIO()
    try:
        code = COMMANDS[args.command](args, buffer)
    except UsageError as exc:
        print(f"cubeslice: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, DivergentIntegralError) as exc:
        print(f"cubeslice: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    text = buffer.getvalue()
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
