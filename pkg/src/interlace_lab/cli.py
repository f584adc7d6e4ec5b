"""Command-line front end.

Exit status: 0 on success, 1 when a verification or residual check fails,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import os
import re
import sys

from interlace_lab.analysis import Theorem, t2_2_threshold
from interlace_lab.identities import run_suite
from interlace_lab.laguerre import InvalidParameterError, LagParam
from interlace_lab.sweep import SweepSpec, parse_degrees, run_sweep
from interlace_lab.tables import FigureId, TableId, build_figure, build_table, format_sig
from interlace_lab.zeros import (
    DEFAULT_COMMON_TOL,
    PRECISION_ENV,
    PRECISION_MODES,
    compute_zeros,
    detect_common_zeros,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# flags whose values may start with a minus sign
_VALUE_FLAGS = ("--alpha", "--n")
_NEG_LIST = re.compile(r"^-[\d.][\d.eE+\-]*(,|\.\.)")


@contextlib.contextmanager
def _precision_env(mode):
    """Apply ``--precision`` to code that reads the environment, then restore it."""
    if mode is None:
        yield
        return
    old = os.environ.get(PRECISION_ENV)
    os.environ[PRECISION_ENV] = mode
    try:
        yield
    finally:
        if old is None:
            del os.environ[PRECISION_ENV]
        else:
            os.environ[PRECISION_ENV] = old


def _join_negative_values(argv):
    """Turn ``--alpha -0.9,0..3`` into ``--alpha=-0.9,0..3``.

    argparse already accepts a lone negative number as a value, but reads a
    list or range that starts with a minus sign as an unknown option.
    """
    out = []
    it = iter(range(len(argv)))
    for i in it:
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in _VALUE_FLAGS and nxt.startswith("-") and _NEG_LIST.match(nxt):
            out.append(f"{tok}={nxt}")
            next(it)
        else:
            out.append(tok)
    return out


def _digits(text):
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"digits must be an integer, got {text!r}") from None
    if not 3 <= d <= 15:
        raise argparse.ArgumentTypeError(f"digits must lie in [3, 15], got {d}")
    return d


def _float(text):
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _int(text):
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _jobs(text):
    j = _int(text)
    if j < 1:
        raise argparse.ArgumentTypeError("jobs must be at least 1")
    return j


def _common(p, fmt=True):
    if fmt:
        p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.add_argument("--precision", choices=PRECISION_MODES, default=None,
                   help="working precision; overrides INTERLACE_LAB_PRECISION")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="interlace-lab", description="Laguerre zero interlacing toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeros", help="zeros of one Laguerre polynomial")
    p.add_argument("--n", type=_int, required=True)
    p.add_argument("--alpha", type=_float, required=True)
    p.add_argument("--digits", type=_digits, default=15)
    _common(p)

    p = sub.add_parser("table", help="rebuild a published table")
    p.add_argument("table_id", choices=[t.value for t in TableId], type=str.upper)
    _common(p)

    p = sub.add_parser("figure", help="data behind a published figure")
    p.add_argument("figure_id", choices=[f.value for f in FigureId], type=str.upper)
    _common(p)

    p = sub.add_parser("verify", help="verify a theorem over a grid")
    p.add_argument("--theorem", required=True, choices=[t.value for t in Theorem], type=str.upper)
    p.add_argument("--n", required=True, help="degrees, e.g. 2..30")
    p.add_argument("--alpha", required=True, help="e.g. -0.9,-0.5,0..19:0.5,43")
    p.add_argument("--jobs", type=_jobs, default=os.cpu_count() or 1)
    p.add_argument("--tol", type=_float, default=DEFAULT_COMMON_TOL, help="common-zero tolerance")
    _common(p)

    p = sub.add_parser("identities", help="run the identity residual suite")
    p.add_argument("--samples", type=_int, default=200)
    p.add_argument("--seed", type=_int, default=0)
    p.add_argument("--tol", type=_float, default=1e-9)
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")

    p = sub.add_parser("common-zeros", help="shared zeros of two polynomials")
    p.add_argument("--n", type=_int, nargs=2, required=True, metavar=("N1", "N2"))
    p.add_argument("--alpha", type=_float, nargs=2, required=True, metavar=("A1", "A2"))
    p.add_argument("--tol", type=_float, default=DEFAULT_COMMON_TOL)
    _common(p)

    p = sub.add_parser("threshold", help="smallest alpha with full interlacing in the shift-by-two pair")
    p.add_argument("--n", required=True, help="degrees, e.g. 1..10")
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    return ap


def _emit_rows(rows, cols, fmt):
    if fmt == "json":
        return json.dumps(rows, indent=1)
    if fmt == "csv":
        buf = io.StringIO()
        wr = csv.DictWriter(buf, cols, lineterminator="\r\n")
        wr.writeheader()
        wr.writerows(rows)
        return buf.getvalue()
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    lines += ["| " + " | ".join(str(r[c]) for c in cols) + " |" for r in rows]
    return "\n".join(lines)


def cmd_zeros(args, out):
    zs = compute_zeros(LagParam(args.n, args.alpha), precision=args.precision)
    texts = [format_sig(float(z), args.digits) for z in zs.zeros]
    if args.format == "md":
        print(" ".join(texts), file=out)
        print(f"residual_bound: {zs.residual_bound:.3e}", file=out)
    else:
        rows = [{"index": k + 1, "zero": t, "full": repr(float(z))}
                for k, (t, z) in enumerate(zip(texts, zs.zeros))]
        if args.format == "json":
            print(json.dumps({"polynomial": str(zs.param), "zeros": rows,
                              "residual_bound": zs.residual_bound, "method": zs.method.value,
                              "precision": zs.precision}, indent=1), file=out)
        else:
            print(_emit_rows(rows, ["index", "zero", "full"], "csv"), end="", file=out)
    return EXIT_OK


def cmd_table(args, out):
    with _precision_env(args.precision):
        t = build_table(args.table_id)
    print(t.render(args.format), end="" if args.format == "csv" else "\n", file=out)
    return EXIT_OK


def cmd_figure(args, out):
    with _precision_env(args.precision):
        f = build_figure(args.figure_id)
    print(f.render(args.format), end="" if args.format == "csv" else "\n", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    spec = SweepSpec.parse(args.theorem, args.n, args.alpha, args.format)
    res = run_sweep(spec, jobs=args.jobs, tol=args.tol, precision=args.precision)
    if args.format == "md":
        print(res.summary(), file=out)
        for v in res.skipped:
            print(f"Skipped: {v.reproduction}: {v.notes}", file=out)
        for v in res.failures:
            print(f"FAIL: {v.reproduction}: {v.notes}", file=out)
    else:
        rows = [{"theorem": v.theorem.value, "n": v.param[0], "alpha": v.param[1],
                 "outcome": v.outcome.value,
                 "observed": v.observed_status.value if v.observed_status else "",
                 "predicted": v.predicted_status.value if v.predicted_status else "",
                 "notes": v.notes} for v in res.verdicts]
        cols = ["theorem", "n", "alpha", "outcome", "observed", "predicted", "notes"]
        text = _emit_rows(rows, cols, args.format)
        print(text, end="" if args.format == "csv" else "\n", file=out)
        print(res.summary(), file=sys.stderr)
        for v in res.failures:
            print(f"FAIL: {v.reproduction}", file=sys.stderr)
    return EXIT_FAIL if res.failures else EXIT_OK


def cmd_identities(args, out):
    if args.samples < 1:
        raise InvalidParameterError("samples must be positive")
    rows = run_suite(samples=args.samples, seed=args.seed, tol=args.tol)
    recs = [{"id": r.id.value, "samples": r.samples, "max_residual": f"{r.max_residual:.3e}",
             "max_discrepancy": f"{r.max_discrepancy:.3e}",
             "composed_residual": f"{r.max_composed_residual:.3e}",
             "passed": "PASS" if r.passed else "FAIL", "note": r.note} for r in rows]
    cols = ["id", "samples", "max_residual", "max_discrepancy", "composed_residual", "passed", "note"]
    text = _emit_rows(recs, cols, args.format)
    print(text, end="" if args.format == "csv" else "\n", file=out)
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def cmd_common_zeros(args, out):
    a = compute_zeros(LagParam(args.n[0], args.alpha[0]), precision=args.precision)
    b = compute_zeros(LagParam(args.n[1], args.alpha[1]), precision=args.precision)
    pairs = detect_common_zeros(a, b, args.tol)
    rows = [{"i": i + 1, "j": j + 1, "x_i": repr(float(a.zeros[i])), "y_j": repr(float(b.zeros[j]))}
            for i, j in pairs]
    if args.format == "md":
        head = f"{a.param} vs {b.param} at tol {args.tol:g}:"
        if not rows:
            print(f"{head} no common zeros", file=out)
        else:
            print(head, file=out)
            for r in rows:
                print(f"  x_{r['i']} = {r['x_i']}  ~  y_{r['j']} = {r['y_j']}", file=out)
    else:
        text = _emit_rows(rows, ["i", "j", "x_i", "y_j"], args.format)
        print(text, end="" if args.format == "csv" else "\n", file=out)
    return EXIT_OK


def cmd_threshold(args, out):
    rows = []
    for n in parse_degrees(args.n):
        if n < 1:
            raise InvalidParameterError("degrees must be >= 1")
        t = t2_2_threshold(n)
        rows.append({"n": n, "alpha_min": "none" if t is None else f"{t:.9g}"})
    text = _emit_rows(rows, ["n", "alpha_min"], args.format)
    print(text, end="" if args.format == "csv" else "\n", file=out)
    return EXIT_OK


_COMMANDS = {
    "zeros": cmd_zeros,
    "table": cmd_table,
    "figure": cmd_figure,
    "verify": cmd_verify,
    "identities": cmd_identities,
    "common-zeros": cmd_common_zeros,
    "threshold": cmd_threshold,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except InvalidParameterError as e:
        print(f"interlace-lab: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
