"""Command line: ``alphaforest verify | scan-spectral | scan-turan | family``.

Exit codes: 0 success, 2 parameter or malformed input, 3 capacity error, 4 numeric failure,
5 a gating closed form (family-level polynomial or quadratic) failed to match.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Sequence, TextIO

from .errors import CapacityError, Graph6Error, NumericError, ParameterError
from .enumeration import read_graph6_stream
from .forests import make_spec
from .harness import (DEFAULT_ALPHAS, empirical_threshold, family_summary, run_verify,
                      scan_spectral, scan_turan)
from .parallel import default_jobs

EXIT_OK, EXIT_PARAM, EXIT_CAPACITY, EXIT_NUMERIC, EXIT_MISMATCH = 0, 2, 3, 4, 5

VERIFY_COLUMNS = ["formula", "n", "p", "alpha", "printed", "oracle", "numeric", "delta",
                  "verdict", "gating"]
SCAN_COLUMNS = ["spec", "alpha", "n", "graphs_scanned", "observed_max", "observed_extremal",
                "predicted_value", "predicted_graph", "verdict", "runtime_ms", "note"]


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "nan" if math.isnan(value) else f"{value:.9f}"
    return str(value)


def _jsonable(value):
    if isinstance(value, float):
        return None if math.isnan(value) else round(value, 9)
    return value


def write_rows(rows: list[dict], columns: list[str], fmt_name: str, out: TextIO) -> None:
    if fmt_name == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([fmt(row.get(c)) for c in columns])
    else:
        for row in rows:
            out.write(json.dumps({c: _jsonable(row.get(c)) for c in columns}) + "\n")


def write_note(payload: dict, fmt_name: str, out: TextIO) -> None:
    if fmt_name == "csv":
        out.write("# " + " ".join(f"{k}={fmt(v)}" for k, v in payload.items()) + "\n")
    else:
        out.write(json.dumps({k: _jsonable(v) for k, v in payload.items()}) + "\n")


def parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ParameterError(f"bad range {text!r}; use a..b or a single integer") from None
    if lo > hi:
        raise ParameterError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def parse_alphas(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ParameterError(f"bad alpha list {text!r}") from None


def _load_input(args) -> list | None:
    if not args.input:
        return None
    stream = read_graph6_stream(args.input, strict=args.strict)
    graphs = list(stream)
    for d in stream.diagnostics:
        print(f"{stream.source}:{d.line}: {d.message}", file=sys.stderr)
    return graphs


def cmd_verify(args, out: TextIO) -> int:
    alphas = parse_alphas(args.alphas) if args.alphas else list(DEFAULT_ALPHAS)
    result = run_verify(args.n_max, args.p_max, alphas, numeric=not args.no_numeric)
    rows = []
    for r in result.rows:
        row = r.report.as_row()
        row["numeric"] = r.numeric
        rows.append(row)
    write_rows(rows, VERIFY_COLUMNS, args.format, out)
    for formula, count in sorted(result.discrepancies().items()):
        gating = any(r.report.gating for r in result.rows if r.report.formula == formula)
        write_note({"discrepancy": formula, "mismatched_rows": count, "gating": gating},
                   args.format, out)
    typos = [r for r in result.rayleigh if r["verdict"] != "Match"]
    write_note({"discrepancy": "rayleigh_as_printed", "mismatched_rows": len(typos),
                "checked_rows": len(result.rayleigh), "gating": False}, args.format, out)
    if result.numeric_failures:
        return EXIT_NUMERIC
    return EXIT_MISMATCH if result.gating_failures else EXIT_OK


def _scan_output(reports, args, out: TextIO) -> int:
    rows = [r.as_row() for r in reports]
    if not args.timing:
        # wall-clock time would make reports differ run to run
        for row in rows:
            row["runtime_ms"] = None
    write_rows(rows, SCAN_COLUMNS, args.format, out)
    write_note({"empirical_threshold": empirical_threshold(reports)}, args.format, out)
    return EXIT_OK


def cmd_scan_spectral(args, out: TextIO) -> int:
    spec = make_spec(args.forest)
    reports = scan_spectral(spec, args.alpha, parse_range(args.n), _load_input(args), args.jobs)
    return _scan_output(reports, args, out)


def cmd_scan_turan(args, out: TextIO) -> int:
    spec = make_spec(args.forest)
    reports = scan_turan(spec, parse_range(args.n), _load_input(args), args.jobs)
    return _scan_output(reports, args, out)


def cmd_family(args, out: TextIO) -> int:
    summary = family_summary(args.family, int(args.n), args.p, args.alpha)
    if args.format == "json":
        out.write(json.dumps(summary) + "\n")
        return EXIT_OK
    for key, value in summary.items():
        if key == "printed":
            for name, v in value.items():
                out.write(f"printed[{name}]: {fmt(v)}\n")
        else:
            out.write(f"{key}: {fmt(value)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alphaforest", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, scan=False):
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        if scan:
            p.add_argument("--forest", required=True, help="path orders, e.g. 5,3")
            p.add_argument("--n", required=True, help="order range a..b")
            p.add_argument("--input", help="graph6 file, or - for stdin")
            p.add_argument("--strict", action="store_true", help="abort on the first bad graph6 line")
            p.add_argument("--jobs", type=int, default=default_jobs())
            p.add_argument("--timing", action="store_true", help="fill the runtime_ms column")

    v = sub.add_parser("verify", help="printed closed forms vs the quotient oracle")
    v.add_argument("--n-max", type=int, default=40)
    v.add_argument("--p-max", type=int, default=4)
    v.add_argument("--alphas", help="comma-separated alphas (default 0.1..0.9)")
    v.add_argument("--alpha", dest="alphas", help="alias of --alphas")
    v.add_argument("--no-numeric", action="store_true", help="skip the full-graph eigensolve")
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan-spectral", help="maximise rho_alpha over F-free graphs")
    s.add_argument("--alpha", type=float, required=True)
    common(s, scan=True)
    s.set_defaults(func=cmd_scan_spectral)

    t = sub.add_parser("scan-turan", help="brute-force ex(n, F) against the printed bounds")
    common(t, scan=True)
    t.set_defaults(func=cmd_scan_turan)

    f = sub.add_parser("family", help="inspect S, S+ or F")
    f.add_argument("--family", required=True, choices=["S", "S+", "F"])
    f.add_argument("--n", required=True, type=int)
    f.add_argument("--p", required=True, type=int)
    f.add_argument("--alpha", type=float, default=0.5)
    f.add_argument("--format", choices=["text", "json"], default="text")
    f.set_defaults(func=cmd_family)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except Graph6Error as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
