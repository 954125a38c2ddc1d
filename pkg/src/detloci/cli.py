"""Command line front end.

Subcommands mirror the library layers: dim and hilbert for the exact
formula side, check for the certification rules, oracle for the
finite-field cross-checks, scan for CSV sweeps, gen-matrix to emit the
matrices themselves.  Exit codes: 0 on success, 1 for input problems
(bad JSON, invalid or empty degree data, guard limits), 2 when the two
internal computation routes disagree or the oracle keeps mismatching.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement
from pathlib import Path

from .degrees import DegreeData
from .dimension import (InternalInconsistency, dimension_report,
                        equal_degree_conjecture)
from .hilbert import hilbert_polynomial
from .matrices import generic_matrix, witness_matrix
from .oracle import (DEFAULT_PRIME, GuardError, generators_for, hilbert_check,
                     tangent_dimension)
from .verdicts import classify


def _read_degree_data(args) -> DegreeData:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.input).read_text()
    d = DegreeData.from_json(text)
    if getattr(args, "char", None) is not None:
        d = DegreeData(d.b, d.a, d.n, args.char)
    return d


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _render_poly(coeffs) -> str:
    parts: list[str] = []
    for k in range(len(coeffs) - 1, -1, -1):
        cf = coeffs[k]
        if cf == 0 and len(coeffs) > 1:
            continue
        mag = abs(cf)
        if k == 0:
            body = str(mag)
        else:
            var = "v" if k == 1 else f"v^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if cf >= 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if cf >= 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def cmd_dim(args) -> int:
    rep = dimension_report(_read_degree_data(args))
    if args.format == "json":
        _emit(args, json.dumps(rep.to_json(), indent=2) + "\n")
        return 0
    if rep.empty:
        _emit(args, "empty = true\n")
        return 0
    lines = [
        f"ell = {rep.ell}",
        f"lambda = {rep.lam}",
        "K = " + (" ".join(str(x) for x in rep.k) if rep.k else "-"),
        f"autB = {rep.aut}",
        f"stable = {_bool(rep.stable)}",
        f"dimW = {rep.dim_w}",
        f"crossCheckOK = {_bool(rep.cross_check_ok)}",
    ]
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_hilbert(args) -> int:
    summary = hilbert_polynomial(_read_degree_data(args))
    if args.format == "json":
        _emit(args, json.dumps(summary.to_json(), indent=2) + "\n")
        return 0
    lines = [
        f"p(v) = {_render_poly(summary.coeffs)}",
        f"dim = {summary.dimension}",
        f"degree = {summary.degree}",
    ]
    if summary.genus is not None:
        lines.append(f"genus = {summary.genus}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_check(args) -> int:
    verdict = classify(_read_degree_data(args))
    if args.format == "json":
        _emit(args, json.dumps(verdict.to_json(), indent=2) + "\n")
        return 0
    lines = [f"nonempty = {_bool(verdict.nonempty)}"]
    dim_bits = verdict.dim_status
    if verdict.dim_value is not None:
        dim_bits += f" {verdict.dim_value}"
    if verdict.dim_rule:
        dim_bits += f" ({verdict.dim_rule})"
    lines.append(f"dim = {dim_bits}")
    comp_bits = verdict.component_status
    if verdict.component_rule:
        comp_bits += f" ({verdict.component_rule})"
    lines.append(f"component = {comp_bits}")
    lines.append("applied = " + (" ".join(verdict.applied_rules) or "-"))
    lines.append("checks:")
    for ck in verdict.checks:
        mark = "x" if ck.passed else " "
        lines.append(f"  [{mark}] {ck.name}: {ck.detail}")
    for note in verdict.notes:
        lines.append(f"note: {note}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_oracle_hf(args) -> int:
    d = _read_degree_data(args)
    rep = hilbert_check(d, variant=args.variant, p=args.prime, seed=args.seed,
                        vmax=args.vmax, minimal=not args.no_minimality)
    if args.format == "json":
        _emit(args, json.dumps(rep.to_json(), indent=2) + "\n")
    else:
        lines = [
            f"variant = {rep.variant}",
            f"prime = {rep.prime}",
            f"seed = {'-' if rep.seed is None else rep.seed}",
            f"attempts = {rep.attempts}",
            "formula = " + " ".join(str(x) for x in rep.formula),
            "oracle = " + " ".join(str(x) for x in rep.observed),
            f"match = {_bool(rep.match)}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    return 0 if rep.match else 2


def cmd_oracle_tangent(args) -> int:
    d = _read_degree_data(args)
    gens = generators_for(d, variant=args.variant, p=args.prime,
                          seed=args.seed, minimal=not args.no_minimality)
    tangent = tangent_dimension(d, gens)
    rep = dimension_report(d)
    seed = args.seed if args.variant == "generic" else None
    if args.format == "json":
        obj = {"variant": args.variant, "prime": args.prime, "seed": seed,
               "tangent": str(tangent),
               "dimW": None if rep.empty else str(rep.dim_w)}
        _emit(args, json.dumps(obj, indent=2) + "\n")
    else:
        lines = [
            f"variant = {args.variant}",
            f"prime = {args.prime}",
            f"seed = {'-' if seed is None else seed}",
            f"tangent = {tangent}",
            f"dimW = {'-' if rep.empty else rep.dim_w}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_gen_matrix(args) -> int:
    d = _read_degree_data(args)
    if args.variant == "generic":
        mat = generic_matrix(d, args.prime, args.seed,
                             minimal=not args.no_minimality)
    else:
        mat = witness_matrix(d, args.variant, args.prime)
    if args.format == "json":
        _emit(args, json.dumps(mat.to_json(), indent=2) + "\n")
    else:
        _emit(args, mat.to_text())
    return 0


_SCAN_COLUMNS = ["t", "c", "n", "d", "b", "a", "ell", "lambda", "sumK",
                 "autB", "stable", "dimW", "conjectured", "match",
                 "dim_status", "dim_rule", "component_status",
                 "component_rule", "nonempty"]


def _scan_row(task) -> list[str]:
    t, c, n, deg, b, a = task
    d = DegreeData(tuple(b), tuple(a), n)
    verdict = classify(d)
    rep = verdict.report
    row = {
        "t": str(t), "c": str(c), "n": str(n),
        "d": "" if deg is None else str(deg),
        "b": " ".join(str(x) for x in b),
        "a": " ".join(str(x) for x in a),
        "ell": "", "lambda": "", "sumK": "", "autB": "", "stable": "",
        "dimW": "", "conjectured": "", "match": "",
        "dim_status": verdict.dim_status,
        "dim_rule": verdict.dim_rule or "",
        "component_status": verdict.component_status,
        "component_rule": verdict.component_rule or "",
        "nonempty": _bool(verdict.nonempty),
    }
    if verdict.nonempty:
        row.update({
            "ell": str(rep.ell), "lambda": str(rep.lam),
            "sumK": str(sum(rep.k)), "autB": str(rep.aut),
            "stable": _bool(rep.stable), "dimW": str(rep.dim_w),
        })
        if deg is not None:
            conj = equal_degree_conjecture(t, c, deg, n)
            row["conjectured"] = str(conj)
            row["match"] = _bool(conj == rep.dim_w)
    return [row[col] for col in _SCAN_COLUMNS]


def _parse_range(text: str) -> range:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _scan_tasks(args):
    max_deg = args.max_degree
    for t in _parse_range(args.t_range):
        for c in _parse_range(args.c_range):
            for n in _parse_range(args.n_range):
                if t < 1 or c < 2 or n < 0:
                    continue
                if args.mode == "equal":
                    for deg in range(1, max_deg + 1):
                        yield (t, c, n, deg, (0,) * t, (deg,) * (t + c - 1))
                else:
                    degs = range(max_deg + 1)
                    for b in combinations_with_replacement(degs, t):
                        for a in combinations_with_replacement(degs, t + c - 1):
                            yield (t, c, n, None, b, a)


def cmd_scan(args) -> int:
    tasks = list(_scan_tasks(args))
    workers = int(os.environ.get("DETLOCI_THREADS", "1"))
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_row, tasks, chunksize=16))
    else:
        rows = [_scan_row(task) for task in tasks]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_SCAN_COLUMNS)
    writer.writerows(rows)
    _emit(args, buf.getvalue())
    return 0


def _add_io_arguments(p, with_char: bool = True) -> None:
    p.add_argument("--input", default="-",
                   help="degree data JSON file, or - for stdin (default)")
    if with_char:
        p.add_argument("--char", type=int, default=None,
                       help="override the field characteristic from the input")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="write output here instead of stdout")


def _add_matrix_arguments(p) -> None:
    p.add_argument("--variant", choices=("standard", "good", "generic"),
                   default="generic")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-minimality", action="store_true",
                   help="keep random scalars in degree-zero entries")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="detloci",
        description="Dimension counts and certification for families of "
                    "determinantal schemes, with finite-field cross-checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="dimension report for one family")
    _add_io_arguments(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("hilbert", help="Hilbert polynomial and invariants")
    _add_io_arguments(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("check", help="certification verdict for one family")
    _add_io_arguments(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="finite-field cross-checks")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("hf", help="Hilbert function vs actual ideal of minors")
    _add_io_arguments(q)
    _add_matrix_arguments(q)
    q.add_argument("--vmax", type=int, default=6,
                   help="compare degrees 0..vmax (default 6)")
    q.set_defaults(func=cmd_oracle_hf)
    q = osub.add_parser("tangent", help="deformation tangent space dimension")
    _add_io_arguments(q)
    _add_matrix_arguments(q)
    q.set_defaults(func=cmd_oracle_tangent)

    p = sub.add_parser("gen-matrix", help="emit a matrix with the given degrees")
    _add_io_arguments(p)
    _add_matrix_arguments(p)
    p.set_defaults(func=cmd_gen_matrix)

    p = sub.add_parser("scan", help="sweep families into CSV")
    p.add_argument("--t-range", default="1:3", help="rows, as A:B inclusive")
    p.add_argument("--c-range", default="2:5", help="codimension, as A:B inclusive")
    p.add_argument("--n-range", default="1:3", help="scheme dimension, as A:B")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--mode", choices=("equal", "full"), default="equal",
                   help="equal: b=0, a=d for d=1..max; full: all sorted tuples")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_scan)

    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 2
    except (ValueError, GuardError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
