"""Command line interface.

Exit codes: 0 all requested verifications pass, 1 a verification failed,
2 bad input, 3 a requested check is pending (its source data is missing).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import corpus, gradedlin, koszul, series
from .parsing import ParseError, parse_polynomial, parse_weights
from .report import (ALL_CHECKS, AVAILABLE_CHECKS, FAIL, PENDING, AnalysisRequest, analyze, emit,
                     worker_pool)
from .wpoly import DegenerateVariable, WeightError, infer_weights

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PENDING = 0, 1, 2, 3


def _weights(args, f):
    if args.weights is None:
        ws = infer_weights(f)
        if ws is None:
            raise WeightError(f"cannot infer weights for {f}: no positive solution of the "
                              "homogeneity equations; pass --weights/--total")
        return ws
    total = args.total if args.total is not None else ("1" if ";" not in args.weights else None)
    return parse_weights(args.weights, total)


def _checks(text):
    if text is None:
        return AVAILABLE_CHECKS
    out = []
    for c in (c.strip() for c in text.split(",")):
        for name in (AVAILABLE_CHECKS if c == "all" else (c,) if c else ()):
            if name not in out:
                out.append(name)
    return tuple(out)


def _add_poly_args(p):
    p.add_argument("polynomial", help='e.g. "x^2 + y^3" or "x1^3 + x2^3 + x3^3"')
    p.add_argument("--weights", help="w1,...,wn (integers or rationals such as 1/2,1/3)")
    p.add_argument("--total", help="total weight W (defaults to 1 for rational weights)")
    p.add_argument("--nvars", type=int, help="number of variables if larger than those used")
    p.add_argument("--bound", type=int, help="override the hard weighted-degree bound")


def _status_code(reports):
    if any(v.status == FAIL for r in reports for v in r.verdicts):
        return EXIT_FAIL
    if any(v.status == PENDING for r in reports for v in r.verdicts):
        return EXIT_PENDING
    return EXIT_OK


def _report_failures(reports):
    bad = [{"polynomial": r.polynomial, **asdict(v)}
           for r in reports for v in r.verdicts if v.status in (FAIL, PENDING)]
    if bad:
        print(json.dumps({"not_passed": bad}, sort_keys=True), file=sys.stderr)


def cmd_analyze(args):
    f = parse_polynomial(args.polynomial, args.nvars)
    req = AnalysisRequest(f, _weights(args, f), kmax=args.kmax, checks=_checks(args.checks),
                          bound=args.bound, jobs=args.jobs)
    rep = analyze(req)
    text = emit(rep, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plotting import plot_profiles
        plot_profiles(rep, args.plot)
    _report_failures([rep])
    return _status_code([rep])


def cmd_series(args):
    f = parse_polynomial(args.polynomial, args.nvars)
    ws = _weights(args, f)
    K = args.kmax
    euler = koszul.hilbert_from_euler(f, ws)
    print(f"Milnor algebra Hilbert series (weighted degree):\n  {euler}")
    poly = euler.as_polynomial()
    if poly is not None:
        print(f"  = {series.format_poly(poly)}")
    print(f"  value at t=1: {euler.value_at_one()}")
    n = f.nvars
    diff = series.difference_series(n)
    print(f"\nM(t) - A(t) = {diff}\n  expansion 0..{K}: {series.expand(diff, K)}")
    mu = [gradedlin.mu_oracle(f, ws, k, args.bound) for k in range(K + 1)]
    tau = [gradedlin.tau_oracle(f, ws, k, args.bound) for k in range(K + 1)]
    print(f"\noracle mu_k, k=0..{K}:  {mu}\noracle tau_k, k=0..{K}: {tau}")
    try:
        M, A = series.assemble_theorem_c(series.extract_ingredients(f, ws))
    except series.IngredientExtractionUnavailable as exc:
        print(f"\ngap-number series: PENDING ({exc})")
        return EXIT_OK
    print(f"\nM(t) = {M}\n  expansion: {series.expand(M, K)}")
    print(f"A(t) = {A}\n  expansion: {series.expand(A, K)}")
    return EXIT_OK


def cmd_koszul(args):
    f = parse_polynomial(args.polynomial, args.nvars)
    ws = _weights(args, f)
    kc = koszul.build_koszul(f, ws)
    table = koszul.homology_table(kc, args.bound)
    n = kc.n
    if args.format == "json":
        rows = [{"d": d, "dims": dims, "homology": hom} for d, dims, hom in table]
        print(json.dumps({"polynomial": f.format(ws), "weights": list(ws.weights), "total": ws.total,
                          "shifts": [list(m.generator_shifts) for m in kc.modules], "rows": rows},
                         indent=2, sort_keys=True))
    elif args.format == "csv":
        print(",".join(["d"] + [f"F{p}" for p in range(n + 1)] + [f"H{p}" for p in range(n + 1)]))
        for d, dims, hom in table:
            print(",".join(map(str, [d] + dims + hom)))
    else:
        header = ["d"] + [f"dim F{p}" for p in range(n + 1)] + [f"H{p}" for p in range(n + 1)]
        rows = [header] + [[str(x) for x in [d] + dims + hom] for d, dims, hom in table]
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        for r in rows:
            print("  ".join(c.rjust(w) for c, w in zip(r, widths)))
    if args.plot:
        from .plotting import plot_homology
        plot_homology(table, args.plot, title=f.format(ws))
    higher = any(hom[p] for _, _, hom in table for p in range(1, n + 1))
    return EXIT_FAIL if higher else EXIT_OK


def cmd_verify(args):
    reports = []
    with worker_pool(args.jobs) as ex:
        for text, f, ws in corpus.load():
            req = AnalysisRequest(f, ws, kmax=args.kmax, checks=_checks(args.checks), jobs=args.jobs)
            rep = analyze(req, ex)
            reports.append(rep)
            if args.format == "table":
                bad = [v.check for v in rep.verdicts if v.status in (FAIL, PENDING)]
                status = ("FAIL" if any(v.status == FAIL for v in rep.verdicts)
                          else "PENDING" if rep.pending else "PASS")
                print(f"{status:<8} {text:<18} mu0={rep.mu0:<3} "
                      f"tau={rep.column('tau')}" + (f"  [{', '.join(bad)}]" if bad else ""))
    if args.format == "json":
        print(json.dumps([json.loads(emit(r, "json")) for r in reports], indent=2, sort_keys=True))
    _report_failures(reports)
    return _status_code(reports)


def cmd_families(args):
    try:
        fams = series.families()
    except series.FamilyTableUnavailable as exc:
        print(f"PENDING: {exc}")
        return EXIT_PENDING
    for fd in fams:
        print(f"{fd.family_id}: {fd.representative}   L(t) = {fd.L_poly}")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="tjurina",
                                 description="k-th Milnor and Tjurina numbers of weighted "
                                             "homogeneous isolated singularities")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="profiles mu_k, tau_k and verification verdicts")
    _add_poly_args(p)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--checks", help=f"comma list from {','.join(ALL_CHECKS)} (default: all available)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for degree pieces")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--plot", help="render the profile figure to this file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("series", help="rational generating functions and their expansions")
    _add_poly_args(p)
    p.add_argument("--kmax", type=int, default=8)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("koszul", help="homology table of the graded Koszul complex")
    _add_poly_args(p)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--plot", help="render the homology figure to this file")
    p.set_defaults(func=cmd_koszul)

    p = sub.add_parser("verify", help="regression run over the built-in corpus")
    p.add_argument("--kmax", type=int, default=12)
    p.add_argument("--checks", help="comma list of checks (default: all available)")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("families", help="three-variable family representatives")
    p.set_defaults(func=cmd_families)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, WeightError, DegenerateVariable, ValueError,
            gradedlin.DimensionNotFinite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
