"""Analysis orchestration and report serialization."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import nullcontext
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

from . import gradedlin, invariants, koszul, series
from .wpoly import WeightSystem, WPolynomial, infer_weights, is_weighted_homogeneous

KMAX_LIMIT = 64
ALL_CHECKS = ("oracle", "theorem_b", "theorem_c", "theorem_d", "koszul")
AVAILABLE_CHECKS = ("oracle", "theorem_b", "koszul")
SCHEMA_VERSION = 1
JSON_SAFE_INT = 2 ** 53 - 1

PASS, FAIL, PENDING, NOT_APPLICABLE = "pass", "fail", "pending", "not_applicable"


@dataclass
class AnalysisRequest:
    f: WPolynomial
    ws: Optional[WeightSystem] = None
    kmax: int = 8
    checks: tuple = AVAILABLE_CHECKS
    bound: Optional[int] = None
    jobs: int = 1

    def __post_init__(self):
        if not 0 <= self.kmax <= KMAX_LIMIT:
            raise ValueError(f"kmax must lie in 0..{KMAX_LIMIT}")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        if self.ws is None:
            ws = infer_weights(self.f)
            if ws is None:
                raise ValueError(f"no positive weight system makes {self.f} weighted homogeneous")
            self.ws = ws
        if not is_weighted_homogeneous(self.f, self.ws):
            raise ValueError(f"{self.f} is not weighted homogeneous of type {self.ws}")


@dataclass
class ProfileRow:
    k: int
    mu: int
    tau: int
    jet: int
    tangent: int
    jet_closed: int
    mu_closed: Optional[int] = None
    tau_closed: Optional[int] = None


@dataclass
class Verdict:
    check: str
    status: str
    detail: str = ""
    location: Optional[Dict] = None


@dataclass
class InvariantReport:
    polynomial: str
    n: int
    weights: List[int]
    total: int
    mu0: int
    multiplicity: Dict
    kmax: int
    profiles: List[ProfileRow] = field(default_factory=list)
    series: Dict[str, Dict] = field(default_factory=dict)
    verdicts: List[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.status in (PASS, NOT_APPLICABLE) for v in self.verdicts)

    @property
    def pending(self) -> bool:
        return any(v.status == PENDING for v in self.verdicts)

    def column(self, name: str) -> List[Optional[int]]:
        return [getattr(r, name) for r in self.profiles]

    def to_dict(self) -> Dict:
        d = asdict(self)
        d["schema_version"] = SCHEMA_VERSION
        d["passed"] = self.passed
        return d


def _series_entry(s: series.RationalFunctionSeries, K: int, variable: str = "t") -> Dict:
    return {"numerator": list(s.numerator), "denominator": list(s.denominator),
            "variable": variable, "expansion": series.expand(s, K)}


def _first_bad(values, pred):
    for i, v in enumerate(values):
        if not pred(i, v):
            return i
    return None


def _oracle_verdicts(rep: InvariantReport) -> List[Verdict]:
    out = []
    mu, tau = rep.column("mu"), rep.column("tau")
    ok = mu[0] == tau[0] == rep.mu0
    out.append(Verdict("oracle.milnor_orlik", PASS if ok else FAIL,
                       f"mu_0 = {mu[0]}, tau_0 = {tau[0]}, closed form {rep.mu0}",
                       None if ok else {"k": 0}))
    checks = [
        ("oracle.tau_le_mu", lambda i, _: tau[i] <= mu[i], "tau_k <= mu_k"),
        ("oracle.monotone", lambda i, _: i == 0 or (mu[i] >= mu[i - 1] and tau[i] >= tau[i - 1]),
         "mu_k and tau_k nondecreasing"),
        ("oracle.difference_law", lambda i, _: mu[i] - tau[i] == series.difference_law(rep.n, i),
         "mu_k - tau_k = binom(k - 2 + n, n)"),
        ("oracle.jet_closed", lambda i, r: r.jet == r.jet_closed, "jet oracle = closed form"),
        ("oracle.tangent", lambda i, r: r.tangent == r.tau - r.jet, "tangent = tau - jet"),
    ]
    for name, pred, text in checks:
        bad = _first_bad(rep.profiles, pred)
        if bad is None:
            out.append(Verdict(name, PASS, text))
        else:
            r = rep.profiles[bad]
            out.append(Verdict(name, FAIL, f"{text} fails at k = {bad}",
                               {"k": bad, "mu": r.mu, "tau": r.tau, "jet": r.jet}))
    return out


def _theorem_b_verdicts(rep: InvariantReport) -> List[Verdict]:
    out = []
    for name in ("mu", "tau"):
        rows = [r for r in rep.profiles if r.mu_closed is not None]
        bad = next((r for r in rows if getattr(r, name) != getattr(r, name + "_closed")), None)
        if bad is None:
            out.append(Verdict(f"theorem_b.{name}", PASS,
                               f"closed form = oracle for k = 0..{len(rows) - 1}"))
        else:
            out.append(Verdict(f"theorem_b.{name}", FAIL,
                               f"closed form {getattr(bad, name + '_closed')} != oracle "
                               f"{getattr(bad, name)} at k = {bad.k}", {"k": bad.k}))
    return out


def _koszul_verdicts(f, ws, bound, executor, rep: InvariantReport) -> List[Verdict]:
    out = []
    kc = koszul.build_koszul(f, ws)
    table = koszul.homology_table(kc, bound)
    bad = next(((d, p) for d, _, hom in table for p in range(1, kc.n + 1) if hom[p]), None)
    out.append(Verdict("koszul.higher_homology", PASS if bad is None else FAIL,
                       f"H_p = 0 for p >= 1 in degrees 0..{table[-1][0]}" if bad is None
                       else f"H_{bad[1]} nonzero in degree {bad[0]}",
                       None if bad is None else {"p": bad[1], "d": bad[0]}))
    bad_d = next((d for d, _, _ in table if not kc.is_complex_in_degree(d)), None)
    out.append(Verdict("koszul.boundary_squared", PASS if bad_d is None else FAIL,
                       "d o d = 0" if bad_d is None else f"d o d != 0 in degree {bad_d}",
                       None if bad_d is None else {"d": bad_d}))
    euler = koszul.hilbert_from_euler(f, ws)
    hprof = gradedlin.milnor_hilbert_profile(f, ws, bound, executor=executor)
    top = max(d for d, _ in hprof)
    K = max(top, table[-1][0])
    expected = [0] * (K + 1)
    for d, v in hprof:
        expected[d] = v
    h0 = [hom[0] for _, _, hom in table] + [0] * (K + 1 - len(table))
    rep_e = series.verify_against_oracle(euler, expected, K)
    out.append(Verdict("koszul.euler_series", PASS if rep_e.passed else FAIL,
                       rep_e.detail, None if rep_e.passed else {"d": rep_e.first_mismatch}))
    rep_h = series.verify_against_oracle(h0, expected, K)
    out.append(Verdict("koszul.h0_profile", PASS if rep_h.passed else FAIL,
                       rep_h.detail, None if rep_h.passed else {"d": rep_h.first_mismatch}))
    at_one = euler.value_at_one()
    out.append(Verdict("koszul.value_at_one", PASS if at_one == rep.mu0 else FAIL,
                       f"series at t = 1 is {at_one}, mu_0 = {rep.mu0}"))
    rep.series["milnor_hilbert"] = _series_entry(euler, K, variable="weighted degree")
    return out


def _theorem_c_verdicts(f, ws, rep: InvariantReport) -> List[Verdict]:
    try:
        ing = series.extract_ingredients(f, ws)
    except series.IngredientExtractionUnavailable as exc:
        return [Verdict("theorem_c", PENDING, str(exc))]
    M, A = series.assemble_theorem_c(ing)
    rep.series["theorem_c_M"] = _series_entry(M, rep.kmax)
    rep.series["theorem_c_A"] = _series_entry(A, rep.kmax)
    out = []
    for name, s, col in (("theorem_c.M", M, "mu"), ("theorem_c.A", A, "tau")):
        v = series.verify_against_oracle(s, rep.column(col), rep.kmax)
        out.append(Verdict(name, PASS if v.passed else FAIL, v.detail,
                           None if v.passed else {"k": v.first_mismatch}))
    return out


def _theorem_d_verdicts(f, rep: InvariantReport) -> List[Verdict]:
    if rep.n != 3:
        return [Verdict("theorem_d", NOT_APPLICABLE, "family series are for three variables")]
    try:
        fams = series.families()
    except series.FamilyTableUnavailable as exc:
        return [Verdict("theorem_d", PENDING, str(exc))]
    match = [fd for fd in fams if fd.representative == f]
    if not match:
        return [Verdict("theorem_d", NOT_APPLICABLE, "input is not a tabulated family representative")]
    M, A = series.assemble_theorem_d(match[0], rep.mu0)
    out = []
    for name, s, col in (("theorem_d.M", M, "mu"), ("theorem_d.A", A, "tau")):
        v = series.verify_against_oracle(s, rep.column(col), rep.kmax)
        out.append(Verdict(name, PASS if v.passed else FAIL, v.detail,
                           None if v.passed else {"k": v.first_mismatch}))
    return out


def worker_pool(jobs: int):
    """Process pool for ``jobs > 1``, else a context yielding None."""
    return ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else nullcontext(None)


def analyze(req: AnalysisRequest, executor: Optional[Executor] = None) -> InvariantReport:
    """Oracle profiles for ``k = 0..kmax`` plus every requested cross-check."""
    if executor is None and req.jobs > 1:
        with worker_pool(req.jobs) as ex:
            return analyze(req, ex)
    f, ws = req.f, req.ws
    ctx = invariants.ClosedFormContext.from_polynomial(f, ws)
    mult = ctx.mult
    rep = InvariantReport(
        polynomial=f.format(ws), n=ctx.n, weights=list(ws.weights), total=ws.total, mu0=ctx.mu0,
        multiplicity={"m0": mult.m0, "mi": list(mult.mi), "mij": [list(r) for r in mult.mij],
                      "c": mult.c, "wmax": mult.wmax},
        kmax=req.kmax)
    kw = {"executor": executor}
    for k in range(req.kmax + 1):
        bound = req.bound if req.bound is not None else gradedlin.default_bound(ws, k)
        mu = gradedlin.mu_oracle(f, ws, k, bound, **kw)
        tau = gradedlin.tau_oracle(f, ws, k, bound, **kw)
        jet = gradedlin.jet_oracle(f, ws, k, bound, **kw)
        row = ProfileRow(k=k, mu=mu, tau=tau, jet=jet, tangent=tau - jet,
                         jet_closed=invariants.jet_dim_closed(ctx.n, ctx.m0, k))
        if k <= ctx.m0:
            row.mu_closed = invariants.theorem_b_mu(ctx, k)
            row.tau_closed = invariants.theorem_b_tau(ctx, k)
        rep.profiles.append(row)
    rep.series["difference"] = _series_entry(series.difference_series(ctx.n), req.kmax)
    if "oracle" in req.checks:
        rep.verdicts += _oracle_verdicts(rep)
    if "theorem_b" in req.checks:
        rep.verdicts += _theorem_b_verdicts(rep)
    if "theorem_c" in req.checks:
        rep.verdicts += _theorem_c_verdicts(f, ws, rep)
    if "theorem_d" in req.checks:
        rep.verdicts += _theorem_d_verdicts(f, rep)
    if "koszul" in req.checks:
        rep.verdicts += _koszul_verdicts(f, ws, req.bound, executor, rep)
    return rep


# serialization


def _json_safe(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > JSON_SAFE_INT else obj
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    return obj


CSV_FIELDS = ("k", "mu", "tau", "jet", "tangent", "mu_closed", "tau_closed", "jet_closed")


def emit(report: InvariantReport, fmt: str = "table") -> str:
    if fmt == "json":
        return json.dumps(_json_safe(report.to_dict()), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in report.profiles:
            w.writerow(["" if getattr(r, c) is None else getattr(r, c) for c in CSV_FIELDS])
        return buf.getvalue()
    if fmt == "table":
        return _table(report)
    raise ValueError(f"unknown format {fmt!r}")


def _table(rep: InvariantReport) -> str:
    m = rep.multiplicity
    lines = [
        f"f       = {rep.polynomial}",
        f"weights = ({', '.join(map(str, rep.weights))}; {rep.total})   n = {rep.n}   mu0 = {rep.mu0}",
        f"m0 = {m['m0']}   m_i = {tuple(m['mi'])}   c = {m['c']}   wmax = {m['wmax']}",
        "",
    ]
    header = ("k", "mu_k", "tau_k", "jet_k", "tangent_k", "mu(B)", "tau(B)")
    rows = [header] + [
        (str(r.k), str(r.mu), str(r.tau), str(r.jet), str(r.tangent),
         "-" if r.mu_closed is None else str(r.mu_closed),
         "-" if r.tau_closed is None else str(r.tau_closed))
        for r in rep.profiles]
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    for row in rows:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    if rep.verdicts:
        lines.append("")
        width = max(len(v.check) for v in rep.verdicts)
        for v in rep.verdicts:
            lines.append(f"{v.status.upper():<14} {v.check:<{width}}  {v.detail}")
    return "\n".join(lines) + "\n"
