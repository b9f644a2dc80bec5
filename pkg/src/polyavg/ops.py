"""Operation handlers behind both the HTTP service and the CLI.

Each handler takes a request model and returns a response model; the
service wires them to routes and the CLI calls them in-process (or
forwards the same payloads to a remote server).
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from .battery import run_battery
from .closedforms import (
    ApplicabilityError,
    average_closed_s1t2,
    average_closed_s2t1,
    catalog,
    gf_mu,
    weighted_mu_closed,
)
from .ensemble import (
    AverageKey,
    CoefficientSet,
    EnumerationBudgetError,
    oracle_e,
    parse_coefficient_set,
)
from .exactnum import GaussianRational, format_gaussian, format_rational
from .fitter import fit, verify_fit
from .multinomial import CompositionBudgetError, multinomial_e
from .recursion import RecursionTable, get_table
from .reference import reference_for
from .schemas import (
    CatalogEntryOut,
    CatalogResponse,
    CharacterForm,
    CheckOut,
    ComputeRequest,
    ComputeResponse,
    FitRequest,
    FitResponse,
    MethodResult,
    Stats,
    TableRequest,
    TableResponse,
    TableRow,
    ValueOut,
    VerifyRequest,
    VerifyResponse,
)

CACHE_DIR_ENV = "POLYAVG_CACHE_DIR"


class OperationError(ValueError):
    """A request that cannot be served; message is user-facing."""


def value_out(v: GaussianRational) -> ValueOut:
    return ValueOut(re=format_rational(v.re), im=format_rational(v.im), text=format_gaussian(v))


def _parse_set(literal: str) -> CoefficientSet:
    try:
        return parse_coefficient_set(literal)
    except ValueError as exc:
        raise OperationError(str(exc)) from None


@dataclass
class TableProvider:
    """Supplies recursion tables, optionally through a snapshot file.

    With a cache path, a snapshot that matches the set and covers the
    requested bounds is loaded instead of recomputing (the fill-op
    counter then stays at zero); otherwise the table is built and the
    snapshot written.
    """

    cache_path: Optional[str] = None
    status: str = "off"
    fill_ops: int = 0

    def table(self, T: CoefficientSet, n: int, s: int, t: int) -> RecursionTable:
        if self.cache_path is None:
            tab = get_table(T, n, s, t)
            self.fill_ops += tab.fill_ops
            return tab
        if os.path.exists(self.cache_path):
            try:
                tab = RecursionTable.load(self.cache_path)
            except (ValueError, KeyError, OSError) as exc:
                raise OperationError(f"cannot load table snapshot: {exc}") from None
            bn, bs, bt = tab.bounds
            if tab.set.elements == T.elements and bn >= n and bs >= s and bt >= t:
                self.status = "hit"
                return tab
        tab = RecursionTable(T, n, s, t)
        self.status = "miss"
        self.fill_ops += tab.fill_ops
        tab.dump(self.cache_path)
        return tab


def default_cache_path(T: CoefficientSet, n: int, s: int, t: int) -> str:
    base = os.environ.get(CACHE_DIR_ENV) or os.path.join(
        os.path.expanduser("~"), ".cache", "polyavg"
    )
    os.makedirs(base, exist_ok=True)
    slug = re.sub(r"[^0-9a-zA-Z]+", "_", T.literal()).strip("_")
    return os.path.join(base, f"table_{slug}_n{n}_s{s}_t{t}.json")


_GF_IDS = {1: "case2_mu2", 2: "case4_mu4", 3: "case00_mu6", 4: "case00_mu8"}


def _closed_form_single(T: CoefficientSet, key: AverageKey) -> Tuple[GaussianRational, str]:
    """One applicable closed-form value for the key, with its source id."""
    n, s, t, m = key
    if s == t:
        alpha = s
        if m == 0:
            for entry in catalog():
                if entry.kind == "published" and entry.alpha == alpha and entry.applies(T):
                    return entry.evaluate(n, T), entry.id
            if 1 <= alpha <= 4:
                return gf_mu(T, alpha).coefficient(n), _GF_IDS[alpha]
        if alpha in (1, 2):
            return weighted_mu_closed(T, alpha, n, m), (
                "weighted_a1" if alpha == 1 else "weighted_a2_zero_sum"
            )
    if (s, t) == (1, 2):
        return average_closed_s1t2(T, n, m), "weighted_s1t2"
    if (s, t) == (2, 1):
        return average_closed_s2t1(T, n, m), "weighted_s2t1"
    raise ApplicabilityError(
        f"no cataloged closed form for key (n={n}, s={s}, t={t}, m={m}) on {T.literal()}"
    )


def run_compute(req: ComputeRequest, provider: Optional[TableProvider] = None) -> ComputeResponse:
    T = _parse_set(req.set)
    provider = provider or TableProvider()
    key = AverageKey(req.n, req.s, req.t, req.m)

    def by_oracle() -> GaussianRational:
        return oracle_e(T, key, budget=req.enumeration_budget)

    def by_recursion() -> GaussianRational:
        return provider.table(T, key.n, key.s, key.t).dp_e(key)

    def by_multinomial() -> GaussianRational:
        return multinomial_e(T, key, budget=req.composition_budget)

    def by_closedform() -> Tuple[GaussianRational, str]:
        return _closed_form_single(T, key)

    runners: List[Tuple[str, Callable]] = [
        ("oracle", by_oracle),
        ("recursion", by_recursion),
        ("multinomial", by_multinomial),
        ("closedform", by_closedform),
    ]
    if req.method != "all":
        runners = [r for r in runners if r[0] == req.method]

    results: List[MethodResult] = []
    for name, runner in runners:
        try:
            outcome = runner()
        except (EnumerationBudgetError, CompositionBudgetError) as exc:
            if req.method != "all":
                raise OperationError(f"{exc}; try --method recursion") from None
            results.append(MethodResult(method=name, status="skipped", note=str(exc)))
        except ApplicabilityError as exc:
            if req.method != "all":
                raise OperationError(str(exc)) from None
            results.append(MethodResult(method=name, status="inapplicable", note=str(exc)))
        else:
            value, note = outcome if isinstance(outcome, tuple) else (outcome, "")
            results.append(
                MethodResult(method=name, status="ok", value=value_out(value), note=note)
            )

    ok_values = [r.value.text for r in results if r.status == "ok"]
    verdict = None
    if req.method == "all":
        verdict = "AGREE" if len(set(ok_values)) <= 1 else "DISAGREE"
    single = results[0].value if req.method != "all" and results else None
    return ComputeResponse(
        set=T.literal(),
        n=req.n,
        s=req.s,
        t=req.t,
        alpha=req.alpha,
        m=req.m,
        method=req.method,
        value=single,
        results=results,
        verdict=verdict,
        stats=Stats(dp_fill_ops=provider.fill_ops, cache=provider.status),
    )


def run_table(req: TableRequest, provider: Optional[TableProvider] = None) -> TableResponse:
    T = _parse_set(req.set)
    provider = provider or TableProvider()
    ref = reference_for(T.literal()) if req.paper_style else None
    if req.paper_style and (
        ref is None or req.alpha_max > ref.alpha_max or req.n_max > ref.n_max
    ):
        raise OperationError(
            f"no published rendering covers {T.literal()} up to n={req.n_max}, "
            f"alpha={req.alpha_max}; drop --paper-style"
        )

    table = None
    if req.method == "recursion":
        table = provider.table(T, req.n_max, req.alpha_max, req.alpha_max)

    rows: List[TableRow] = []
    for n in range(req.n_max + 1):
        cells = []
        for alpha in range(req.alpha_max + 1):
            key = AverageKey(n, alpha, alpha, 0)
            try:
                if req.method == "recursion":
                    v = table.mu(n, alpha)
                elif req.method == "oracle":
                    v = oracle_e(T, key, budget=req.enumeration_budget)
                else:
                    v = multinomial_e(T, key, budget=req.composition_budget)
            except (EnumerationBudgetError, CompositionBudgetError) as exc:
                raise OperationError(f"{exc}; try --method recursion") from None
            if ref is not None:
                cells.append(ref.paper_style(v.re, alpha))
            else:
                cells.append(format_gaussian(v))
        rows.append(TableRow(n=n, cells=cells))
    return TableResponse(
        set=T.literal(),
        n_max=req.n_max,
        alpha_max=req.alpha_max,
        method=req.method,
        paper_style=req.paper_style,
        rows=rows,
        stats=Stats(dp_fill_ops=provider.fill_ops, cache=provider.status),
    )


def run_fit(req: FitRequest) -> FitResponse:
    T = _parse_set(req.set)
    max_period = max(req.periods) if req.periods else 1
    degree_cap = req.max_degree if req.max_degree is not None else 2 * req.alpha + 1
    n_fit = req.n_samples if req.n_samples is not None else max_period * (degree_cap + 1) + req.holdout + 1
    table = get_table(T, n_fit + req.verify_span, req.alpha, req.alpha)
    values = table.mu_sequence(req.alpha, n_fit)
    try:
        qp = fit(values, max_degree=degree_cap, periods=req.periods, holdout=req.holdout)
    except ValueError as exc:
        raise OperationError(str(exc)) from None
    report = verify_fit(qp, table, req.alpha, range(n_fit + 1, n_fit + req.verify_span + 1))
    if not report.ok:
        raise OperationError(f"fit failed verification: {report}")
    character = None
    if qp.has_character_form():
        character = CharacterForm(
            base=[format_gaussian(c) for c in qp.base],
            period2=[format_gaussian(c) for c in qp.period2],
            period4_plus=[format_gaussian(c) for c in qp.period4_plus],
            period4_minus=[format_gaussian(c) for c in qp.period4_minus],
        )
    return FitResponse(
        set=T.literal(),
        alpha=req.alpha,
        formula=qp.render(),
        period=qp.period,
        degree=qp.degree(),
        character=character,
        classes=[[format_gaussian(c) for c in cl] for cl in qp.classes],
        fit_points=n_fit + 1,
        verified_from=n_fit + 1,
        verified_to=n_fit + req.verify_span,
    )


def run_verify(req: VerifyRequest) -> VerifyResponse:
    report = run_battery(quick=req.quick)
    return VerifyResponse(
        passed=report.passed,
        quick=req.quick,
        checks=[CheckOut(name=c.name, passed=c.passed, detail=c.detail) for c in report.checks],
    )


def run_catalog() -> CatalogResponse:
    entries = [
        CatalogEntryOut(
            id=e.id,
            kind=e.kind,
            alpha=e.alpha,
            applicability=e.applicability,
            description=e.description,
        )
        for e in catalog()
    ]
    return CatalogResponse(entries=entries)
