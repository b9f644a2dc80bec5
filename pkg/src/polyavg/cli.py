"""Command-line front end.

Runs the shared operation handlers in-process by default; with
``--server URL`` the same request payloads go to a running service
instance instead and the responses render identically.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from pydantic import ValidationError

from .ops import (
    OperationError,
    TableProvider,
    default_cache_path,
    run_catalog,
    run_compute,
    run_fit,
    run_table,
    run_verify,
)
from .ensemble import parse_coefficient_set
from .recursion import RecursionTable
from .reference import reference_for
from .schemas import (
    CatalogResponse,
    ComputeRequest,
    ComputeResponse,
    FitRequest,
    FitResponse,
    TableRequest,
    TableResponse,
    VerifyRequest,
    VerifyResponse,
)


def _remote(server: str, path: str, payload: Optional[dict], response_model):
    import httpx

    url = server.rstrip("/") + path
    if payload is None:
        resp = httpx.get(url, timeout=600.0)
    else:
        resp = httpx.post(url, json=payload, timeout=600.0)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise OperationError(f"server error {resp.status_code}: {detail}")
    return response_model.model_validate(resp.json())


def _provider(args, req) -> TableProvider:
    if getattr(args, "cache", None) is None:
        return TableProvider()
    path = args.cache
    if path == "":
        T = parse_coefficient_set(req.set)
        n = getattr(req, "n", None)
        if n is None:
            n = req.n_max
        s = req.s if hasattr(req, "s") else req.alpha_max
        t = req.t if hasattr(req, "t") else req.alpha_max
        path = default_cache_path(T, n, s, t)
    return TableProvider(cache_path=path)


def _print_stats(args, stats) -> None:
    if getattr(args, "stats", False):
        print(f"stats: dp_fill_ops={stats.dp_fill_ops} cache={stats.cache}")


def _emit_compute(resp: ComputeResponse, args) -> int:
    if args.output == "json":
        print(resp.model_dump_json(indent=2))
        return 0 if resp.verdict in (None, "AGREE") else 1
    if args.output == "csv":
        label = resp.alpha if resp.alpha is not None else f"{resp.s}:{resp.t}"
        print("n,alpha,value")
        for r in resp.results:
            if r.status == "ok":
                print(f"{resp.n},{label},{r.value.text}")
        return 0 if resp.verdict in (None, "AGREE") else 1
    if resp.method == "all":
        for r in resp.results:
            if r.status == "ok":
                note = f"  ({r.note})" if r.note else ""
                print(f"{r.method:<12}{r.value.text}{note}")
            else:
                print(f"{r.method:<12}{r.status}: {r.note}")
        print(f"verdict: {resp.verdict}")
        _print_stats(args, resp.stats)
        return 0 if resp.verdict == "AGREE" else 1
    text = resp.value.text
    ref = reference_for(resp.set)
    if (
        ref is not None
        and resp.alpha is not None
        and resp.m == 0
        and resp.alpha <= ref.alpha_max
        and resp.n <= ref.n_max
        and resp.value.im == "0"
    ):
        styled = ref.paper_style(resp.value.re, resp.alpha)
        if styled != text:
            text = f"{styled} = {text}"
    print(text)
    _print_stats(args, resp.stats)
    return 0


def cmd_compute(args) -> int:
    req = ComputeRequest(
        set=args.set,
        n=args.n,
        alpha=args.alpha,
        s=args.s,
        t=args.t,
        m=args.m,
        method=args.method,
        enumeration_budget=args.enum_budget,
        composition_budget=args.comp_budget,
    )
    if args.server:
        resp = _remote(args.server, "/compute", req.model_dump(), ComputeResponse)
    else:
        resp = run_compute(req, provider=_provider(args, req))
    return _emit_compute(resp, args)


def _emit_table(resp: TableResponse, args) -> int:
    if args.output == "json":
        print(resp.model_dump_json(indent=2))
        return 0
    if args.output == "csv":
        print("n,alpha,value")
        for row in resp.rows:
            for alpha, cell in enumerate(row.cells):
                print(f"{row.n},{alpha},{cell}")
        return 0
    headers = ["n"] + [f"alpha={a}" for a in range(resp.alpha_max + 1)]
    matrix = [headers] + [[str(r.n)] + list(r.cells) for r in resp.rows]
    widths = [max(len(row[c]) for row in matrix) for c in range(len(headers))]
    for row in matrix:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    _print_stats(args, resp.stats)
    return 0


def cmd_table(args) -> int:
    req = TableRequest(
        set=args.set,
        n_max=args.n_max,
        alpha_max=args.alpha_max,
        method=args.method,
        paper_style=args.paper_style,
        enumeration_budget=args.enum_budget,
        composition_budget=args.comp_budget,
    )
    if args.server:
        resp = _remote(args.server, "/table", req.model_dump(), TableResponse)
    else:
        resp = run_table(req, provider=_provider(args, req))
    return _emit_table(resp, args)


def cmd_fit(args) -> int:
    req = FitRequest(
        set=args.set,
        alpha=args.alpha,
        n_samples=args.n_samples,
        max_degree=args.max_degree,
        periods=[int(p) for p in args.periods.split(",") if p.strip()],
        holdout=args.holdout,
        verify_span=args.verify_span,
    )
    if args.server:
        resp = _remote(args.server, "/fit", req.model_dump(), FitResponse)
    else:
        resp = run_fit(req)
    if args.output == "json":
        print(resp.model_dump_json(indent=2))
        return 0
    print(resp.formula)
    print(
        f"fitted on n=0..{resp.fit_points - 1}, verified exactly on "
        f"n={resp.verified_from}..{resp.verified_to} (period {resp.period}, "
        f"degree {resp.degree})"
    )
    return 0


def cmd_verify(args) -> int:
    req = VerifyRequest(quick=args.quick)
    if args.server:
        resp = _remote(args.server, "/verify", req.model_dump(), VerifyResponse)
    else:
        resp = run_verify(req)
    if args.output == "json":
        print(resp.model_dump_json(indent=2))
    else:
        for check in resp.checks:
            status = "PASS" if check.passed else "FAIL"
            suffix = f" ({check.detail})" if check.detail and not check.passed else ""
            print(f"{status}  {check.name}{suffix}")
        print("all checks passed" if resp.passed else "FAILURES present")
    return 0 if resp.passed else 1


def cmd_catalog(args) -> int:
    if args.server:
        resp = _remote(args.server, "/catalog", None, CatalogResponse)
    else:
        resp = run_catalog()
    if args.output == "json":
        print(resp.model_dump_json(indent=2))
        return 0
    for e in resp.entries:
        alpha = f"alpha={e.alpha}" if e.alpha is not None else "alpha=-"
        print(f"{e.id:<22}{e.kind:<11}{alpha:<9}[{e.applicability}] {e.description}")
    return 0


def cmd_cache_dump(args) -> int:
    T = parse_coefficient_set(args.set)
    s_max = args.s_max if args.s_max is not None else args.alpha_max
    t_max = args.t_max if args.t_max is not None else args.alpha_max
    table = RecursionTable(T, args.n_max, s_max, t_max)
    path = args.path or default_cache_path(T, args.n_max, s_max, t_max)
    table.dump(path)
    print(f"wrote {path} (set {T.literal()}, n<={args.n_max}, s<={s_max}, t<={t_max})")
    return 0


def cmd_cache_load(args) -> int:
    table = RecursionTable.load(args.path)
    n_max, s_max, t_max = table.bounds
    entries = sum(
        len(values) for layer in table._layers for values in layer.values()
    )
    print(
        f"loaded {args.path}: set {table.set.literal()}, n<={n_max}, "
        f"s<={s_max}, t<={t_max}, {entries} stored values"
    )
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("polyavg.service:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyavg",
        description="Exact average norms of polynomials with restricted coefficients",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_output=True):
        p.add_argument("--server", default=None, help="route through a running service")
        if with_output:
            p.add_argument("--output", choices=("text", "json", "csv"), default="text")

    c = sub.add_parser("compute", help="one average value by any method")
    c.add_argument("--set", required=True, help='coefficient set, e.g. "{-1,1}" or height:2')
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--alpha", type=int, default=None)
    c.add_argument("--s", type=int, default=None)
    c.add_argument("--t", type=int, default=None)
    c.add_argument("--m", type=int, default=0)
    c.add_argument(
        "--method",
        choices=("oracle", "recursion", "multinomial", "closedform", "all"),
        default="recursion",
    )
    c.add_argument("--enum-budget", type=int, default=10_000_000)
    c.add_argument("--comp-budget", type=int, default=10_000_000)
    c.add_argument("--cache", nargs="?", const="", default=None, metavar="PATH")
    c.add_argument("--stats", action="store_true")
    common(c)
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="grid of averages for n and alpha ranges")
    t.add_argument("--set", required=True)
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--alpha-max", type=int, required=True)
    t.add_argument("--method", choices=("oracle", "recursion", "multinomial"), default="recursion")
    t.add_argument("--paper-style", action="store_true", help="published unreduced rendering")
    t.add_argument("--enum-budget", type=int, default=10_000_000)
    t.add_argument("--comp-budget", type=int, default=10_000_000)
    t.add_argument("--cache", nargs="?", const="", default=None, metavar="PATH")
    t.add_argument("--stats", action="store_true")
    common(t)
    t.set_defaults(func=cmd_table)

    f = sub.add_parser("fit", help="recover an explicit formula from the recursion")
    f.add_argument("--set", required=True)
    f.add_argument("--alpha", type=int, required=True)
    f.add_argument("--n-samples", type=int, default=None)
    f.add_argument("--max-degree", type=int, default=None)
    f.add_argument("--periods", default="1,2,4", help='comma list from {1,2,3,4,6,12}')
    f.add_argument("--holdout", type=int, default=5)
    f.add_argument("--verify-span", type=int, default=20)
    common(f)
    f.set_defaults(func=cmd_fit)

    v = sub.add_parser("verify", help="cross-method verification battery")
    v.add_argument("--quick", action="store_true", help="smaller sweeps, runs in seconds")
    common(v)
    v.set_defaults(func=cmd_verify)

    cat = sub.add_parser("catalog", help="list cataloged closed-form formulas")
    common(cat)
    cat.set_defaults(func=cmd_catalog)

    cache = sub.add_parser("cache", help="manage recursion-table snapshots")
    cache_sub = cache.add_subparsers(dest="cache_command", required=True)
    cd = cache_sub.add_parser("dump", help="fill a table and write a snapshot")
    cd.add_argument("--set", required=True)
    cd.add_argument("--n-max", type=int, required=True)
    cd.add_argument("--alpha-max", type=int, default=0)
    cd.add_argument("--s-max", type=int, default=None)
    cd.add_argument("--t-max", type=int, default=None)
    cd.add_argument("--path", default=None)
    cd.set_defaults(func=cmd_cache_dump)
    cl = cache_sub.add_parser("load", help="inspect a snapshot")
    cl.add_argument("--path", required=True)
    cl.set_defaults(func=cmd_cache_load)

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=8000)
    srv.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OperationError, ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
