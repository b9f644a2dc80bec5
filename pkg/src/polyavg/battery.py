"""Cross-method verification battery.

Runs every route to the same numbers against every other: enumeration
oracle, recursion, constrained multinomial sums, generating functions,
published explicit formulas, weighted closed forms, reference grids, and
fitter round trips.  All comparisons are exact; one mismatch anywhere
fails the battery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .closedforms import (
    ApplicabilityError,
    average_closed_s1t2,
    average_closed_s2t1,
    catalog,
    gf_mu,
    weighted_mu_closed,
)
from .ensemble import AverageKey, CoefficientSet, averaged_power_poly, parse_coefficient_set
from .exactnum import GaussianRational, format_gaussian
from .fitter import FitShapeError, fit, verify_fit
from .multinomial import littlewood_e, multinomial_e
from .recursion import get_table
from .reference import REFERENCE_TABLES, ReferenceTable

BATTERY_SET_LITERALS = (
    "{-1,1}",
    "{-1,0,1}",
    "{0,1}",
    "{0,i}",
    "{1,2}",
    "{1/2,-1/2,i}",
)

# battery sets whose exponent-6 sequences need a period the default
# shape search does not try
_EXTENDED_PERIOD_FITS = {("{1/2,-1/2,i}", 3): (1, 2, 3, 4, 6, 12)}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f" ({self.detail})" if self.detail and not self.passed else ""
        return f"{status}  {self.name}{suffix}"


@dataclass(frozen=True)
class BatteryReport:
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> List[str]:
        out = [c.line() for c in self.checks]
        out.append("all checks passed" if self.passed else "FAILURES present")
        return out


def _battery_sets() -> List[CoefficientSet]:
    return [parse_coefficient_set(lit) for lit in BATTERY_SET_LITERALS]


def check_reference_tables(
    reference: Optional[Dict[str, ReferenceTable]] = None,
) -> CheckResult:
    """Recursion reproduces every trusted grid cell exactly."""
    tables = reference if reference is not None else REFERENCE_TABLES
    for literal, ref in tables.items():
        T = parse_coefficient_set(literal)
        table = get_table(T, ref.n_max, ref.alpha_max, ref.alpha_max)
        for n in range(ref.n_max + 1):
            for alpha in range(ref.alpha_max + 1):
                got = table.mu(n, alpha)
                want = ref.value(n, alpha)
                if not (got.is_real() and got.re == want):
                    return CheckResult(
                        "reference-tables",
                        False,
                        f"{literal} n={n} alpha={alpha}: "
                        f"expected {want}, computed {format_gaussian(got)}",
                    )
    return CheckResult("reference-tables", True)


def _closed_form_values(T, n: int, alpha: int, m: int) -> List[Tuple[str, GaussianRational]]:
    """Every applicable closed-form route for the key (n, alpha, alpha, m)."""
    out: List[Tuple[str, GaussianRational]] = []
    if m == 0 and 1 <= alpha <= 4:
        try:
            out.append(("gf", gf_mu(T, alpha).coefficient(n)))
        except ApplicabilityError:
            pass
    if alpha <= 2:
        try:
            out.append(("weighted", weighted_mu_closed(T, alpha, n, m)))
        except ApplicabilityError:
            pass
    if m == 0:
        for entry in catalog():
            if entry.kind == "published" and entry.alpha == alpha and entry.applies(T):
                out.append((entry.id, entry.evaluate(n, T)))
    return out


def check_four_way(n_max: int = 6, alpha_max: int = 3) -> CheckResult:
    """oracle == recursion == multinomial == closed forms on the battery."""
    for T in _battery_sets():
        table = get_table(T, n_max, alpha_max, alpha_max)
        for alpha in range(alpha_max + 1):
            for n in range(n_max + 1):
                averaged = averaged_power_poly(T, n, alpha, alpha)
                for m in range(-alpha * n, alpha * n + 1):
                    key = AverageKey(n, alpha, alpha, m)
                    want = averaged.constant_term(m)
                    routes = [
                        ("recursion", table.dp_e(key)),
                        ("multinomial", multinomial_e(T, key)),
                    ]
                    if alpha and frozenset(T.elements) == frozenset(
                        parse_coefficient_set("{-1,1}").elements
                    ):
                        routes.append(("littlewood", littlewood_e(key)))
                    routes.extend(
                        _closed_form_values(T, n, alpha, m) if alpha else []
                    )
                    for name, got in routes:
                        if got != want:
                            return CheckResult(
                                "four-way-agreement",
                                False,
                                f"{T.literal()} key={tuple(key)}: {name} gives "
                                f"{format_gaussian(got)}, oracle gives "
                                f"{format_gaussian(want)}",
                            )
    return CheckResult("four-way-agreement", True)


def check_generating_functions(n_max: int = 50) -> CheckResult:
    """Series coefficients match the recursion within applicability."""
    for T in _battery_sets():
        alphas = [1, 2] + ([3, 4] if T.is_zero_sum() else [])
        table = get_table(T, n_max, max(alphas), max(alphas))
        for alpha in alphas:
            series = gf_mu(T, alpha).series(n_max + 1)
            for n in range(n_max + 1):
                if series[n] != table.mu(n, alpha):
                    return CheckResult(
                        "generating-functions",
                        False,
                        f"{T.literal()} alpha={alpha} n={n}: series "
                        f"{format_gaussian(series[n])} != recursion "
                        f"{format_gaussian(table.mu(n, alpha))}",
                    )
    return CheckResult("generating-functions", True)


def check_published_formulas(n_max: int = 30) -> CheckResult:
    """Catalog explicit formulas match the recursion on their sets."""
    jobs: List[Tuple[CoefficientSet, str]] = []
    for literal in ("{-1,1}", "{-1,0,1}", "{0,1}", "{0,i}"):
        T = parse_coefficient_set(literal)
        for entry in catalog():
            if entry.kind == "published" and entry.quasi_builder and entry.applies(T):
                jobs.append((T, entry.id))
    for h in (1, 2, 3, 4):
        T = parse_coefficient_set(f"height:{h}")
        for entry_id in ("height_h_mu2", "height_h_mu4"):
            jobs.append((T, entry_id))
    from .closedforms import catalog_entry

    for T, entry_id in jobs:
        entry = catalog_entry(entry_id)
        table = get_table(T, n_max, entry.alpha, entry.alpha)
        qp = entry.quasi(T)
        for n in range(n_max + 1):
            want = table.mu(n, entry.alpha)
            got = qp.evaluate(n)
            if got != want:
                return CheckResult(
                    "published-formulas",
                    False,
                    f"{entry_id} on {T.literal()} at n={n}: formula "
                    f"{format_gaussian(got)} != recursion {format_gaussian(want)}",
                )
    return CheckResult("published-formulas", True)


def check_weighted_closed_forms(n_max: int = 10) -> CheckResult:
    """Piecewise weighted forms match the recursion for every valid m."""
    for T in _battery_sets():
        table = get_table(T, n_max, 2, 2)
        for n in range(n_max + 1):
            for m in range(-2 * n - 2, 2 * n + 3):
                pairs = [("weighted_a1", weighted_mu_closed(T, 1, n, m), table.e(n, 1, 1, m))]
                if T.is_zero_sum():
                    pairs.append(
                        ("weighted_a2", weighted_mu_closed(T, 2, n, m), table.e(n, 2, 2, m))
                    )
                    pairs.append(
                        ("weighted_s1t2", average_closed_s1t2(T, n, m), table.e(n, 1, 2, m))
                    )
                    pairs.append(
                        ("weighted_s2t1", average_closed_s2t1(T, n, m), table.e(n, 2, 1, m))
                    )
                elif n == 0:
                    pairs.append(
                        ("weighted_s1t2", average_closed_s1t2(T, 0, m), table.e(0, 1, 2, m))
                    )
                    pairs.append(
                        ("weighted_s2t1", average_closed_s2t1(T, 0, m), table.e(0, 2, 1, m))
                    )
                for name, got, want in pairs:
                    if got != want:
                        return CheckResult(
                            "weighted-closed-forms",
                            False,
                            f"{name} on {T.literal()} n={n} m={m}: "
                            f"{format_gaussian(got)} != {format_gaussian(want)}",
                        )
    return CheckResult("weighted-closed-forms", True)


def check_fitter_round_trip(verify_span: int = 20) -> CheckResult:
    """Fits on a leading window reproduce the recursion beyond it."""
    from .closedforms import catalog_entry

    named = {
        ("{-1,1}", alpha): f"littlewood_mu{2 * alpha}" for alpha in range(6)
    }
    named.update({("{-1,0,1}", alpha): f"height1_mu{2 * alpha}" for alpha in range(6)})
    named.update({("{0,1}", alpha): f"zero_one_mu{2 * alpha}" for alpha in range(4)})
    named.update({("{0,i}", alpha): f"zero_i_mu{2 * alpha}" for alpha in range(4)})

    for literal in BATTERY_SET_LITERALS:
        T = parse_coefficient_set(literal)
        alpha_hi = 5 if literal in ("{-1,1}", "{-1,0,1}") else 3
        for alpha in range(1, alpha_hi + 1):
            periods = _EXTENDED_PERIOD_FITS.get((literal, alpha), (1, 2, 4))
            max_period = max(periods)
            degree_cap = 2 * alpha + 1
            n_fit = max_period * (degree_cap + 1) + 6
            table = get_table(T, n_fit + verify_span, alpha, alpha)
            values = table.mu_sequence(alpha, n_fit)
            try:
                qp = fit(values, max_degree=degree_cap, periods=periods)
            except FitShapeError as exc:
                return CheckResult(
                    "fitter-round-trip", False, f"{literal} alpha={alpha}: {exc}"
                )
            report = verify_fit(qp, table, alpha, range(n_fit + 1, n_fit + verify_span + 1))
            if not report.ok:
                return CheckResult(
                    "fitter-round-trip",
                    False,
                    f"{literal} alpha={alpha}: {report}",
                )
            entry_id = named.get((literal, alpha))
            if entry_id is not None:
                expected = catalog_entry(entry_id).quasi(T)
                if qp != expected:
                    return CheckResult(
                        "fitter-round-trip",
                        False,
                        f"{literal} alpha={alpha}: fitted {qp.render()} differs "
                        f"from cataloged {expected.render()}",
                    )
    return CheckResult("fitter-round-trip", True)


def run_battery(
    quick: bool = False,
    reference: Optional[Dict[str, ReferenceTable]] = None,
) -> BatteryReport:
    """The full cross-method battery; ``quick`` shrinks every sweep."""
    if quick:
        checks = (
            check_reference_tables(reference),
            check_four_way(n_max=4, alpha_max=2),
            check_generating_functions(n_max=12),
            check_published_formulas(n_max=8),
            check_weighted_closed_forms(n_max=5),
            check_fitter_round_trip(verify_span=8),
        )
    else:
        checks = (
            check_reference_tables(reference),
            check_four_way(),
            check_generating_functions(),
            check_published_formulas(),
            check_weighted_closed_forms(),
            check_fitter_round_trip(),
        )
    return BatteryReport(checks)
