"""Exact recovery of explicit formulas from average-norm sequences.

A sequence produced by the recursion is a quasi-polynomial: a polynomial
in n whose coefficients may depend periodically on n.  The fitter solves
for the minimal such representation by exact linear algebra, holding out
trailing samples as a check, so a returned formula reproduces every
provided value bit-for-bit.

Internally a fit is stored as one polynomial per residue class modulo
the period.  For periods dividing 4 this is equivalent to the familiar
character form

    P(n) + (-1)^n Q(n) + i^n R(n) + (-i)^n S(n)

with Gaussian-rational coefficients, and that form is what rendering and
the ``base``/``period2``/``period4_*`` accessors expose.  Periods 3, 6
and 12 do occur (their roots of unity fall outside the Gaussian
rationals), and are kept in residue-class form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .exactnum import GaussianRational, I, ZERO
from .recursion import RecursionTable

SUPPORTED_PERIODS = (1, 2, 3, 4, 6, 12)
DEFAULT_PERIODS = (1, 2, 4)
DEFAULT_HOLDOUT = 5

_MINUS_I = GaussianRational(0, -1)
_QUARTER = GaussianRational("1/4")


class FitShapeError(ValueError):
    """No quasi-polynomial of the allowed shape reproduces the sequence."""


def _trim(coeffs: Sequence[GaussianRational]) -> Tuple[GaussianRational, ...]:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _eval_poly(coeffs: Sequence[GaussianRational], n: int) -> GaussianRational:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc if isinstance(acc, GaussianRational) else GaussianRational.coerce(acc)


def _poly_str(coeffs: Sequence[GaussianRational], var: str = "n") -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        cs = str(c)
        negative = cs.startswith("-")
        mag = cs[1:] if negative else cs
        if k == 0:
            term = mag
        else:
            if mag == "1":
                term = var
            else:
                needs_paren = "/" in mag or "+" in mag or "-" in mag or mag.endswith("i")
                term = (f"({mag})" if needs_paren else mag) + var
            if k > 1:
                term += f"^{k}"
        if not parts:
            parts.append(("-" if negative else "") + term)
        else:
            parts.append(("-" if negative else "+") + term)
    return "".join(parts) if parts else "0"


@dataclass(frozen=True)
class QuasiPolynomial:
    """Exact piecewise-polynomial formula with a periodic case split.

    ``classes[r]`` holds the coefficients (ascending powers) of the
    polynomial used when n is congruent to r modulo ``period``.
    """

    period: int
    classes: Tuple[Tuple[GaussianRational, ...], ...]

    def __post_init__(self):
        if self.period < 1 or len(self.classes) != self.period:
            raise ValueError("need one coefficient tuple per residue class")

    @classmethod
    def from_classes(cls, classes: Iterable[Sequence[object]]) -> "QuasiPolynomial":
        cleaned = tuple(
            _trim([GaussianRational.coerce(c) for c in cl]) for cl in classes
        )
        return cls(len(cleaned), cleaned)

    @classmethod
    def from_characters(cls, base=(), period2=(), period4_plus=(), period4_minus=()) -> "QuasiPolynomial":
        """Build from P + (-1)^n Q + i^n R + (-i)^n S coefficient tuples."""
        base = [GaussianRational.coerce(c) for c in base]
        q = [GaussianRational.coerce(c) for c in period2]
        r = [GaussianRational.coerce(c) for c in period4_plus]
        s = [GaussianRational.coerce(c) for c in period4_minus]
        if r or s:
            period = 4
        elif q:
            period = 2
        else:
            period = 1
        width = max((len(base), len(q), len(r), len(s), 1))
        iu = [GaussianRational(1), I, GaussianRational(-1), _MINUS_I]
        classes = []
        for res in range(period):
            sign2 = 1 if res % 2 == 0 else -1
            i_pow = iu[res % 4]
            mi_pow = iu[(4 - res) % 4]
            cl = []
            for k in range(width):
                c = base[k] if k < len(base) else ZERO
                if k < len(q):
                    c = c + q[k] * sign2
                if k < len(r):
                    c = c + r[k] * i_pow
                if k < len(s):
                    c = c + s[k] * mi_pow
                cl.append(c)
            classes.append(_trim(cl))
        return cls(period, tuple(classes))

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, n: int) -> GaussianRational:
        if n < 0:
            raise ValueError("n must be >= 0")
        return _eval_poly(self.classes[n % self.period], n)

    def degree(self) -> int:
        return max((len(cl) - 1 for cl in self.classes if cl), default=-1)

    # -- character form (periods 1, 2, 4) ------------------------------------------

    def has_character_form(self) -> bool:
        return 4 % self.period == 0

    def _char_parts(self) -> Tuple[Tuple[GaussianRational, ...], ...]:
        if not self.has_character_form():
            raise ValueError(f"period {self.period} has no Gaussian-rational character form")
        reps = [self.classes[r % self.period] for r in range(4)]
        width = max((len(c) for c in reps), default=0)
        padded = [list(c) + [ZERO] * (width - len(c)) for c in reps]
        out = []
        # characters 1, -1, i, -i evaluated on residues 0..3
        for char_powers in (
            (1, 1, 1, 1),
            (1, -1, 1, -1),
            (GaussianRational(1), _MINUS_I, GaussianRational(-1), I),
            (GaussianRational(1), I, GaussianRational(-1), _MINUS_I),
        ):
            part = []
            for k in range(width):
                acc = ZERO
                for r in range(4):
                    acc = acc + padded[r][k] * char_powers[r]
                part.append(acc * _QUARTER)
            out.append(_trim(part))
        return tuple(out)

    @property
    def base(self) -> Tuple[GaussianRational, ...]:
        return self._char_parts()[0]

    @property
    def period2(self) -> Tuple[GaussianRational, ...]:
        return self._char_parts()[1]

    @property
    def period4_plus(self) -> Tuple[GaussianRational, ...]:
        return self._char_parts()[2]

    @property
    def period4_minus(self) -> Tuple[GaussianRational, ...]:
        return self._char_parts()[3]

    def __eq__(self, other):
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        import math

        lcm = math.lcm(self.period, other.period)
        return all(
            self.classes[r % self.period] == other.classes[r % other.period]
            for r in range(lcm)
        )

    def __hash__(self):
        return hash((self.period, self.classes))

    def render(self) -> str:
        """Canonical human-readable formula string."""
        if self.has_character_form():
            base, p2, p4p, p4m = self._char_parts()
            pieces = []
            if base:
                pieces.append(_poly_str(base))
            for coeffs, tag in ((p2, "(-1)^n"), (p4p, "i^n"), (p4m, "(-i)^n")):
                if coeffs:
                    pieces.append(f"{tag}*({_poly_str(coeffs)})")
            return " + ".join(pieces) if pieces else "0"
        clauses = [
            f"n={r} (mod {self.period}): {_poly_str(cl)}"
            for r, cl in enumerate(self.classes)
        ]
        return "; ".join(clauses)

    __str__ = render


def _solve_class(ns: Sequence[int], vals: Sequence[GaussianRational]) -> List[GaussianRational]:
    """Solve the Vandermonde system sum_j c_j n^j = v exactly."""
    k = len(ns)
    rows = [[GaussianRational(n) ** j for j in range(k)] + [v] for n, v in zip(ns, vals)]
    for col in range(k):
        piv = next(i for i in range(col, k) if rows[i][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = GaussianRational(1) / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for i in range(k):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return [rows[i][k] for i in range(k)]


def fit(
    values: Sequence[object],
    max_degree: int | None = None,
    periods: Iterable[int] = DEFAULT_PERIODS,
    holdout: int = DEFAULT_HOLDOUT,
) -> QuasiPolynomial:
    """Minimal quasi-polynomial reproducing every value, holdouts included.

    ``values`` are the sequence entries at n = 0, 1, 2, ...; the fit is
    solved on a leading slice and checked on everything, so at least
    ``holdout`` surplus samples are required beyond the parameter count.
    Raises :class:`FitShapeError` when no allowed shape works, which
    signals that the sequence needs a higher degree or a longer period
    than the caller permitted.
    """
    vals = [GaussianRational.coerce(v) for v in values]
    period_list = sorted(set(int(p) for p in periods))
    if not period_list:
        raise ValueError("need at least one candidate period")
    for p in period_list:
        if p not in SUPPORTED_PERIODS:
            raise ValueError(f"unsupported period {p}; choose from {SUPPORTED_PERIODS}")
    if max_degree is None:
        max_degree = max((len(vals) - holdout) // p - 1 for p in period_list)
    tried_any = False
    for degree in range(max_degree + 1):
        for period in period_list:
            n_params = period * (degree + 1)
            if n_params + holdout > len(vals):
                continue
            tried_any = True
            classes = []
            for r in range(period):
                ns = [r + period * j for j in range(degree + 1)]
                classes.append(_solve_class(ns, [vals[n] for n in ns]))
            qp = QuasiPolynomial.from_classes(classes)
            if all(qp.evaluate(n) == v for n, v in enumerate(vals)):
                return qp
    if not tried_any:
        raise FitShapeError(
            f"sequence of {len(vals)} values is too short for degree "
            f"{max_degree} with holdout {holdout}; provide more values"
        )
    raise FitShapeError(
        f"shape insufficient: no quasi-polynomial with periods {period_list} "
        f"and degree <= {max_degree} reproduces the sequence; raise the "
        f"degree cap or allow longer periods"
    )


@dataclass(frozen=True)
class FitReport:
    """Outcome of checking a formula against recursion values."""

    checked: Tuple[int, ...]
    mismatches: Tuple[Tuple[int, GaussianRational, GaussianRational], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __str__(self):
        if self.ok:
            lo, hi = (min(self.checked), max(self.checked)) if self.checked else (0, 0)
            return f"verified exactly on {len(self.checked)} points, n={lo}..{hi}"
        return f"{len(self.mismatches)} mismatches, first at n={self.mismatches[0][0]}"


def verify_fit(
    qp: QuasiPolynomial,
    table: RecursionTable,
    alpha: int,
    n_range: Iterable[int],
) -> FitReport:
    """Compare a fitted formula against table values, point by point."""
    checked, bad = [], []
    for n in n_range:
        expected = table.mu(n, alpha)
        got = qp.evaluate(n)
        checked.append(n)
        if got != expected:
            bad.append((n, expected, got))
    return FitReport(tuple(checked), tuple(bad))
