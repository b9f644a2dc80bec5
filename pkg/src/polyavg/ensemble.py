"""Coefficient sets, the polynomial ensemble, and the brute-force oracle.

The ensemble averaged over is *all* coefficient tuples (a_0..a_n) drawn
from the set, weight 1/d^(n+1).  The classic count that excludes a zero
leading coefficient is exposed separately as ``degree_exact_count`` for
reference, but plays no role in the averages: the tabulated value 1/2
for the exponent-2 average of {0,1} at n=0 only arises when the zero
polynomial is included, which pins down the all-tuples reading.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple, Tuple

from gmpy2 import mpq

from .exactnum import GaussianRational, ParseError, format_gaussian, parse_gaussian
from .laurent import LaurentPoly

DEFAULT_ENUMERATION_BUDGET = 10_000_000


class EnumerationBudgetError(RuntimeError):
    """Raised when a brute-force enumeration would exceed its tuple budget."""

    def __init__(self, tuples: int, budget: int):
        super().__init__(
            f"enumeration of {tuples} coefficient tuples exceeds the budget "
            f"of {budget}; use the recursion method instead"
        )
        self.tuples = tuples
        self.budget = budget


class CoefficientSet:
    """Ordered finite set of distinct Gaussian rationals."""

    __slots__ = ("elements", "_literal")

    def __init__(self, elements):
        elems = tuple(GaussianRational.coerce(e) for e in elements)
        if not elems:
            raise ValueError("coefficient set must be non-empty")
        seen = set()
        for e in elems:
            if e in seen:
                raise ValueError(f"duplicate element {format_gaussian(e)}")
            seen.add(e)
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_literal", None)

    def __setattr__(self, name, value):
        raise AttributeError("CoefficientSet is immutable")

    @property
    def d(self) -> int:
        return len(self.elements)

    @property
    def contains_zero(self) -> bool:
        return any(e.is_zero() for e in self.elements)

    def is_real(self) -> bool:
        return all(e.is_real() for e in self.elements)

    def is_zero_sum(self) -> bool:
        total = GaussianRational(0)
        for e in self.elements:
            total = total + e
        return total.is_zero()

    def power_sum(self, s: int, t: int) -> GaussianRational:
        """Sum over elements of x**s * conj(x)**t (exact, not cached here)."""
        total = GaussianRational(0)
        for x in self.elements:
            total = total + x ** s * x.conjugate() ** t
        return total

    def scaled(self, factor) -> "CoefficientSet":
        factor = GaussianRational.coerce(factor)
        return CoefficientSet([x * factor for x in self.elements])

    def literal(self) -> str:
        lit = object.__getattribute__(self, "_literal")
        if lit is None:
            lit = "{" + ",".join(format_gaussian(e) for e in self.elements) + "}"
            object.__setattr__(self, "_literal", lit)
        return lit

    def __eq__(self, other):
        if not isinstance(other, CoefficientSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"CoefficientSet({self.literal()})"

    def tuple_count(self, n: int) -> int:
        """Number of coefficient tuples (a_0..a_n): d**(n+1)."""
        if n < 0:
            raise ValueError("degree index must be >= 0")
        return self.d ** (n + 1)

    def degree_exact_count(self, n: int) -> int:
        """Count of degree-exactly-n members (reference only, see module doc)."""
        if n < 0:
            raise ValueError("degree index must be >= 0")
        if n == 0:
            return self.d
        if self.contains_zero:
            return (self.d - 1) * self.d ** n
        return self.d ** (n + 1)


def parse_coefficient_set(text: str) -> CoefficientSet:
    """Parse a set literal: "{-1,1}", "{0,i}", "{1/2,-1/2}", or "height:h"."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty coefficient-set literal", text)
    if s.startswith("height:"):
        body = s[len("height:"):]
        if not body.isdigit():
            raise ParseError("height must be a non-negative integer", text, len("height:"))
        h = int(body)
        return CoefficientSet([GaussianRational(k) for k in range(-h, h + 1)])
    if not (s.startswith("{") and s.endswith("}")):
        raise ParseError("expected braces around the element list", text)
    body = s[1:-1]
    if not body:
        raise ParseError("coefficient set must be non-empty", text, 1)
    elements = []
    position = 1
    for chunk in body.split(","):
        if not chunk:
            raise ParseError("empty element", text, position)
        try:
            elements.append(parse_gaussian(chunk))
        except ParseError as exc:
            raise ParseError(str(exc), text, position) from None
        position += len(chunk) + 1
    try:
        return CoefficientSet(elements)
    except ValueError as exc:
        raise ParseError(str(exc), text) from None


class AverageKey(NamedTuple):
    """Index (n, s, t, m) of a monomial-weighted ensemble average."""

    n: int
    s: int
    t: int
    m: int

    def validate(self) -> "AverageKey":
        if self.n < 0 or self.s < 0 or self.t < 0:
            raise ValueError(f"n, s, t must be non-negative in {self}")
        return self

    def in_support(self) -> bool:
        """Averages vanish outside -n*s <= m <= n*t."""
        return -self.n * self.s <= self.m <= self.n * self.t


AverageValue = GaussianRational


def _tuples(seq: CoefficientSet, n: int) -> Iterator[Tuple[GaussianRational, ...]]:
    """All coefficient tuples (a_0..a_n), a_0 varying fastest."""
    for rev in itertools.product(seq.elements, repeat=n + 1):
        yield rev[::-1]


_AVERAGED_CACHE: dict = {}


def averaged_power_poly(
    T: CoefficientSet,
    n: int,
    s: int,
    t: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> LaurentPoly:
    """Average of p(z)**s * conj_reflect(p)**t over all coefficient tuples.

    Every monomial-weighted average for this (n, s, t) is a coefficient
    of the returned polynomial, so one enumeration serves all m.
    """
    key = (T.elements, n, s, t)
    cached = _AVERAGED_CACHE.get(key)
    if cached is not None:
        return cached
    total = T.tuple_count(n)
    if total > budget:
        raise EnumerationBudgetError(total, budget)
    acc = LaurentPoly.zero()
    hi = max(s, t)
    for coeffs in _tuples(T, n):
        p = LaurentPoly.from_coeffs(coeffs)
        powers = [LaurentPoly.one(), p]
        for _ in range(hi - 1):
            powers.append(powers[-1] * p)
        prod = powers[s] * powers[t].conj_reflect()
        acc = acc + prod
    result = acc.scale(mpq(1, total))
    _AVERAGED_CACHE[key] = result
    return result


def oracle_e(
    T: CoefficientSet,
    key: AverageKey,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> AverageValue:
    """Ground-truth average by full enumeration of the ensemble."""
    key = AverageKey(*key).validate()
    return averaged_power_poly(T, key.n, key.s, key.t, budget).constant_term(key.m)


def oracle_mu(
    T: CoefficientSet,
    n: int,
    alpha: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> AverageValue:
    """Average 2*alpha-power norm over the ensemble, by enumeration."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    return oracle_e(T, AverageKey(n, alpha, alpha, 0), budget)
