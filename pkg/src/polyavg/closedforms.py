"""Catalog of closed-form results for ensemble averages.

Four families live here, all exact:

* power sums A(s, t) of a coefficient set, cached per set;
* rational generating functions in x whose series coefficients are the
  averages (general set for exponents 2 and 4, zero-element-sum sets up
  to exponent 8);
* published explicit n-formulas for the classic sets, kept as golden
  evaluators;
* piecewise closed forms for monomial-weighted averages.

The generating-function term tables are frozen output of
``tools/derive_catalog.py``, which recovers them from the recursion by
exact linear algebra over many sample sets.  Historical displays of the
general exponent-4 result and the zero-sum exponent-8 result circulate
with garbled terms (wrong power-sum superscripts in one, wrong x-powers
in the other), so the mechanically derived constants are the ones
trusted here; the test suite validates them against the enumeration
oracle and the recursion on both real and complex sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .ensemble import CoefficientSet, parse_coefficient_set
from .exactnum import GaussianRational, ZERO
from .fitter import QuasiPolynomial

# ---------------------------------------------------------------------------
# power sums
# ---------------------------------------------------------------------------


class PowerSums:
    """Cached power sums A(s, t) = sum_j x_j**s * conj(x_j)**t of one set."""

    def __init__(self, coefficient_set: CoefficientSet):
        self.set = coefficient_set
        self._cache: Dict[Tuple[int, int], GaussianRational] = {}

    def get(self, s: int, t: int) -> GaussianRational:
        if s < 0 or t < 0:
            raise ValueError("power-sum indices must be non-negative")
        key = (s, t)
        value = self._cache.get(key)
        if value is None:
            value = self.set.power_sum(s, t)
            self._cache[key] = value
        return value


_POWER_SUMS: Dict[Tuple, PowerSums] = {}


def power_sums(T: CoefficientSet) -> PowerSums:
    cached = _POWER_SUMS.get(T.elements)
    if cached is None:
        cached = PowerSums(T)
        _POWER_SUMS[T.elements] = cached
    return cached


def power_sum(T: CoefficientSet, s: int, t: int) -> GaussianRational:
    return power_sums(T).get(s, t)


# ---------------------------------------------------------------------------
# rational generating functions
# ---------------------------------------------------------------------------


def _poly_mul(p: Sequence[GaussianRational], q: Sequence[GaussianRational]):
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return out


def _poly_add(p, q):
    out = list(p) + [ZERO] * (len(q) - len(p))
    for j, b in enumerate(q):
        out[j] = out[j] + b
    while out and not out[-1]:
        out.pop()
    return out


@dataclass(frozen=True)
class RationalGF:
    """Quotient of polynomials in x; the series expansion is exact."""

    num: Tuple[GaussianRational, ...]
    den: Tuple[GaussianRational, ...]

    def __post_init__(self):
        if not self.den or not self.den[0]:
            raise ValueError("denominator needs a nonzero constant term")

    @classmethod
    def from_coeffs(cls, num, den) -> "RationalGF":
        return cls(
            tuple(GaussianRational.coerce(c) for c in num),
            tuple(GaussianRational.coerce(c) for c in den),
        )

    def __add__(self, other: "RationalGF") -> "RationalGF":
        num = _poly_add(
            _poly_mul(self.num, other.den), _poly_mul(other.num, self.den)
        )
        return RationalGF(tuple(num), tuple(_poly_mul(self.den, other.den)))

    def scale(self, factor) -> "RationalGF":
        factor = GaussianRational.coerce(factor)
        return RationalGF(tuple(c * factor for c in self.num), self.den)

    def series(self, count: int) -> List[GaussianRational]:
        """First ``count`` series coefficients, by exact long division."""
        inv0 = GaussianRational(1) / self.den[0]
        out: List[GaussianRational] = []
        for k in range(count):
            acc = self.num[k] if k < len(self.num) else ZERO
            for j in range(1, min(k, len(self.den) - 1) + 1):
                acc = acc - self.den[j] * out[k - j]
            out.append(acc * inv0)
        return out

    def coefficient(self, n: int) -> GaussianRational:
        return self.series(n + 1)[n]


# Term tables: each row is (columns, numerator, denominator) and stands
# for the summand  prod_j A(a_j, b_j) / d**len(columns) * num(x)/den(x).
# The exponent-2/4 tables are classical; exponent-6/8 zero-sum tables are
# regenerated by tools/derive_catalog.py.

_GF_MU2_TERMS = [
    (((1, 1),), ("1",), ("1", "-2", "1")),
]

_GF_MU4_GENERAL_TERMS = [
    (((2, 2),), ("1",), ("1", "-2", "1")),
    (((1, 1), (1, 1)), ("0", "4"), ("1", "-3", "3", "-1")),
    (((0, 2), (1, 0), (1, 0)), ("0", "0", "2"), ("1", "-2", "0", "2", "-1")),
    (((0, 1), (0, 1), (2, 0)), ("0", "0", "2"), ("1", "-2", "0", "2", "-1")),
    (((0, 1), (0, 1), (1, 0), (1, 0)), ("0", "0", "0", "8"), ("1", "-3", "2", "2", "-3", "1")),
]

_ZERO_SUM_MU4_TERMS = [
    (((2, 2),), ("1",), ("1", "-2", "1")),
    (((1, 1), (1, 1)), ("0", "4"), ("1", "-3", "3", "-1")),
]

_ZERO_SUM_MU6_TERMS = [
    (((3, 3),), ("1",), ("1", "-2", "1")),
    (((1, 1), (2, 2)), ("0", "18"), ("1", "-3", "3", "-1")),
    (((1, 1), (1, 1), (1, 1)), ("0", "0", "36"), ("1", "-4", "6", "-4", "1")),
]

_ZERO_SUM_MU8_TERMS = [
    (((4, 4),), ("1",), ("1", "-2", "1")),
    (((1, 1), (3, 3)), ("0", "32"), ("1", "-3", "3", "-1")),
    (((2, 2), (2, 2)), ("0", "36"), ("1", "-3", "3", "-1")),
    (((1, 1), (1, 1), (2, 2)), ("0", "0", "432"), ("1", "-4", "6", "-4", "1")),
    (((1, 1), (1, 1), (1, 1), (1, 1)), ("0", "0", "0", "576"), ("1", "-5", "10", "-10", "5", "-1")),
    (((0, 2), (0, 2), (2, 0), (2, 0)), ("0", "0", "0", "72"), ("1", "-3", "2", "2", "-3", "1")),
    (((0, 2), (1, 2), (3, 0)), ("0", "0", "0", "48"), ("1", "-2", "1", "-1", "2", "-1")),
    (((0, 3), (2, 0), (2, 1)), ("0", "0", "0", "48"), ("1", "-2", "1", "-1", "2", "-1")),
    (((0, 2), (2, 1), (2, 1)), ("0", "0", "72"), ("1", "-2", "0", "2", "-1")),
    (((1, 2), (1, 2), (2, 0)), ("0", "0", "72"), ("1", "-2", "0", "2", "-1")),
    (((0, 2), (0, 2), (4, 0)), ("0", "0", "6"), ("1", "-2", "0", "2", "-1")),
    (((0, 4), (2, 0), (2, 0)), ("0", "0", "6"), ("1", "-2", "0", "2", "-1")),
]

_GF_TERM_TABLES = {
    (1, False): _GF_MU2_TERMS,
    (2, False): _GF_MU4_GENERAL_TERMS,
    (1, True): _GF_MU2_TERMS,
    (2, True): _ZERO_SUM_MU4_TERMS,
    (3, True): _ZERO_SUM_MU6_TERMS,
    (4, True): _ZERO_SUM_MU8_TERMS,
}


class ApplicabilityError(ValueError):
    """A catalog formula was asked about a set outside its domain."""


def _assemble_gf(T: CoefficientSet, terms) -> RationalGF:
    ps = power_sums(T)
    d = T.d
    total: Optional[RationalGF] = None
    for columns, num, den in terms:
        scale = GaussianRational(mpq(1, d ** len(columns)))
        for (a, b) in columns:
            scale = scale * ps.get(a, b)
        if not scale:
            continue
        part = RationalGF.from_coeffs(num, den).scale(scale)
        total = part if total is None else total + part
    if total is None:
        total = RationalGF.from_coeffs(("0",), ("1",))
    return total


def gf_mu(T: CoefficientSet, alpha: int) -> RationalGF:
    """Generating function of the exponent-2*alpha average norms of T.

    Exponents 2 and 4 (alpha = 1, 2) apply to every set; alpha = 3, 4
    require the set elements to sum to zero.
    """
    if alpha not in (1, 2, 3, 4):
        raise ApplicabilityError(f"no generating function cataloged for alpha={alpha}")
    zero_sum = T.is_zero_sum()
    if alpha >= 3 and not zero_sum:
        raise ApplicabilityError(
            f"alpha={alpha} generating function requires a zero element sum; "
            f"{T.literal()} sums to a nonzero value"
        )
    return _assemble_gf(T, _GF_TERM_TABLES[(alpha, zero_sum)])


# ---------------------------------------------------------------------------
# published explicit formulas
# ---------------------------------------------------------------------------


def height_of(T: CoefficientSet) -> Optional[int]:
    """h when the set is exactly the integers -h..h, else None."""
    values = set()
    for x in T.elements:
        if not x.is_real() or x.re.denominator != 1:
            return None
        values.add(int(x.re))
    h = max(abs(v) for v in values)
    return h if values == set(range(-h, h + 1)) else None


@dataclass(frozen=True)
class NamedFormula:
    """One catalog entry with a stable id and an applicability predicate."""

    id: str
    kind: str  # "published" | "gf" | "weighted"
    alpha: Optional[int]
    description: str
    applicability: str
    applies: Callable[[CoefficientSet], bool] = field(repr=False)
    quasi_builder: Optional[Callable[[CoefficientSet], QuasiPolynomial]] = field(
        default=None, repr=False
    )
    default_set: Optional[str] = None

    def quasi(self, T: Optional[CoefficientSet] = None) -> QuasiPolynomial:
        if self.quasi_builder is None:
            raise ApplicabilityError(f"{self.id} has no explicit n-formula")
        if T is None:
            if self.default_set is None:
                raise ApplicabilityError(f"{self.id} needs a coefficient set")
            T = parse_coefficient_set(self.default_set)
        if not self.applies(T):
            raise ApplicabilityError(
                f"{self.id} does not apply to {T.literal()} ({self.applicability})"
            )
        return self.quasi_builder(T)

    def evaluate(self, n: int, T: Optional[CoefficientSet] = None) -> GaussianRational:
        return self.quasi(T).evaluate(n)


_CATALOG: Dict[str, NamedFormula] = {}


def _register(entry: NamedFormula) -> None:
    if entry.id in _CATALOG:
        raise ValueError(f"duplicate catalog id {entry.id}")
    _CATALOG[entry.id] = entry


def catalog() -> List[NamedFormula]:
    return list(_CATALOG.values())


def catalog_entry(formula_id: str) -> NamedFormula:
    try:
        return _CATALOG[formula_id]
    except KeyError:
        raise KeyError(f"unknown catalog id {formula_id!r}") from None


def published_mu(formula_id: str, n: int, T: Optional[CoefficientSet] = None) -> GaussianRational:
    """Evaluate a cataloged explicit formula exactly at degree index n."""
    return catalog_entry(formula_id).evaluate(n, T)


def _literal_match(literal: str) -> Callable[[CoefficientSet], bool]:
    target = parse_coefficient_set(literal)
    return lambda T: frozenset(T.elements) == frozenset(target.elements)


def _fixed(qp: QuasiPolynomial) -> Callable[[CoefficientSet], QuasiPolynomial]:
    return lambda T: qp


def _register_published(family: str, literal: str, formulas: Dict[int, QuasiPolynomial]) -> None:
    for alpha, qp in formulas.items():
        _register(
            NamedFormula(
                id=f"{family}_mu{2 * alpha}",
                kind="published",
                alpha=alpha,
                description=f"explicit formula for the exponent-{2 * alpha} average over {literal}",
                applicability=f"set {literal}",
                applies=_literal_match(literal),
                quasi_builder=_fixed(qp),
                default_set=literal,
            )
        )


def _qp(base=(), period2=()) -> QuasiPolynomial:
    return QuasiPolynomial.from_characters(base=base, period2=period2)


_register_published(
    "littlewood",
    "{-1,1}",
    {
        0: _qp(base=(1,)),
        1: _qp(base=(1, 1)),
        2: _qp(base=(1, 3, 2)),
        3: _qp(base=(1, 4, 9, 6)),
        4: _qp(base=(4, 5, 4, 30, 24), period2=(-3,)),
        5: _qp(base=(-144, 281, 265, -350, 150, 120), period2=(145, -75)),
    },
)

_register_published(
    "height1",
    "{-1,0,1}",
    {
        0: _qp(base=(1,)),
        1: _qp(base=("2/3", "2/3")),
        2: _qp(base=("2/3", "14/9", "8/9")),
        3: _qp(base=("2/3", "26/9", "4", "16/9")),
        4: _qp(base=("10/9", "74/27", "256/27", "352/27", "128/27"), period2=("-4/9",)),
        5: _qp(
            base=("-242/27", "2674/81", "140/9", "0", "1600/27", "1280/81"),
            period2=("260/27", "-200/27"),
        ),
    },
)

# The exponent-6 entry for {0,1} also serves {0,i}: scaling a set by a
# unit-modulus constant leaves every norm average unchanged, so the two
# sequences are identical (the variant of this formula that circulates
# with extra period-4 terms fails that identity and is not real-valued
# at n=2; the test suite pins the corrected reading against the oracle).
_ZERO_ONE_FORMULAS = {
    0: _qp(base=(1,)),
    1: _qp(base=("1/2", "1/2")),
    2: _qp(base=("15/32", "23/24", "9/16", "1/24"), period2=("1/32",)),
    3: _qp(
        base=("113/256", "4143/2560", "35/16", "155/128", "23/128", "11/1280"),
        period2=("15/256", "45/512"),
    ),
}

_register_published("zero_one", "{0,1}", _ZERO_ONE_FORMULAS)
_register_published("zero_i", "{0,i}", _ZERO_ONE_FORMULAS)


def _height_mu2(T: CoefficientSet) -> QuasiPolynomial:
    h = height_of(T)
    c = mpq(h * (h + 1), 3)
    return QuasiPolynomial.from_characters(base=(c, c))


def _height_mu4(T: CoefficientSet) -> QuasiPolynomial:
    h = height_of(T)
    c = mpq(h * (h + 1), 45)
    return QuasiPolynomial.from_characters(
        base=(
            c * 3 * (3 * h * h + 3 * h - 1),
            c * (19 * h * h + 19 * h - 3),
            c * 10 * h * (h + 1),
        )
    )


for _alpha, _builder in ((1, _height_mu2), (2, _height_mu4)):
    _register(
        NamedFormula(
            id=f"height_h_mu{2 * _alpha}",
            kind="published",
            alpha=_alpha,
            description=f"exponent-{2 * _alpha} average for integer sets -h..h, any h",
            applicability="set is -h..h for some integer h >= 0",
            applies=lambda T: height_of(T) is not None,
            quasi_builder=_builder,
        )
    )


def _register_gf(formula_id: str, alpha: int, zero_sum: bool, description: str) -> None:
    applies = (lambda T: T.is_zero_sum()) if zero_sum else (lambda T: True)
    _register(
        NamedFormula(
            id=formula_id,
            kind="gf",
            alpha=alpha,
            description=description,
            applicability="elements sum to zero" if zero_sum else "any set",
            applies=applies,
        )
    )


_register_gf("case2_mu2", 1, False, "generating function of exponent-2 averages")
_register_gf("case4_mu4", 2, False, "generating function of exponent-4 averages")
_register_gf("case00_mu2", 1, True, "zero-sum generating function, exponent 2")
_register_gf("case00_mu4", 2, True, "zero-sum generating function, exponent 4")
_register_gf("case00_mu6", 3, True, "zero-sum generating function, exponent 6")
_register_gf("case00_mu8", 4, True, "zero-sum generating function, exponent 8")


# ---------------------------------------------------------------------------
# weighted piecewise closed forms
# ---------------------------------------------------------------------------


def weighted_mu_closed(T: CoefficientSet, alpha: int, n: int, m: int) -> GaussianRational:
    """Monomial-weighted average norm from the piecewise closed forms.

    alpha=1 applies to every set; alpha=2 requires a zero element sum
    (and vanishes for odd m).  The weight window is |m| <= alpha*n; the
    m = 0 branch is the plain average-norm closed form.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    ps = power_sums(T)
    d = T.d
    if alpha == 1:
        if m == 0:
            return ps.get(1, 1) * mpq(n + 1, d)
        if -n <= m <= n:
            return ps.get(0, 1) * ps.get(1, 0) * mpq(n + 1 - abs(m), d * d)
        return ZERO
    if alpha == 2:
        if not T.is_zero_sum():
            raise ApplicabilityError(
                f"the weighted exponent-4 closed form requires a zero element "
                f"sum; {T.literal()} sums to a nonzero value"
            )
        if m == 0:
            a11 = ps.get(1, 1)
            return ps.get(2, 2) * mpq(n + 1, d) + a11 * a11 * mpq(2 * n * (n + 1), d * d)
        if m % 2 == 0 and -2 * n <= m <= 2 * n:
            return ps.get(0, 2) * ps.get(2, 0) * mpq(n + 1 - abs(m) // 2, d * d)
        return ZERO
    raise ApplicabilityError(f"no weighted closed form cataloged for alpha={alpha}")


def average_closed_s1t2(T: CoefficientSet, n: int, m: int) -> GaussianRational:
    """Closed form of the (1,2)-power average: A(1,2)/d on 0 <= m <= n.

    Valid for zero-sum sets (for n = 0 it is the base case and holds for
    every set); elsewhere the constant-coefficient recursion picks up
    cross terms and no single-window closed form exists.
    """
    if n > 0 and not T.is_zero_sum():
        raise ApplicabilityError(
            f"the (1,2) closed form requires a zero element sum for n > 0; "
            f"{T.literal()} sums to a nonzero value"
        )
    if 0 <= m <= n:
        return power_sum(T, 1, 2) / T.d
    return ZERO


def average_closed_s2t1(T: CoefficientSet, n: int, m: int) -> GaussianRational:
    """Mirror of :func:`average_closed_s1t2`: A(2,1)/d on -n <= m <= 0."""
    if n > 0 and not T.is_zero_sum():
        raise ApplicabilityError(
            f"the (2,1) closed form requires a zero element sum for n > 0; "
            f"{T.literal()} sums to a nonzero value"
        )
    if -n <= m <= 0:
        return power_sum(T, 2, 1) / T.d
    return ZERO


for _id, _alpha, _desc, _app in (
    ("weighted_a1", 1, "weighted exponent-2 averages, window |m| <= n", "any set"),
    ("weighted_a2_zero_sum", 2, "weighted exponent-4 averages, even m window", "elements sum to zero"),
    ("weighted_s1t2", None, "(1,2)-power averages, window 0 <= m <= n", "zero element sum, or n = 0"),
    ("weighted_s2t1", None, "(2,1)-power averages, window -n <= m <= 0", "zero element sum, or n = 0"),
):
    _register(
        NamedFormula(
            id=_id,
            kind="weighted",
            alpha=_alpha,
            description=_desc,
            applicability=_app,
            applies=(lambda T: True) if _alpha == 1 else (lambda T: T.is_zero_sum()),
        )
    )


# Historical explicit n-polynomial for the exponent-4 average of a
# general (non-zero-sum) set.  Kept only as a regression vector: for
# zero-sum sets it agrees with the generating function, but for general
# sets it does not (e.g. it yields 327/8 instead of 42 for {1,2} at
# n=1), so it is excluded from the catalog and from every battery.
def _general_mu4_printed_polynomial(T: CoefficientSet, n: int) -> GaussianRational:
    ps = power_sums(T)
    d = T.d
    a10, a01 = ps.get(1, 0), ps.get(0, 1)
    a11, a22 = ps.get(1, 1), ps.get(2, 2)
    sq = a10 * a10 * a01 + a01 * a01 * a10
    quad = a10 * a10 * a01 * a01
    sign = 1 - (-1) ** (n % 2)
    value = quad * mpq(2 * n ** 3, 3 * d ** 4)
    value = value + (
        a11 * a11 * mpq(2, d * d) + sq * mpq(1, 2 * d ** 3) - quad * mpq(1, d ** 4)
    ) * (n * n)
    value = value + (
        a11 * a11 * mpq(2, d * d) + a22 * mpq(1, d) - quad * mpq(2, 3 * d ** 4)
    ) * n
    value = value + a22 * mpq(1, d)
    value = value + quad * mpq(sign, 2 * d ** 4) - sq * mpq(sign, 3 * d ** 3)
    return value
