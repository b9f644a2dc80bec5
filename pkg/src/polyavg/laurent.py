"""Sparse Laurent polynomials in one variable over the Gaussian rationals.

The coefficient map never stores zeros; the zero polynomial is the empty
map.  Products of a polynomial with its conjugate-reflection realize the
circle integrals of even-power norms as constant-term extractions.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Tuple

from .exactnum import ZERO, GaussianRational

# Below this support density the convolution falls back to the sparse
# dict path; at or above it both operands are laid out densely.
_DENSE_CUTOFF = 0.25


class LaurentPoly:
    """Finite map exponent -> nonzero GaussianRational, immutable by convention."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean: dict[int, GaussianRational] = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = GaussianRational.coerce(c)
                if c:
                    clean[int(exp)] = c
        self._coeffs = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, offset: int = 0) -> "LaurentPoly":
        """Build from a dense run of coefficients starting at z**offset."""
        return cls({offset + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def _raw(cls, coeffs: dict[int, GaussianRational]) -> "LaurentPoly":
        out = object.__new__(cls)
        out._coeffs = coeffs
        return out

    # -- queries ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def support(self) -> Tuple[int, int] | None:
        """(min exponent, max exponent), or None for the zero polynomial."""
        if not self._coeffs:
            return None
        return min(self._coeffs), max(self._coeffs)

    def coefficient(self, exponent: int) -> GaussianRational:
        return self._coeffs.get(exponent, ZERO)

    def constant_term(self, m: int = 0) -> GaussianRational:
        """Constant term of z**m * self, i.e. the coefficient of z**(-m)."""
        return self._coeffs.get(-m, ZERO)

    def terms(self) -> Iterator[Tuple[int, GaussianRational]]:
        """Terms in increasing exponent order."""
        for exp in sorted(self._coeffs):
            yield exp, self._coeffs[exp]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            s = acc.get(exp)
            s = c if s is None else s + c
            if s:
                acc[exp] = s
            else:
                acc.pop(exp, None)
        return LaurentPoly._raw(acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "LaurentPoly":
        factor = GaussianRational.coerce(factor)
        if not factor:
            return LaurentPoly.zero()
        return LaurentPoly._raw({e: c * factor for e, c in self._coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by z**k."""
        return LaurentPoly._raw({e + k: c for e, c in self._coeffs.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return LaurentPoly.zero()
        lo_a, hi_a = min(a), max(a)
        lo_b, hi_b = min(b), max(b)
        span_a, span_b = hi_a - lo_a + 1, hi_b - lo_b + 1
        if len(a) >= _DENSE_CUTOFF * span_a and len(b) >= _DENSE_CUTOFF * span_b:
            return self._mul_dense(a, lo_a, span_a, b, lo_b, span_b)
        acc: dict[int, GaussianRational] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = acc.get(e)
                p = ca * cb
                s = p if s is None else s + p
                acc[e] = s
        return LaurentPoly._raw({e: c for e, c in acc.items() if c})

    @staticmethod
    def _mul_dense(a, lo_a, span_a, b, lo_b, span_b) -> "LaurentPoly":
        da = [ZERO] * span_a
        for e, c in a.items():
            da[e - lo_a] = c
        db = [ZERO] * span_b
        for e, c in b.items():
            db[e - lo_b] = c
        out = [ZERO] * (span_a + span_b - 1)
        for i, ca in enumerate(da):
            if not ca:
                continue
            for j, cb in enumerate(db):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        base = lo_a + lo_b
        return LaurentPoly._raw({base + k: c for k, c in enumerate(out) if c})

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj_reflect(self) -> "LaurentPoly":
        """Conjugate the coefficients and invert the variable.

        On the unit circle the result is the pointwise complex conjugate
        of this polynomial; applying it twice is the identity.
        """
        return LaurentPoly._raw({-e: c.conjugate() for e, c in self._coeffs.items()})

    def __str__(self):
        if not self._coeffs:
            return "0"
        return " + ".join(f"({c})*z^{e}" for e, c in self.terms())

    __repr__ = __str__


def norm_power(p: LaurentPoly, alpha: int) -> GaussianRational:
    """Exact 2*alpha power of the L_{2*alpha} circle norm of p.

    Equals the constant term of (p * conj_reflect(p))**alpha; computed as
    p**alpha times its own conjugate-reflection, which is the same product
    with smaller intermediate supports.
    """
    if alpha < 1:
        raise ValueError("alpha must be a positive integer")
    r = p ** alpha
    return (r * r.conj_reflect()).constant_term()
