"""Exact rational and Gaussian-rational arithmetic.

Every quantity in this package is a rational or a complex number with
rational real and imaginary parts, stored reduced, so equality between
values computed along different routes is structural.  The rational
layer is gmpy2's ``mpq`` (arbitrary precision, always reduced, positive
denominator); ``GaussianRational`` is an immutable pair of those.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from gmpy2 import mpq

Rational = mpq
RationalLike = Union[int, mpq, Fraction, str]

_ZERO_Q = mpq(0)
_ONE_Q = mpq(1)


def rational(value: RationalLike, den: RationalLike = 1) -> mpq:
    """Coerce to an exact rational; raises ZeroDivisionError for den=0."""
    if den == 1:
        return mpq(value)
    return mpq(value) / mpq(den)


class GaussianRational:
    """A complex number with rational real and imaginary parts.

    Values are immutable once constructed and safe to share between
    threads; all arithmetic returns new objects.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _wrap(cls, re: mpq, im: mpq) -> "GaussianRational":
        out = object.__new__(cls)
        object.__setattr__(out, "re", re)
        object.__setattr__(out, "im", im)
        return out

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, mpq, Fraction)):
            return cls._wrap(mpq(value), _ZERO_Q)
        if isinstance(value, str):
            return parse_gaussian(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    # -- predicates ------------------------------------------------------------

    def is_real(self) -> bool:
        return not self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- ring operations --------------------------------------------------------

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self._wrap(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self._wrap(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __neg__(self):
        return self._wrap(-self.re, -self.im)

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        # real-by-real is by far the hottest case in enumeration loops
        if not b and not d:
            return self._wrap(a * c, _ZERO_Q)
        return self._wrap(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        c, d = other.re, other.im
        if not c and not d:
            raise ZeroDivisionError("division by zero Gaussian rational")
        if not d:
            return self._wrap(self.re / c, self.im / c)
        norm = c * c + d * d
        a, b = self.re, self.im
        return self._wrap((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return self._wrap(self.re, -self.im)

    def norm_squared(self) -> mpq:
        """|x|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    # -- comparison and hashing ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, mpq, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gaussian(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def format_rational(q) -> str:
    """Canonical rendering: "p/q", or "p" when the denominator is 1."""
    return str(mpq(q))


def _imag_unit_part(b: mpq) -> str:
    if b == 1:
        return "i"
    if b == -1:
        return "-i"
    return f"{b}i"


def format_gaussian(x: GaussianRational) -> str:
    """Canonical rendering: "a+bi", "a-bi", "bi", or "a".

    Each part is rendered in reduced rational form.  This format is the
    bit-exact output contract of the CLI and golden tests, and
    :func:`parse_gaussian` accepts exactly this grammar.
    """
    if not x.im:
        return str(x.re)
    if not x.re:
        return _imag_unit_part(x.im)
    if x.im > 0:
        return f"{x.re}+{_imag_unit_part(x.im)}"
    return f"{x.re}{_imag_unit_part(x.im)}"


class ParseError(ValueError):
    """Raised for malformed rational / Gaussian-rational literals."""

    def __init__(self, message: str, text: str, position: int = 0):
        super().__init__(f"{message} in {text!r} at position {position}")
        self.text = text
        self.position = position


_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_gaussian(text: str) -> GaussianRational:
    """Parse "a+bi" / "a-bi" / "bi" / "a" with rational parts.

    Accepts the same grammar that :func:`format_gaussian` produces, e.g.
    "2", "-1/2", "i", "-i", "3/4i", "1/2-1/3i".
    """
    s = text.strip()
    if not s:
        raise ParseError("empty literal", text)

    # split into real and imaginary summands at a '+'/'-' that is not leading
    split_at = None
    for pos in range(1, len(s)):
        if s[pos] in "+-" and s[pos - 1] not in "+-/":
            split_at = pos
            break
    parts = [s] if split_at is None else [s[:split_at], s[split_at:]]

    re_part = _ZERO_Q
    im_part = _ZERO_Q
    seen_real = seen_imag = False
    offset = 0
    for part in parts:
        if part.endswith("i"):
            if seen_imag:
                raise ParseError("duplicate imaginary part", text, offset)
            seen_imag = True
            body = part[:-1]
            if body in ("", "+"):
                im_part = _ONE_Q
            elif body == "-":
                im_part = -_ONE_Q
            else:
                im_part = _parse_rational_token(body, text, offset)
        else:
            if seen_real:
                raise ParseError("duplicate real part", text, offset)
            seen_real = True
            re_part = _parse_rational_token(part, text, offset)
        offset += len(part)
    return GaussianRational(re_part, im_part)


def _parse_rational_token(token: str, full: str, offset: int) -> mpq:
    if not _RATIONAL_RE.fullmatch(token):
        raise ParseError("malformed rational", full, offset)
    try:
        return mpq(token.lstrip("+"))
    except ZeroDivisionError:
        raise ParseError("zero denominator", full, offset) from None


def binomial(n: int, k: int) -> int:
    """C(n, k); zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(total: int, parts) -> int:
    """total! / prod(parts!) for non-negative parts summing to total."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be non-negative")
    if sum(parts) != total:
        raise ValueError(f"parts {parts} do not sum to {total}")
    result = 1
    remaining = total
    for p in parts:
        result *= math.comb(remaining, p)
        remaining -= p
    return result
