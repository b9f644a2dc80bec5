"""Direct evaluation of averages as constrained multinomial sums.

Expanding the s-th and t-th powers of a polynomial and its
conjugate-reflection multinomially, the average over all coefficient
tuples factorizes position by position into power sums of the set.
What remains is a sum over pairs of compositions (k_1..k_{n+1}) of s and
(l_1..l_{n+1}) of t subject to the moment constraint

    sum_a (a - 1) * (l_a - k_a) = m,

which this module enumerates with pruning.  It is an independent route
to the same numbers as the enumeration oracle and the recursion, kept
deliberately separate for cross-checking.
"""

from __future__ import annotations

import math
from typing import Iterator, List, Tuple

from gmpy2 import mpq

from .closedforms import power_sums
from .ensemble import AverageKey, AverageValue, CoefficientSet
from .exactnum import GaussianRational, ZERO, multinomial

DEFAULT_COMPOSITION_BUDGET = 10_000_000


class CompositionBudgetError(RuntimeError):
    """Raised when the composition-pair count exceeds its budget."""

    def __init__(self, pairs: int, budget: int):
        super().__init__(
            f"{pairs} composition pairs exceed the budget of {budget}; "
            f"use the recursion method instead"
        )
        self.pairs = pairs
        self.budget = budget


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All length-``parts`` tuples of non-negative ints summing to ``total``.

    Lexicographic order; (0, 2), (1, 1), (2, 0) for (total=2, parts=2).
    """
    if parts < 1:
        raise ValueError("parts must be >= 1")
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def _constrained_compositions(total: int, parts: int, target_moment: int) -> Iterator[Tuple[int, ...]]:
    """Compositions with sum_j j*c_j equal to ``target_moment`` (0-indexed).

    Positions are weighted by their index; a partial choice is pruned as
    soon as the remaining positions cannot reach the target.
    """

    def rec(pos: int, remaining: int, moment: int, prefix: List[int]):
        if pos == parts - 1:
            if moment == remaining * pos:
                prefix.append(remaining)
                yield tuple(prefix)
                prefix.pop()
            return
        lo, hi = pos + 1, parts - 1
        for c in range(remaining + 1):
            keep = remaining - c
            rest = moment - c * pos
            if rest < keep * lo or rest > keep * hi:
                continue
            prefix.append(c)
            yield from rec(pos + 1, keep, rest, prefix)
            prefix.pop()

    if target_moment < 0 or target_moment > total * (parts - 1):
        return
    yield from rec(0, total, target_moment, [])


def _moment(comp: Tuple[int, ...]) -> int:
    return sum(j * c for j, c in enumerate(comp))


def pair_count(n: int, s: int, t: int) -> int:
    """Unpruned composition-pair count C(n+s, s) * C(n+t, t)."""
    return math.comb(n + s, s) * math.comb(n + t, t)


def multinomial_e(
    T: CoefficientSet,
    key: AverageKey,
    budget: int = DEFAULT_COMPOSITION_BUDGET,
) -> AverageValue:
    """Average via the factorized constrained multinomial sum."""
    key = AverageKey(*key).validate()
    n, s, t, m = key
    if not key.in_support():
        return ZERO
    if pair_count(n, s, t) > budget:
        raise CompositionBudgetError(pair_count(n, s, t), budget)
    ps = power_sums(T)
    d = T.d
    parts = n + 1
    acc = ZERO
    for k in compositions(s, parts):
        c_k = multinomial(s, k)
        target = m + _moment(k)
        for ell in _constrained_compositions(t, parts, target):
            prod = GaussianRational(c_k * multinomial(t, ell))
            nonzero_columns = 0
            for k_a, l_a in zip(k, ell):
                if k_a == 0 and l_a == 0:
                    # an empty column sums to d, cancelling one factor
                    # of the overall 1/d^(n+1) weight
                    continue
                a = ps.get(k_a, l_a)
                if not a:
                    prod = ZERO
                    break
                nonzero_columns += 1
                prod = prod * a
            else:
                acc = acc + prod * mpq(1, d ** nonzero_columns)
    return acc


def littlewood_e(key: AverageKey, budget: int = DEFAULT_COMPOSITION_BUDGET) -> AverageValue:
    """Specialization to the sign set {-1, 1} via per-position sign sums.

    For each position the two sign choices contribute (-1)**(k_a + l_a)
    and +1, so a pair survives only when every column has even total,
    with weight 1; this must agree with multinomial_e on {-1, 1}.
    """
    key = AverageKey(*key).validate()
    n, s, t, m = key
    if not key.in_support():
        return ZERO
    if pair_count(n, s, t) > budget:
        raise CompositionBudgetError(pair_count(n, s, t), budget)
    parts = n + 1
    total = 0
    for k in compositions(s, parts):
        c_k = multinomial(s, k)
        target = m + _moment(k)
        for ell in _constrained_compositions(t, parts, target):
            weight = 1
            for k_a, l_a in zip(k, ell):
                # sum of (-1)**(j*(k_a+l_a)) over the two sign choices j
                weight *= ((-1) ** (k_a + l_a)) + 1
                if not weight:
                    break
            if weight:
                total += c_k * multinomial(t, ell) * weight
    return GaussianRational(mpq(total, 2 ** parts))


def multinomial_e_literal(
    T: CoefficientSet,
    key: AverageKey,
    budget: int = 100_000,
) -> AverageValue:
    """Unfactorized evaluation summing over all index tuples explicitly.

    Exponentially slower than :func:`multinomial_e`; exists only to
    check that the position-factorized restructuring is sound on tiny
    keys.
    """
    import itertools

    key = AverageKey(*key).validate()
    n, s, t, m = key
    parts = n + 1
    work = T.d ** parts * pair_count(n, s, t)
    if work > budget:
        raise CompositionBudgetError(work, budget)
    pairs = []
    for k in compositions(s, parts):
        target = m + _moment(k)
        for ell in _constrained_compositions(t, parts, target):
            pairs.append((k, ell, multinomial(s, k) * multinomial(t, ell)))
    acc = ZERO
    for choice in itertools.product(T.elements, repeat=parts):
        for k, ell, weight in pairs:
            prod = GaussianRational(weight)
            for x, k_a, l_a in zip(choice, k, ell):
                prod = prod * x ** k_a * x.conjugate() ** l_a
            acc = acc + prod
    return acc / T.d ** parts
