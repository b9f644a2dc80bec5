"""Polynomial-time computation of ensemble averages by exact recursion.

Splitting off the constant coefficient of a degree-n polynomial and
expanding binomially reduces the (n, s, t, m) average to averages at
degree n-1, with weights that depend on the coefficient set only through
its power sums.  Tables are filled bottom-up, one degree layer at a
time, so a single fill serves every query within its bounds.
"""

from __future__ import annotations

import json
from typing import Dict, List, Tuple

from gmpy2 import mpq

from .ensemble import AverageKey, AverageValue, CoefficientSet, parse_coefficient_set
from .exactnum import ZERO, GaussianRational, binomial, format_rational

DUMP_FORMAT = "polyavg-table"
DUMP_VERSION = 1

_Layer = Dict[Tuple[int, int], Dict[int, GaussianRational]]


class TableBoundsError(LookupError):
    """Raised for queries outside a table's filled bounds."""

    def __init__(self, key, bounds):
        super().__init__(
            f"key {tuple(key)} outside table bounds n<={bounds[0]}, "
            f"s<={bounds[1]}, t<={bounds[2]}; grow the table and retry"
        )


class RecursionTable:
    """Memoized averages e(n, s, t, m) for one coefficient set.

    The base layer holds e(0, s, t, m) = [m == 0] * A(s, t) / d where
    A(s, t) is the power sum over the set; each later layer is a linear
    image of the previous one.  Completed tables are read-only.
    """

    def __init__(self, coefficient_set: CoefficientSet, n_max: int, s_max: int, t_max: int):
        if n_max < 0 or s_max < 0 or t_max < 0:
            raise ValueError("table bounds must be non-negative")
        self.set = coefficient_set
        self.bounds = (n_max, s_max, t_max)
        self.fill_ops = 0
        self._power_sums: Dict[Tuple[int, int], GaussianRational] = {}
        self._layers: List[_Layer] = []
        self._fill()

    # -- construction ----------------------------------------------------------

    def _A(self, s: int, t: int) -> GaussianRational:
        cached = self._power_sums.get((s, t))
        if cached is None:
            cached = self.set.power_sum(s, t)
            self._power_sums[(s, t)] = cached
        return cached

    def _fill(self) -> None:
        n_max, s_max, t_max = self.bounds
        d = self.set.d
        inv_d = mpq(1, d)

        base: _Layer = {}
        for s in range(s_max + 1):
            for t in range(t_max + 1):
                a = self._A(s, t)
                base[(s, t)] = {0: a * inv_d} if a else {}
        self._layers.append(base)

        # per-(s,t) transition weights; entries with a vanishing power sum
        # are dropped up front, which prunes most of the work for sign-
        # symmetric sets
        weights: Dict[Tuple[int, int], List[Tuple[int, int, int, GaussianRational]]] = {}
        for s in range(s_max + 1):
            for t in range(t_max + 1):
                rows = []
                for k in range(s + 1):
                    c_s = binomial(s, k)
                    for ell in range(t + 1):
                        a = self._A(s - k, t - ell)
                        if not a:
                            continue
                        w = a * (c_s * binomial(t, ell)) * inv_d
                        rows.append((k, ell, ell - k, w))
                weights[(s, t)] = rows

        ops = 0
        for _ in range(n_max):
            prev = self._layers[-1]
            layer: _Layer = {}
            for st, rows in weights.items():
                acc: Dict[int, GaussianRational] = {}
                get = acc.get
                for k, ell, shift, w in rows:
                    src = prev[(k, ell)]
                    ops += len(src)
                    for m, v in src.items():
                        nm = m + shift
                        cur = get(nm)
                        acc[nm] = w * v if cur is None else cur + w * v
                layer[st] = {m: v for m, v in acc.items() if v}
            self._layers.append(layer)
        self.fill_ops = ops

    # -- queries -----------------------------------------------------------------

    def e(self, n: int, s: int, t: int, m: int = 0) -> AverageValue:
        key = AverageKey(n, s, t, m).validate()
        n_max, s_max, t_max = self.bounds
        if n > n_max or s > s_max or t > t_max:
            raise TableBoundsError(key, self.bounds)
        if not key.in_support():
            return ZERO
        return self._layers[n][(s, t)].get(m, ZERO)

    def dp_e(self, key: AverageKey) -> AverageValue:
        key = AverageKey(*key)
        return self.e(key.n, key.s, key.t, key.m)

    def mu(self, n: int, alpha: int) -> AverageValue:
        """Average 2*alpha-power norm at degree index n."""
        if alpha == 0:
            return GaussianRational(1)
        return self.e(n, alpha, alpha, 0)

    def mu_sequence(self, alpha: int, n_max: int) -> List[AverageValue]:
        return [self.mu(n, alpha) for n in range(n_max + 1)]

    def weighted_mu(self, alpha: int, n: int, m: int) -> AverageValue:
        """Average 2*alpha-power norm with monomial weight z**m."""
        if alpha == 0:
            return GaussianRational(1 if m == 0 else 0)
        return self.e(n, alpha, alpha, m)

    # -- persistence --------------------------------------------------------------

    def dump(self, path) -> None:
        entries = []
        for n, layer in enumerate(self._layers):
            for (s, t), values in sorted(layer.items()):
                for m in sorted(values):
                    v = values[m]
                    entries.append(
                        [n, s, t, m, format_rational(v.re), format_rational(v.im)]
                    )
        doc = {
            "format": DUMP_FORMAT,
            "version": DUMP_VERSION,
            "set": self.set.literal(),
            "n_max": self.bounds[0],
            "s_max": self.bounds[1],
            "t_max": self.bounds[2],
            "entries": entries,
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, separators=(",", ":"))
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "RecursionTable":
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("format") != DUMP_FORMAT or doc.get("version") != DUMP_VERSION:
            raise ValueError(f"unrecognized table dump format in {path}")
        table = object.__new__(cls)
        table.set = parse_coefficient_set(doc["set"])
        table.bounds = (doc["n_max"], doc["s_max"], doc["t_max"])
        table.fill_ops = 0
        table._power_sums = {}
        n_max, s_max, t_max = table.bounds
        layers: List[_Layer] = [
            {(s, t): {} for s in range(s_max + 1) for t in range(t_max + 1)}
            for _ in range(n_max + 1)
        ]
        for n, s, t, m, re_s, im_s in doc["entries"]:
            layers[n][(s, t)][m] = GaussianRational(mpq(re_s), mpq(im_s))
        table._layers = layers
        return table


_TABLE_CACHE: Dict[Tuple, RecursionTable] = {}


def get_table(T: CoefficientSet, n_max: int, s_max: int, t_max: int) -> RecursionTable:
    """Shared per-set table, grown monotonically as larger bounds are requested."""
    key = T.elements
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        cn, cs, ct = cached.bounds
        if cn >= n_max and cs >= s_max and ct >= t_max:
            return cached
        n_max, s_max, t_max = max(cn, n_max), max(cs, s_max), max(ct, t_max)
    table = RecursionTable(T, n_max, s_max, t_max)
    _TABLE_CACHE[key] = table
    return table


def dp_e(T: CoefficientSet, key: AverageKey) -> AverageValue:
    """Average for one key via a shared recursion table."""
    key = AverageKey(*key).validate()
    table = get_table(T, key.n, key.s, key.t)
    return table.dp_e(key)


def mu_sequence(T: CoefficientSet, alpha: int, n_max: int) -> List[AverageValue]:
    if alpha == 0:
        return [GaussianRational(1)] * (n_max + 1)
    return get_table(T, n_max, alpha, alpha).mu_sequence(alpha, n_max)
