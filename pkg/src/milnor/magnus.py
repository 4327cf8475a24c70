"""Truncated non-commutative Magnus expansion, used as an independent oracle.

``x_i -> 1 + X_i`` and ``x_i^-1 -> 1 - X_i + X_i^2 - ...`` in
``Z<X_1..X_q>`` modulo words of length ``>= m``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Mapping

from .words import GroupWord

IndexWord = tuple[int, ...]


class NCSeries:
    """Sparse truncated series ``{word: coeff}`` with words of length ``< truncation``."""

    __slots__ = ("truncation", "coeff")

    def __init__(self, truncation: int, coeff: Mapping[IndexWord, int] | None = None):
        self.truncation = truncation
        self.coeff: dict[IndexWord, int] = {}
        for w, c in (coeff or {}).items():
            w = tuple(w)
            if c and len(w) < truncation:
                self.coeff[w] = self.coeff.get(w, 0) + c
        self.coeff = {w: c for w, c in self.coeff.items() if c}

    @classmethod
    def one(cls, truncation: int) -> "NCSeries":
        return cls(truncation, {(): 1})

    def __getitem__(self, w: IndexWord) -> int:
        return self.coeff.get(tuple(w), 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NCSeries) and (self.truncation, self.coeff) == (other.truncation, other.coeff)

    def __mul__(self, other: "NCSeries") -> "NCSeries":
        return series_mul(self, other)

    def degree_part(self, d: int) -> dict[IndexWord, int]:
        return {w: c for w, c in self.coeff.items() if len(w) == d}

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{''.join(map(str, w)) or '1'}" for w, c in sorted(self.coeff.items()))
        return f"NCSeries(trunc={self.truncation}: {body or '0'})"


def series_mul(a: NCSeries, b: NCSeries) -> NCSeries:
    if a.truncation != b.truncation:
        raise ValueError(f"truncation mismatch: {a.truncation} vs {b.truncation}")
    m = a.truncation
    out: dict[IndexWord, int] = {}
    for u, cu in a.coeff.items():
        room = m - len(u)
        for v, cv in b.coeff.items():
            if len(v) < room:
                w = u + v
                out[w] = out.get(w, 0) + cu * cv
    return NCSeries(m, out)


def letter_series(a: int, m: int) -> NCSeries:
    k = abs(a)
    if a > 0:
        return NCSeries(m, {(): 1, (k,): 1})
    return NCSeries(m, {(k,) * r: (-1) ** r for r in range(m)})


def magnus_expand(w: GroupWord, m: int) -> NCSeries:
    out = NCSeries.one(m)
    for a in w.letters:
        out = series_mul(out, letter_series(a, m))
    return out


def infiltration(u: IndexWord, v: IndexWord) -> Counter:
    """Infiltration shuffle ``Sh(u, v)`` as a multiset of words.

    Counts every pair of increasing position maps that jointly cover the
    result, with coincident positions allowed only where the letters agree.
    """
    return Counter(dict(_infiltration(tuple(u), tuple(v))))


@lru_cache(maxsize=None)
def _infiltration(u: IndexWord, v: IndexWord) -> tuple[tuple[IndexWord, int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: Counter = Counter()
    a, b = u[-1], v[-1]
    for w, c in _infiltration(u[:-1], v):
        acc[w + (a,)] += c
    for w, c in _infiltration(u, v[:-1]):
        acc[w + (b,)] += c
    if a == b:
        for w, c in _infiltration(u[:-1], v[:-1]):
            acc[w + (a,)] += c
    return tuple(acc.items())


def check_shuffle_relations(series: NCSeries) -> tuple[IndexWord, IndexWord] | None:
    """First pair ``(J, K)`` violating ``a_J a_K = sum_Sh a_L``, or ``None``."""
    import itertools

    letters = sorted({a for w in series.coeff for a in w}) or [1]
    m = series.truncation
    for lj in range(1, m - 1):
        for lk in range(lj, m - lj):
            for jw in itertools.product(letters, repeat=lj):
                for kw in itertools.product(letters, repeat=lk):
                    rhs = sum(c * series[w] for w, c in infiltration(jw, kw).items())
                    if series[jw] * series[kw] != rhs:
                        return jw, kw
    return None
