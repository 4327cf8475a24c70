"""Lyndon-word bases of the free Lie ring and integer decomposition of central tensors."""

from __future__ import annotations

import itertools
import threading
from functools import lru_cache
from typing import Mapping, Sequence

from .tensors import IntervalTensor, bracket, left_collecting_bracket

IndexWord = tuple[int, ...]


def is_lyndon(word: Sequence[int]) -> bool:
    w = tuple(word)
    if not w:
        return False
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lyndon_words(q: int, n: int) -> list[IndexWord]:
    """Lyndon words of length exactly ``n`` over ``1..q``, lexicographic (Duval's algorithm)."""
    if q < 1 or n < 1:
        return []
    out = []
    w = [0]
    while w:
        if len(w) == n:
            out.append(tuple(a + 1 for a in w))
        # extend periodically to length n, then bump the last letter
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == q - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def necklace_count(q: int, n: int) -> int:
    """Number of Lyndon words of length ``n``: ``(1/n) sum_{d|n} mu(d) q^(n/d)``."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mobius(d) * q ** (n // d)
    return total // n


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def standard_factorization(word: Sequence[int]) -> tuple[IndexWord, IndexWord]:
    """``w = u v`` with ``v`` the longest proper Lyndon suffix."""
    w = tuple(word)
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} has no proper factorization")


def standard_bracketing(word: Sequence[int], q: int | None = None) -> IntervalTensor:
    w = tuple(word)
    if not is_lyndon(w):
        raise ValueError(f"{w} is not a Lyndon word")
    if q is None:
        q = max(w)
    return _bracketing(w, q)


@lru_cache(maxsize=4096)
def _bracketing(w: IndexWord, q: int) -> IntervalTensor:
    if len(w) == 1:
        return IntervalTensor.generator(q, w[0])
    u, v = standard_factorization(w)
    return bracket(_bracketing(u, q), _bracketing(v, q))


_basis_lock = threading.Lock()
_basis_cache: dict[tuple[int, int], list[tuple[IndexWord, IntervalTensor]]] = {}


def lyndon_basis(q: int, n: int) -> list[tuple[IndexWord, IntervalTensor]]:
    """``[(word, standard bracketing)]`` for all Lyndon words of length ``n``."""
    key = (q, n)
    with _basis_lock:
        if key not in _basis_cache:
            _basis_cache[key] = [(w, _bracketing(w, q)) for w in lyndon_words(q, n)]
        return _basis_cache[key]


def decompose(t: IntervalTensor) -> tuple[dict[IndexWord, int], IntervalTensor]:
    """Write ``t = sum c_w P_w + remainder`` over Lyndon bracketings ``P_w``.

    ``P_w`` has coefficient 1 at ``w`` and is otherwise supported on
    lexicographically larger words, so peeling off the smallest word of the
    support is exact integer elimination.  The loop stops at the first
    smallest word that is not Lyndon; the remainder is then nonzero exactly
    when ``t`` is outside the integer span of the basis.
    """
    q, d = t.q, t.degree
    rest = t.at_level(1).copy()
    coeffs: dict[IndexWord, int] = {}
    if d == 0:
        return coeffs, rest
    while True:
        first = next(rest.items(), None)
        if first is None:
            break
        w, c = first
        if not is_lyndon(w):
            break
        coeffs[w] = coeffs.get(w, 0) + c
        rest = rest - c * _bracketing(w, q)
    return coeffs, rest


def recompose(q: int, coeffs: Mapping[IndexWord, int], degree: int) -> IntervalTensor:
    out = IntervalTensor.zero(q, degree)
    for w, c in coeffs.items():
        out = out + c * _bracketing(tuple(w), q)
    return out


def is_lie(t: IntervalTensor) -> bool:
    return decompose(t)[1].is_zero()


def match_left_collecting(t: IntervalTensor) -> tuple[int, IndexWord] | None:
    """``(c, J)`` with ``t = c * [[..[l^(j1), l^(j2)]..], l^(jn)]`` if a single bracket fits."""
    if t.is_zero() or t.degree < 2:
        return None
    q, d = t.q, t.degree
    first_word, first_coeff = next(t.items())
    for J in itertools.product(range(1, q + 1), repeat=d):
        if J[0] == J[1]:
            continue
        b = left_collecting_bracket(q, J)
        bc = b.coeff(first_word)
        if bc == 0 or first_coeff % bc:
            continue
        c = first_coeff // bc
        if b * c == t.at_level(1):
            return c, J
    return None


def format_lyndon(coeffs: Mapping[IndexWord, int]) -> str:
    """``2*P(1122) - P(1212)`` style rendering of a Lyndon decomposition."""
    if not coeffs:
        return "0"
    parts = []
    for w, c in sorted(coeffs.items()):
        if not c:
            continue
        label = f"P({''.join(map(str, w))})"
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        parts.append(("-" if c < 0 else "+", mag + label))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, p in parts[1:]:
        out += f" {s} {p}"
    return out
