"""Free-group words, commutators and Fox free differential calculus.

A word is stored as a flat tuple of nonzero integers: ``j`` stands for the
generator ``x_j`` and ``-j`` for its inverse.  Index words (multi-indices of
higher Fox derivatives) are plain tuples of positive integers.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

IndexWord = tuple[int, ...]


class GroupWord:
    """A freely reduced word in the generators ``x_1 .. x_q``."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = (), q: int | None = None):
        self.letters: tuple[int, ...] = _reduce_letters(letters, q)

    @classmethod
    def generator(cls, j: int, sign: int = 1) -> "GroupWord":
        if j < 1:
            raise ValueError(f"generator index must be positive, got {j}")
        return cls((j * (1 if sign > 0 else -1),))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def __pow__(self, n: int) -> "GroupWord":
        base = self if n >= 0 else self.inverse()
        return GroupWord(base.letters * abs(n))

    def inverse(self) -> "GroupWord":
        return GroupWord(-a for a in reversed(self.letters))

    def rank(self) -> int:
        """Largest generator index occurring in the word (0 for the empty word)."""
        return max((abs(a) for a in self.letters), default=0)

    def __repr__(self) -> str:
        return f"GroupWord({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


def _reduce_letters(letters: Iterable[int], q: int | None = None) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        a = int(a)
        if a == 0 or (q is not None and abs(a) > q):
            raise ValueError(f"generator index {a} out of range")
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def reduce(letters: Iterable[int] | Iterable[tuple[int, int]], q: int | None = None) -> GroupWord:
    """Freely reduce a raw letter sequence.

    Letters may be signed integers or ``(index, sign)`` pairs.
    """
    flat = []
    for a in letters:
        if isinstance(a, tuple):
            j, s = a
            if j < 1:
                raise ValueError(f"generator index {j} out of range")
            flat.append(j if s > 0 else -j)
        else:
            flat.append(a)
    return GroupWord(flat, q)


def format_word(w: GroupWord) -> str:
    if not w.letters:
        return "1"
    return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in w.letters)


def parse_word(text: str) -> GroupWord:
    """Parse ``"x1 x2^-1 x1"`` (or signed integers ``"1 -2 1"``).

    A lone ``"1"`` is the empty word, as printed by :func:`format_word`.
    """
    toks = text.replace("*", " ").split()
    if toks == ["1"]:
        return GroupWord()
    out = []
    for tok in toks:
        sign = 1
        if tok.endswith("^-1"):
            sign, tok = -1, tok[:-3]
        tok = tok.lstrip("x")
        out.append(sign * int(tok))
    return GroupWord(out)


def commutator(g: GroupWord, h: GroupWord) -> GroupWord:
    """``[g, h] = g h g^-1 h^-1``."""
    return GroupWord(g.letters + h.letters + g.inverse().letters + h.inverse().letters)


def left_collecting_word(indices: Sequence[int]) -> GroupWord:
    """Left-normed commutator ``[[..[x_{j1}, x_{j2}], ..], x_{jn}]``."""
    if len(indices) < 2:
        raise ValueError("left-collecting commutator needs at least two indices")
    w = GroupWord.generator(indices[0])
    for j in indices[1:]:
        w = commutator(w, GroupWord.generator(j))
    return w


def substitute(w: GroupWord, images: Mapping[int, GroupWord]) -> GroupWord:
    """Apply the homomorphism ``x_j -> images[j]``."""
    out: list[int] = []
    for a in w.letters:
        try:
            img = images[abs(a)]
        except KeyError:
            raise KeyError(f"no image given for generator x{abs(a)}") from None
        out.extend(img.letters if a > 0 else img.inverse().letters)
    return GroupWord(out)


def fox_coefficient(y: GroupWord, index: Sequence[int]) -> int:
    """The integer ``eps(D_{i1..in}(y))``.

    Walks the word once, carrying the augmentations of the derivatives of
    every prefix of ``y`` with respect to every prefix of ``index``.  Each
    letter contributes through ``eps(D_{k^r}(x_k)) = [r <= 1]`` and
    ``eps(D_{k^r}(x_k^-1)) = (-1)^r``.
    """
    return _fox_cached(y.letters, tuple(index))


@lru_cache(maxsize=65536)
def _fox_cached(letters: tuple[int, ...], index: IndexWord) -> int:
    n = len(index)
    coeffs = [1] + [0] * n  # coeffs[t] = eps(D_{index[:t]}(prefix))
    for a in letters:
        k = abs(a)
        new = coeffs[:]
        for t in range(1, n + 1):
            acc = 0
            s = t - 1
            r = 1
            while s >= 0 and index[s] == k:
                if a > 0:
                    if r == 1:
                        acc += coeffs[s]
                else:
                    acc += coeffs[s] if r % 2 == 0 else -coeffs[s]
                s -= 1
                r += 1
            new[t] = coeffs[t] + acc
        coeffs = new
    return coeffs[n]


def milnor_link_longitude(m: int, k: int) -> GroupWord:
    """Closed-form longitude of the ``k``-th component of the Milnor link of ``m`` components.

    For ``1 < k < m - 1`` this is ``[L, R^-1]^-1`` where ``L`` is the
    left-normed commutator of ``x_1 .. x_{k-1}`` and
    ``R = [[..[x_m, x_{m-1}^-1], ..], x_{k+1}^-1]``.  The end cases are
    ``[[..[x_1, x_2], ..], x_{m-2}], x_m]`` for ``k = m - 1`` and the
    left-normed commutator of ``x_1 .. x_{m-1}`` for ``k = m``.  For ``k = 1``
    the left factor is empty and the longitude is ``R`` itself.
    """
    if m < 3:
        raise ValueError("Milnor links need m >= 3 components")
    if not 1 <= k <= m:
        raise ValueError(f"component index {k} out of range 1..{m}")
    if k == m:
        return left_collecting_word(range(1, m))
    if k == m - 1:
        return left_collecting_word(list(range(1, m - 1)) + [m])
    right = GroupWord.generator(m)
    for t in range(m - 1, k, -1):
        right = commutator(right, GroupWord.generator(t, -1))
    if k == 1:
        return right
    left = GroupWord.generator(1) if k == 2 else left_collecting_word(range(1, k))
    return commutator(left, right.inverse()).inverse()
