"""Level-graded multilinear integer polynomials.

An :class:`IntervalTensor` with start level ``s`` and degree ``d`` encodes

    sum_w coeff(w) * lambda_s^(w_1) lambda_{s+1}^(w_2) ... lambda_{s+d-1}^(w_d)

over index words ``w`` in ``{1..q}^d``.  Every entry of a unitriangular
matrix in the image of the unipotent Magnus embedding has this shape, so
polynomial arithmetic collapses to arithmetic on word-indexed tensors.

Coefficients are Python integers held in numpy ``object`` arrays of shape
``(q,) * d``; nothing overflows.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

IndexWord = tuple[int, ...]


def zeros(q: int, degree: int) -> np.ndarray:
    arr = np.empty((q,) * degree, dtype=object)
    arr.fill(0)
    return arr


def unit_vector(q: int, j: int) -> np.ndarray:
    arr = zeros(q, 1)
    arr[j - 1] = 1
    return arr


class IntervalTensor:
    """Dense integer tensor attached to a run of consecutive levels."""

    __slots__ = ("q", "start", "arr")

    def __init__(self, q: int, start: int, arr: np.ndarray):
        if start < 1:
            raise ValueError(f"start level must be >= 1, got {start}")
        if arr.shape != (q,) * arr.ndim:
            raise ValueError(f"array shape {arr.shape} does not match rank {q}")
        self.q = q
        self.start = start
        self.arr = arr

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, q: int, degree: int, start: int = 1) -> "IntervalTensor":
        return cls(q, start, zeros(q, degree))

    @classmethod
    def unit(cls, q: int, start: int = 1) -> "IntervalTensor":
        return cls(q, start, np.array(1, dtype=object))

    @classmethod
    def generator(cls, q: int, j: int, start: int = 1) -> "IntervalTensor":
        """``lambda_start^(j)``."""
        if not 1 <= j <= q:
            raise ValueError(f"generator index {j} out of range 1..{q}")
        return cls(q, start, unit_vector(q, j))

    @classmethod
    def from_dict(
        cls, q: int, coeffs: Mapping[Sequence[int] | str, int], degree: int | None = None, start: int = 1
    ) -> "IntervalTensor":
        """Build from ``{word: coeff}``; words may be tuples or digit strings like ``"1122"``."""
        items = [(_as_word(w), int(c)) for w, c in coeffs.items()]
        if degree is None:
            if not items:
                raise ValueError("degree is required for an empty coefficient map")
            degree = len(items[0][0])
        arr = zeros(q, degree)
        for w, c in items:
            if len(w) != degree:
                raise ValueError(f"word {w} has length {len(w)}, expected {degree}")
            if any(not 1 <= a <= q for a in w):
                raise ValueError(f"word {w} uses letters outside 1..{q}")
            arr[tuple(a - 1 for a in w)] += c
        return cls(q, start, arr)

    # basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        return self.arr.ndim

    def is_zero(self) -> bool:
        return not any(self.arr.flat) if self.arr.ndim else self.arr.item() == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def coeff(self, word: Sequence[int] | str) -> int:
        w = _as_word(word)
        if len(w) != self.degree:
            raise ValueError(f"word length {len(w)} != degree {self.degree}")
        return int(self.arr[tuple(a - 1 for a in w)])

    def items(self) -> Iterator[tuple[IndexWord, int]]:
        """Nonzero ``(word, coeff)`` pairs in lexicographic word order."""
        if self.degree == 0:
            v = self.arr.item()
            if v:
                yield (), int(v)
            return
        for idx in itertools.product(range(self.q), repeat=self.degree):
            v = self.arr[idx]
            if v:
                yield tuple(i + 1 for i in idx), int(v)

    def to_dict(self) -> dict[IndexWord, int]:
        return dict(self.items())

    def copy(self) -> "IntervalTensor":
        return IntervalTensor(self.q, self.start, self.arr.copy())

    def vector(self) -> list[int]:
        """Coefficients flattened in lexicographic word order."""
        return [int(v) for v in self.arr.flat] if self.degree else [int(self.arr.item())]

    @classmethod
    def from_vector(cls, q: int, degree: int, vec: Sequence[int], start: int = 1) -> "IntervalTensor":
        arr = zeros(q, degree)
        if degree:
            arr.flat[:] = [int(v) for v in vec]
        else:
            arr = np.array(int(vec[0]), dtype=object)
        return cls(q, start, arr)

    # arithmetic -------------------------------------------------------
    def _check_grade(self, other: "IntervalTensor") -> None:
        if (self.q, self.start, self.degree) != (other.q, other.start, other.degree):
            raise ValueError(
                f"grade mismatch: (q={self.q}, level={self.start}, degree={self.degree}) vs "
                f"(q={other.q}, level={other.start}, degree={other.degree})"
            )

    def __add__(self, other: "IntervalTensor") -> "IntervalTensor":
        self._check_grade(other)
        return IntervalTensor(self.q, self.start, self.arr + other.arr)

    def __sub__(self, other: "IntervalTensor") -> "IntervalTensor":
        self._check_grade(other)
        return IntervalTensor(self.q, self.start, self.arr - other.arr)

    def __neg__(self) -> "IntervalTensor":
        return IntervalTensor(self.q, self.start, -self.arr)

    def __mul__(self, k: int) -> "IntervalTensor":
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return IntervalTensor(self.q, self.start, self.arr * int(k))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalTensor):
            return NotImplemented
        return (
            self.q == other.q
            and self.start == other.start
            and self.degree == other.degree
            and bool(np.all(self.arr == other.arr))
        )

    __hash__ = None  # type: ignore[assignment]

    def concat_mul(self, other: "IntervalTensor") -> "IntervalTensor":
        """Product of tensors living on adjacent level intervals."""
        if self.q != other.q:
            raise ValueError("rank mismatch")
        if other.start != self.start + self.degree:
            raise ValueError(
                f"intervals not adjacent: [{self.start}, {self.start + self.degree}) "
                f"then level {other.start}"
            )
        return IntervalTensor(self.q, self.start, np.multiply.outer(self.arr, other.arr))

    def shift(self, r: int) -> "IntervalTensor":
        """Relabel ``lambda_i -> lambda_{i+r}``."""
        if self.start + r < 1:
            raise ValueError(f"shift by {r} moves level {self.start} below 1")
        return IntervalTensor(self.q, self.start + r, self.arr)

    def at_level(self, start: int) -> "IntervalTensor":
        return IntervalTensor(self.q, start, self.arr)

    # rendering --------------------------------------------------------
    def __repr__(self) -> str:
        return f"IntervalTensor(q={self.q}, start={self.start}, {format_pairs(self)})"

    def __str__(self) -> str:
        return format_monomials(self)


def _as_word(word: Sequence[int] | str) -> IndexWord:
    if isinstance(word, str):
        return tuple(int(c) for c in word)
    return tuple(int(a) for a in word)


def central(q: int, arr: np.ndarray) -> IntervalTensor:
    """Wrap an array as a level-1 (central) tensor."""
    return IntervalTensor(q, 1, arr)


def bracket(a: IntervalTensor, b: IntervalTensor) -> IntervalTensor:
    """Graded bracket ``a * shift(b, deg a) - b * shift(a, deg b)`` of level-1 tensors."""
    if a.q != b.q:
        raise ValueError("rank mismatch")
    return IntervalTensor(a.q, 1, bracket_arrays(a.arr, b.arr))


def bracket_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.multiply.outer(a, b) - np.multiply.outer(b, a)


def left_collecting_bracket(q: int, indices: Sequence[int]) -> IntervalTensor:
    """``[[..[lambda_1^(j1), lambda_2^(j2)], ..], lambda_n^(jn)]``."""
    if len(indices) < 2:
        raise ValueError("left-collecting bracket needs at least two indices")
    t = IntervalTensor.generator(q, indices[0])
    for j in indices[1:]:
        t = bracket(t, IntervalTensor.generator(q, j))
    return t


def left_collecting_signed_sum(q: int, indices: Sequence[int]) -> IntervalTensor:
    """The same bracket written as the signed sum over ``(S_2)^(n-1)``.

    Each ``sigma_i`` either appends ``j_{i+1}`` on the right of the word built
    so far (sign +1) or prepends it on the left (sign -1).
    """
    n = len(indices)
    if n < 2:
        raise ValueError("left-collecting bracket needs at least two indices")
    arr = zeros(q, n)
    for choice in itertools.product((0, 1), repeat=n - 1):
        word = [indices[0]]
        sign = 1
        for c, j in zip(choice, indices[1:]):
            if c:
                word.insert(0, j)
                sign = -sign
            else:
                word.append(j)
        arr[tuple(a - 1 for a in word)] += sign
    return IntervalTensor(q, 1, arr)


def format_pairs(t: IntervalTensor) -> str:
    """``{1122: -1, 1212: +2}`` style listing."""
    body = ", ".join(f"{''.join(map(str, w)) or 'e'}: {c:+d}" for w, c in t.items())
    return "{" + body + "}"


def format_monomials(t: IntervalTensor) -> str:
    """Monomial-sum rendering ``l1^(1) l2^(2) - l1^(2) l2^(1)`` in level order."""
    terms = []
    for w, c in t.items():
        mono = " ".join(f"l{t.start + i}^({a})" for i, a in enumerate(w)) or "1"
        if c == 1:
            terms.append(("+", mono))
        elif c == -1:
            terms.append(("-", mono))
        else:
            terms.append(("+" if c > 0 else "-", f"{abs(c)} {mono}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for s, m in terms[1:]:
        out += f" {s} {m}"
    return out


def stack_vectors(tensors: Iterable[IntervalTensor]) -> list[list[int]]:
    return [t.vector() for t in tensors]
