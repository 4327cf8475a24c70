"""Unitriangular matrices over interval tensors and the unipotent Magnus embedding.

Only the strictly upper triangular part is stored.  Entry ``(i, j)``
(1-based) is a tensor of degree ``j - i`` starting at level ``i``; the start
level is implied by the position, so the matrix keeps bare coefficient arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .tensors import IntervalTensor, format_monomials, unit_vector, zeros
from .words import GroupWord


class NotCentralError(ValueError):
    """Raised when a matrix expected to be central has a stray entry."""

    def __init__(self, i: int, j: int, entry: IntervalTensor):
        super().__init__(f"matrix is not central: entry ({i},{j}) = {format_monomials(entry)}")
        self.position = (i, j)
        self.entry = entry


class UniMatrix:
    """Upper unitriangular ``n x n`` matrix with interval-tensor entries."""

    __slots__ = ("q", "n", "e")

    def __init__(self, q: int, n: int, entries: list[list[np.ndarray | None]] | None = None):
        if n < 1:
            raise ValueError("matrix size must be >= 1")
        self.q = q
        self.n = n
        if entries is None:
            entries = [[zeros(q, j - i) if j > i else None for j in range(n)] for i in range(n)]
        self.e = entries

    # access -----------------------------------------------------------
    def entry(self, i: int, j: int) -> IntervalTensor:
        """1-based entry ``(i, j)`` with ``i < j``."""
        if not 1 <= i < j <= self.n:
            raise IndexError(f"entry ({i},{j}) is not strictly upper triangular in size {self.n}")
        return IntervalTensor(self.q, i, self.e[i - 1][j - 1])

    def set_entry(self, i: int, j: int, value: IntervalTensor) -> None:
        if not 1 <= i < j <= self.n:
            raise IndexError(f"entry ({i},{j}) is not strictly upper triangular in size {self.n}")
        if value.degree != j - i or value.q != self.q:
            raise ValueError(f"entry ({i},{j}) needs degree {j - i}, got {value.degree}")
        self.e[i - 1][j - 1] = value.arr.copy()

    def top_right(self) -> IntervalTensor:
        if self.n == 1:
            return IntervalTensor.unit(self.q)
        return self.entry(1, self.n)

    def off_diagonal(self) -> Iterator[tuple[int, int, np.ndarray]]:
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i, j, self.e[i][j]

    def copy(self) -> "UniMatrix":
        return UniMatrix(
            self.q, self.n, [[a.copy() if a is not None else None for a in row] for row in self.e]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniMatrix):
            return NotImplemented
        if (self.q, self.n) != (other.q, other.n):
            return False
        return all(np.array_equal(a, other.e[i][j]) for i, j, a in self.off_diagonal())

    __hash__ = None  # type: ignore[assignment]

    def is_identity(self) -> bool:
        return all(not any(a.flat) for _, _, a in self.off_diagonal())

    # group operations -------------------------------------------------
    def __matmul__(self, other: "UniMatrix") -> "UniMatrix":
        return mul(self, other)

    def inverse(self) -> "UniMatrix":
        return inv(self)

    def __repr__(self) -> str:
        return f"UniMatrix(q={self.q}, n={self.n})"

    def __str__(self) -> str:
        return pretty(self)


def identity(n: int, q: int) -> UniMatrix:
    return UniMatrix(q, n)


def generator_matrix(j: int, n: int, q: int) -> UniMatrix:
    """Image of ``x_j``: ``lambda_i^(j)`` on the superdiagonal."""
    if not 1 <= j <= q:
        raise ValueError(f"generator index {j} out of range 1..{q}")
    m = UniMatrix(q, n)
    for i in range(n - 1):
        m.e[i][i + 1] = unit_vector(q, j)
    return m


def _check_sizes(a: UniMatrix, b: UniMatrix) -> None:
    if (a.q, a.n) != (b.q, b.n):
        raise ValueError(f"size mismatch: {a.n}x{a.n} (q={a.q}) vs {b.n}x{b.n} (q={b.q})")


def mul(a: UniMatrix, b: UniMatrix) -> UniMatrix:
    _check_sizes(a, b)
    n = a.n
    ae, be = a.e, b.e
    out: list[list[np.ndarray | None]] = [[None] * n for _ in range(n)]
    outer = np.multiply.outer
    for i in range(n):
        for j in range(i + 1, n):
            acc = ae[i][j] + be[i][j]
            for k in range(i + 1, j):
                acc += outer(ae[i][k], be[k][j])
            out[i][j] = acc
    return UniMatrix(a.q, n, out)


def inv(a: UniMatrix) -> UniMatrix:
    """Inverse by back substitution on ``A X = I``; unit diagonal means no division."""
    n = a.n
    ae = a.e
    x: list[list[np.ndarray | None]] = [[None] * n for _ in range(n)]
    outer = np.multiply.outer
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            acc = -ae[i][j]
            for k in range(i + 1, j):
                acc -= outer(ae[i][k], x[k][j])
            x[i][j] = acc
    return UniMatrix(a.q, n, x)


def _right_mul_generator(m: UniMatrix, j: int, sign: int) -> None:
    """In place ``m <- m * Y(x_j)^sign``."""
    n = m.n
    e = m.e
    jj = j - 1
    for i in range(n):
        if sign > 0:
            # (m G)[i][l] = m[i][l] + m[i][l-1] (x) e_j, old values, so sweep l downwards
            for l in range(n - 1, i, -1):
                if l - 1 == i:
                    e[i][l][jj] += 1
                else:
                    e[i][l][..., jj] += e[i][l - 1]
        else:
            # m' G = m, i.e. m'[i][l] = m[i][l] - m'[i][l-1] (x) e_j, new values, sweep upwards
            for l in range(i + 1, n):
                if l - 1 == i:
                    e[i][l][jj] -= 1
                else:
                    e[i][l][..., jj] -= e[i][l - 1]


def represent_word(w: GroupWord, n: int, q: int | None = None) -> UniMatrix:
    """Image of a word under the unipotent Magnus embedding of size ``n``."""
    if q is None:
        q = max(w.rank(), 1)
    if w.rank() > q:
        raise ValueError(f"word uses generator x{w.rank()} but rank is {q}")
    m = UniMatrix(q, n)
    for a in w.letters:
        _right_mul_generator(m, abs(a), 1 if a > 0 else -1)
    return m


def project(a: UniMatrix) -> UniMatrix:
    """Top-left ``(n-1) x (n-1)`` corner."""
    if a.n < 2:
        raise ValueError("cannot project a 1x1 matrix")
    n = a.n - 1
    return UniMatrix(a.q, n, [[a.e[i][j].copy() if j > i else None for j in range(n)] for i in range(n)])


def section_lift(a: UniMatrix) -> UniMatrix:
    """Zero-padded lift to size ``n+1``.

    The new last column copies the diagonal pattern, ``(i, n+1) = shift((i-1, n))``
    for ``i >= 2``, and the new top-right entry is zero.
    """
    n = a.n
    out: list[list[np.ndarray | None]] = [[None] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(i + 1, n):
            out[i][j] = a.e[i][j].copy()
    if n >= 1:
        out[0][n] = zeros(a.q, n)
        for i in range(1, n):
            out[i][n] = a.e[i - 1][n - 1].copy()
    return UniMatrix(a.q, n + 1, out)


def central_part(a: UniMatrix) -> IntervalTensor:
    """Return the top-right tensor if ``a = I + w E_{1,n}``, else raise :class:`NotCentralError`."""
    for i, j, arr in a.off_diagonal():
        if (i, j) != (0, a.n - 1) and any(arr.flat):
            raise NotCentralError(i + 1, j + 1, IntervalTensor(a.q, i + 1, arr))
    return a.top_right()


def is_central(a: UniMatrix) -> bool:
    try:
        central_part(a)
    except NotCentralError:
        return False
    return True


def conjugate(a: UniMatrix, b: UniMatrix, eps: int) -> UniMatrix:
    """``B^-eps A B^eps``."""
    _check_sizes(a, b)
    bi = inv(b)
    if eps > 0:
        return mul(mul(bi, a), b)
    return mul(mul(b, a), bi)


def with_top_right(a: UniMatrix, value: IntervalTensor) -> UniMatrix:
    out = a.copy()
    out.set_entry(1, a.n, value.at_level(1))
    return out


@dataclass
class ImageCheck:
    ok: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    lhs: int = 0
    rhs: int = 0


def magnus_image_check(a: UniMatrix) -> ImageCheck:
    """Test the infiltration-shuffle conditions on the first row of ``a``.

    ``a_I`` is read from entry ``(1, 1+|I|)``; every pair ``J, K`` of nonempty
    words with ``|J| + |K| <= n - 1`` must satisfy ``a_J a_K = sum_{L in Sh(J,K)} a_L``.
    """
    import itertools

    from .magnus import infiltration

    q, n = a.q, a.n

    def coeff(word: tuple[int, ...]) -> int:
        if not word:
            return 1
        return int(a.e[0][len(word)][tuple(x - 1 for x in word)])

    for lj in range(1, n - 1):
        for lk in range(lj, n - lj):
            for jw in itertools.product(range(1, q + 1), repeat=lj):
                cj = coeff(jw)
                for kw in itertools.product(range(1, q + 1), repeat=lk):
                    rhs = sum(mult * coeff(w) for w, mult in infiltration(jw, kw).items())
                    lhs = cj * coeff(kw)
                    if lhs != rhs:
                        return ImageCheck(False, (jw, kw), lhs, rhs)
    return ImageCheck(True)


def is_shift_toeplitz(a: UniMatrix) -> bool:
    """True when every diagonal repeats the first row (the matrix is a truncated series)."""
    return all(np.array_equal(arr, a.e[0][j - i]) for i, j, arr in a.off_diagonal() if i > 0)


def pretty(a: UniMatrix) -> str:
    """Row-by-row display of the matrix in monomial notation."""
    rows = []
    for i in range(a.n):
        cells = []
        for j in range(a.n):
            if j < i:
                cells.append("0")
            elif j == i:
                cells.append("1")
            else:
                cells.append(format_monomials(IntervalTensor(a.q, i + 1, a.e[i][j])))
        rows.append(" | ".join(cells))
    return "\n".join(rows)


def to_entry_list(a: UniMatrix) -> list[dict]:
    """Deterministic serialization: one record per nonzero entry."""
    out = []
    for i, j, arr in a.off_diagonal():
        t = IntervalTensor(a.q, i + 1, arr)
        pairs = [{"word": list(w), "coeff": c} for w, c in t.items()]
        if pairs:
            out.append({"row": i + 1, "col": j + 1, "tensor": pairs})
    return out


def from_entry_list(q: int, n: int, records: list[dict]) -> UniMatrix:
    m = UniMatrix(q, n)
    for rec in records:
        i, j = rec["row"], rec["col"]
        t = IntervalTensor.from_dict(q, {tuple(p["word"]): p["coeff"] for p in rec["tensor"]}, degree=j - i, start=i)
        m.set_entry(i, j, t)
    return m
