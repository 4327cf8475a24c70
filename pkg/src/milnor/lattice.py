"""Integer lattices of central tensors kept in row-style Hermite normal form."""

from __future__ import annotations

from typing import Iterable, Sequence

from .tensors import IntervalTensor


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``a x + b y = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class Lattice:
    """Sublattice of ``Z^N`` in Hermite normal form.

    Rows are sorted by pivot column; every pivot is positive and every entry
    above a pivot lies in ``[0, pivot)``.  Vectors are inserted one at a time
    by extended-gcd row operations, so the form is canonical at all times.
    """

    __slots__ = ("dim", "rows", "pivots")

    def __init__(self, dim: int, vectors: Iterable[Sequence[int]] = ()):
        self.dim = dim
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    def copy(self) -> "Lattice":
        out = Lattice(self.dim)
        out.rows = [r[:] for r in self.rows]
        out.pivots = self.pivots[:]
        return out

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vec: Sequence[int]) -> None:
        if len(vec) != self.dim:
            raise ValueError(f"vector length {len(vec)} != lattice dimension {self.dim}")
        v = [int(x) for x in vec]
        start = 0
        changed = []
        while True:
            col = next((c for c in range(start, self.dim) if v[c]), None)
            if col is None:
                break
            idx = self._pivot_index(col)
            if idx is None:
                pos = self._insert_position(col)
                if v[col] < 0:
                    v = [-x for x in v]
                self.rows.insert(pos, v)
                self.pivots.insert(pos, col)
                changed.append(col)
                break
            row = self.rows[idx]
            a, b = row[col], v[col]
            if b % a == 0:
                k = b // a
                v = [x - k * y for x, y in zip(v, row)]
            else:
                g, x, y = _xgcd(a, b)
                new_row = [x * r + y * s for r, s in zip(row, v)]
                v = [(a // g) * s - (b // g) * r for r, s in zip(row, v)]
                self.rows[idx] = new_row
                changed.append(col)
            start = col + 1
        if changed:
            self._normalize()

    def _pivot_index(self, col: int) -> int | None:
        for i, p in enumerate(self.pivots):
            if p == col:
                return i
            if p > col:
                return None
        return None

    def _insert_position(self, col: int) -> int:
        for i, p in enumerate(self.pivots):
            if p > col:
                return i
        return len(self.pivots)

    def _normalize(self) -> None:
        # positive pivots, then reduce the rows above each pivot into [0, pivot);
        # ascending order keeps earlier pivot columns untouched by later steps
        for row, p in zip(self.rows, self.pivots):
            if row[p] < 0:
                row[:] = [-x for x in row]
        for i, p in enumerate(self.pivots):
            piv_row = self.rows[i]
            d = piv_row[p]
            for row in self.rows[:i]:
                k = row[p] // d
                if k:
                    row[:] = [x - k * y for x, y in zip(row, piv_row)]

    def reduce(self, vec: Sequence[int]) -> list[int]:
        """Canonical representative of ``vec + L``: each pivot coordinate lands in ``[0, pivot)``."""
        v = [int(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            k = v[p] // row[p]
            if k:
                v = [x - k * y for x, y in zip(v, row)]
        return v

    def __contains__(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def elementary_divisors(self) -> list[int]:
        """Smith invariants of the basis matrix (positive, each dividing the next)."""
        from sympy import Matrix
        from sympy.matrices.normalforms import smith_normal_form

        if not self.rows:
            return []
        snf = smith_normal_form(Matrix(self.rows))
        return sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0)


class DeltaLattice:
    """A lattice of degree-``d`` central tensors over ``q`` letters."""

    __slots__ = ("q", "degree", "generators", "hnf")

    def __init__(self, q: int, degree: int, generators: Iterable[IntervalTensor] = ()):
        self.q = q
        self.degree = degree
        self.generators: list[IntervalTensor] = []
        self.hnf = Lattice(q**degree)
        for g in generators:
            self.add(g)

    def add(self, t: IntervalTensor) -> None:
        self._check(t)
        self.generators.append(t)
        self.hnf.add(t.vector())

    def _check(self, t: IntervalTensor) -> None:
        if t.degree != self.degree or t.q != self.q:
            raise ValueError(f"degree mismatch: lattice degree {self.degree}, tensor degree {t.degree}")

    def reduce(self, t: IntervalTensor) -> IntervalTensor:
        self._check(t)
        return IntervalTensor.from_vector(self.q, self.degree, self.hnf.reduce(t.vector()))

    def contains(self, t: IntervalTensor) -> bool:
        self._check(t)
        return t.vector() in self.hnf

    def basis(self) -> list[IntervalTensor]:
        return [IntervalTensor.from_vector(self.q, self.degree, r) for r in self.hnf.rows]

    @property
    def rank(self) -> int:
        return self.hnf.rank

    def elementary_divisors(self) -> list[int]:
        return self.hnf.elementary_divisors()


def delta_initial(q: int, m: int) -> DeltaLattice:
    return DeltaLattice(q, m)


def lattice_equal(a: DeltaLattice, b: DeltaLattice) -> bool:
    if a.degree != b.degree or a.q != b.q:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return a.hnf == b.hnf
