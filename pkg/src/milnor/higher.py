"""Defects above the first non-vanishing degree and their reduction modulo the Delta lattices.

Above the first obstruction the arc assignment no longer closes up, so the
walks are run on coset representatives: every arc matrix is lifted with the
same zero-padded section as below the obstruction.  The top-right tensor of
each walk defect is recorded raw.  Its Lie part (the Lie element agreeing
with it on Lyndon-word coordinates) is the value that enters the lattices and
gets reduced; see ``lie_part`` for why the raw tensor cannot be used as is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .diagram import Diagram
from .engine import _assemble, _walk_all, base_assignment
from .lattice import DeltaLattice, delta_initial, lattice_equal
from .lyndon import decompose, format_lyndon, lyndon_basis
from .tensors import IntervalTensor, bracket, left_collecting_bracket
from .unipotent import UniMatrix, generator_matrix, inv, mul

__all__ = [
    "DefectLedger",
    "LedgerEntry",
    "delta_initial",
    "delta_next",
    "higher_mu",
    "lattice_equal",
    "lie_part",
    "reduce",
    "render_symbols",
]


@dataclass
class LedgerEntry:
    """One component at one degree.

    ``raw`` depends on the section used for the arc matrices and is not an
    invariant; ``value`` is its Lie part and ``reduced`` the canonical
    representative of ``value`` modulo the lattice of the same degree.
    """

    raw: IntervalTensor
    value: IntervalTensor
    reduced: IntervalTensor


@dataclass
class DefectLedger:
    m: int
    q: int
    entries: dict[int, list[LedgerEntry]] = field(default_factory=dict)
    lattices: dict[int, DeltaLattice] = field(default_factory=dict)
    defect_matrices: dict[int, list[UniMatrix]] = field(default_factory=dict, repr=False)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.entries)

    def values(self, h: int) -> list[IntervalTensor]:
        return [e.value for e in self.entries[h]]

    def reduced(self, h: int) -> list[IntervalTensor]:
        return [e.reduced for e in self.entries[h]]

    def agrees_with(self, other: "DefectLedger", h: int) -> bool:
        """Equal modulo this ledger's lattice at degree ``h``, component by component."""
        lat = self.lattices[h]
        return all(lat.contains(a - b) for a, b in zip(self.values(h), other.values(h)))


def lie_part(t: IntervalTensor) -> IntervalTensor:
    """The Lie element whose coefficients at Lyndon words agree with ``t``.

    Above the leading degree the top-right entries of matrices in the image
    of the embedding are Magnus coefficients for ``x -> 1 + X``, which are not
    Lie in general (the substitution is not an exponential).  Lyndon words
    give coordinates on the Lie part, and peeling off the smallest Lyndon word
    first is exact because each standard bracketing is unitriangular in them.
    """
    q, deg = t.q, t.degree
    out = IntervalTensor.zero(q, deg)
    if deg == 0:
        return out
    rest = t.at_level(1).copy()
    for w, p in lyndon_basis(q, deg):
        c = rest.coeff(w)
        if c:
            rest = rest - c * p
            out = out + c * p
    return out


def reduce(t: IntervalTensor, lattice: DeltaLattice) -> IntervalTensor:
    return lattice.reduce(t)


def delta_next(ledger: DefectLedger, degree: int) -> DeltaLattice:
    """Lattice of degree ``degree`` from the ledger values and lattices of lower degree.

    Generators are ``[v, eta]`` and ``[eta, v]`` where ``v`` runs over recorded
    values and lattice basis vectors of each degree ``d < degree`` and ``eta``
    over the Lyndon bracketings of degree ``degree - d``.
    """
    q = ledger.q
    out = DeltaLattice(q, degree)
    for d in range(ledger.m, degree):
        if d not in ledger.entries:
            raise ValueError(f"ledger has no entries at degree {d}")
        sources = ledger.values(d) + ledger.lattices[d].basis()
        etas = [p for _, p in lyndon_basis(q, degree - d)]
        for v in sources:
            if v.is_zero():
                continue
            for eta in etas:
                out.add(bracket(v, eta))
                out.add(bracket(eta, v))
    return out


# --- representatives -------------------------------------------------------


def _zero_padded_defects(d: Diagram, m: int, max_h: int) -> dict[int, list[UniMatrix]]:
    """Walk defects at every level from the base assignment, lifting through nonzero defects."""
    a = base_assignment(d)
    out: dict[int, list[UniMatrix]] = {}
    while a.level <= max_h:
        walks = _walk_all(d, a)
        if a.level >= m:
            out[a.level] = [w.defect for w in walks]
        if a.level == max_h:
            break
        a = _assemble(d, a.level + 1, walks)
    return out


def _witness_defects(d: Diagram, m: int, max_h: int) -> dict[int, list[UniMatrix]]:
    """The same walks carried out on matrices of the final size throughout.

    Every arc matrix is then the full image of the word the walk builds for
    it, so each section lift copies its top-right entry from that word rather
    than padding with zero.
    """
    q, n = d.q, max_h + 1
    gens = [generator_matrix(j, n, q) for j in range(1, q + 1)]
    arcs = [gens[c - 1] for c in d.arc_component]
    out: dict[int, list[UniMatrix]] = {}
    for level in range(2, max_h + 1):
        inverses: dict[int, UniMatrix] = {}
        new = list(arcs)
        defects = []
        for j in range(1, q + 1):
            c = gens[j - 1]
            new[d.base_arcs[j - 1]] = c
            steps = d.walk(j)
            for k, step in enumerate(steps):
                b = arcs[step.beta]
                if step.beta not in inverses:
                    inverses[step.beta] = inv(b)
                b_inv = inverses[step.beta]
                c = mul(mul(b_inv, c), b) if step.epsilon > 0 else mul(mul(b, c), b_inv)
                if k + 1 < len(steps):
                    new[steps[k + 1].alpha] = c
            defects.append(_corner(mul(inv(gens[j - 1]), c), level + 1))
        arcs = new
        if level >= m:
            out[level] = defects
    return out


def _corner(a: UniMatrix, n: int) -> UniMatrix:
    return UniMatrix(a.q, n, [[a.e[i][j].copy() if j > i else None for j in range(n)] for i in range(n)])


def _first_degree(defects: dict[int, list[UniMatrix]]) -> int | None:
    for h in sorted(defects):
        if any(not x.is_identity() for x in defects[h]):
            return h
    return None


def higher_mu(d: Diagram, max_h: int, section: str = "zero", m: int | None = None) -> DefectLedger | None:
    """Ledger of defects from the first non-vanishing degree ``m`` up to ``max_h``.

    ``section`` is ``"zero"`` (zero-padded lifts, the engine's convention) or
    ``"witness"`` (lifts read off the full words).  Returns ``None`` when every
    defect vanishes up to ``max_h``.
    """
    if max_h < 2:
        raise ValueError("max degree must be at least 2")
    if section not in ("zero", "witness"):
        raise ValueError(f"unknown section {section!r}")
    builder = _zero_padded_defects if section == "zero" else _witness_defects
    defects = builder(d, m or 2, max_h)
    first = _first_degree(defects) if m is None else m
    if first is None:
        return None
    ledger = DefectLedger(m=first, q=d.q)
    for h in range(first, max_h + 1):
        lat = delta_initial(d.q, h) if h == first else delta_next(ledger, h)
        entries = []
        for mat in defects[h]:
            raw = mat.top_right()
            value = lie_part(raw)
            entries.append(LedgerEntry(raw, value, lat.reduce(value)))
        ledger.lattices[h] = lat
        ledger.entries[h] = entries
        ledger.defect_matrices[h] = defects[h]
    return ledger


# --- rendering -------------------------------------------------------------

_TWO_COMPONENT_SYMBOLS: dict[int, list[tuple[str, tuple[int, ...]]]] = {
    4: [("b1", (1, 2, 2, 2)), ("b2", (2, 1, 1, 1)), ("b3", (1, 2, 2, 1))],
    5: [
        ("A", (1, 2, 2, 2, 2)),
        ("B", (1, 2, 2, 2, 1)),
        ("C", (2, 1, 1, 1, 2)),
        ("D", (2, 1, 1, 1, 1)),
        ("E", (2, 1, 1, 2, 2)),
        ("F", (1, 2, 2, 1, 1)),
    ],
}


def symbol_basis(degree: int) -> list[tuple[str, IntervalTensor]]:
    """Named left-collecting brackets spanning the two-letter Lie tensors of degree 4 or 5."""
    return [(name, left_collecting_bracket(2, J)) for name, J in _TWO_COMPONENT_SYMBOLS.get(degree, [])]


def symbol_coordinates(t: IntervalTensor) -> dict[str, int] | None:
    """Integer coordinates of ``t`` in :func:`symbol_basis`, or ``None`` outside that setting."""
    if t.q != 2 or t.degree not in _TWO_COMPONENT_SYMBOLS:
        return None
    coeffs, rest = decompose(t)
    if not rest.is_zero():
        return None
    basis = symbol_basis(t.degree)
    from sympy import Matrix

    cols = [decompose(p)[0] for _, p in basis]
    words = sorted({w for c in cols for w in c} | set(coeffs))
    A = Matrix([[c.get(w, 0) for c in cols] for w in words])
    rhs = Matrix([coeffs.get(w, 0) for w in words])
    sol = A.solve(rhs)
    return {name: int(v) for (name, _), v in zip(basis, sol) if v}


def _combination(coords: dict[str, int]) -> str:
    if not coords:
        return "0"
    parts = []
    for name, c in coords.items():
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(("-" if c < 0 else "+", mag + name))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return out + "".join(f" {s} {p}" for s, p in parts[1:])


def render_symbols(t: IntervalTensor) -> str:
    """``2b1 + b2``-style text for two-component degrees 4 and 5, Lyndon form otherwise."""
    coords = symbol_coordinates(t)
    if coords is not None:
        return _combination(coords)
    coeffs, rest = decompose(t)
    if rest.is_zero():
        return format_lyndon(coeffs)
    return "(non-Lie) " + format_lyndon(coeffs)


def lattice_summary(lat: DeltaLattice) -> dict:
    divisors = lat.elementary_divisors()
    return {
        "degree": lat.degree,
        "generators": len(lat.generators),
        "rank": lat.rank,
        "elementary_divisors": divisors,
        "torsion": [e for e in divisors if e > 1],
    }


def presentation(q: int, degree: int, generators: Iterable[IntervalTensor]) -> DeltaLattice:
    return DeltaLattice(q, degree, generators)

