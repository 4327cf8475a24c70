"""Level-by-level lifting of Wirtinger arc assignments and the first non-vanishing invariant."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .diagram import Diagram
from .lyndon import decompose, lyndon_basis
from .tensors import IntervalTensor, bracket
from .unipotent import (
    UniMatrix,
    central_part,
    generator_matrix,
    inv,
    is_central,
    mul,
    section_lift,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 8


class LiftRefused(RuntimeError):
    """A component's walk does not close up, so the assignment has no lift."""

    def __init__(self, level: int, components: list[int]):
        super().__init__(f"nonzero defect at degree {level} for component(s) {components}")
        self.level = level
        self.components = components


class WirtingerFault(RuntimeError):
    """A lifted assignment violates a Wirtinger relation (internal inconsistency)."""


@dataclass
class ArcAssignment:
    """Matrices of size ``level`` for every arc of a diagram."""

    level: int
    matrices: list[UniMatrix]

    def __getitem__(self, arc: int) -> UniMatrix:
        return self.matrices[arc]


@dataclass
class WalkResult:
    arcs: dict[int, UniMatrix]
    defect: UniMatrix


@dataclass
class InvariantResult:
    m: int
    psi: list[IntervalTensor]
    longitude: list[IntervalTensor]
    q: int
    assignment: ArcAssignment | None = field(default=None, repr=False)

    def basis_report(self) -> list[dict]:
        out = []
        for j, t in enumerate(self.psi, start=1):
            coeffs, rest = decompose(t)
            out.append({"component": j, "lyndon": coeffs, "remainder_zero": rest.is_zero()})
        return out


def base_assignment(d: Diagram) -> ArcAssignment:
    """Abelianization: every arc of component ``j`` goes to the size-2 generator matrix of ``x_j``."""
    gens = [generator_matrix(j, 2, d.q) for j in range(1, d.q + 1)]
    return ArcAssignment(2, [gens[c - 1] for c in d.arc_component])


class _LiftCache:
    """Section lifts of the arc matrices and their inverses, computed once per level."""

    def __init__(self, a: ArcAssignment):
        self.a = a
        self.lifted: dict[int, tuple[UniMatrix, UniMatrix]] = {}

    def __call__(self, arc: int) -> tuple[UniMatrix, UniMatrix]:
        hit = self.lifted.get(arc)
        if hit is None:
            b = section_lift(self.a[arc])
            hit = (b, inv(b))
            self.lifted[arc] = hit
        return hit


def _conj(c: UniMatrix, b: UniMatrix, b_inv: UniMatrix, eps: int) -> UniMatrix:
    if eps > 0:
        return mul(mul(b_inv, c), b)
    return mul(mul(b, c), b_inv)


def walk_defect(d: Diagram, a: ArcAssignment, j: int, _cache: _LiftCache | None = None) -> WalkResult:
    """Walk around component ``j`` at size ``a.level + 1``.

    Returns the new matrices of the component's arcs and the defect
    ``Y(x_j)^-1 . B_N^-eps C(alpha_N) B_N^eps``.
    """
    lift = _cache or _LiftCache(a)
    n = a.level + 1
    start = generator_matrix(j, n, d.q)
    steps = d.walk(j)
    arcs = {d.base_arcs[j - 1]: start}
    c = start
    for k, step in enumerate(steps):
        b, b_inv = lift(step.beta)
        c = _conj(c, b, b_inv, step.epsilon)
        if k + 1 < len(steps):
            arcs[steps[k + 1].alpha] = c
    defect = mul(inv(start), c)
    return WalkResult(arcs, defect)


def psi(d: Diagram, a: ArcAssignment, j: int) -> IntervalTensor:
    """Central tensor of the defect of component ``j``; raises if the defect is not central."""
    return central_part(walk_defect(d, a, j).defect)


def _walk_all(d: Diagram, a: ArcAssignment) -> list[WalkResult]:
    cache = _LiftCache(a)
    return [walk_defect(d, a, j, cache) for j in range(1, d.q + 1)]


def _assemble(d: Diagram, level: int, walks: list[WalkResult]) -> ArcAssignment:
    mats: list[UniMatrix | None] = [None] * d.num_arcs
    for w in walks:
        for arc, mat in w.arcs.items():
            mats[arc] = mat
    missing = [i for i, m in enumerate(mats) if m is None]
    if missing:  # pragma: no cover - every arc lies on some walk
        raise WirtingerFault(f"arcs {missing} were not reached by any walk")
    return ArcAssignment(level, mats)  # type: ignore[arg-type]


def verify_wirtinger(d: Diagram, a: ArcAssignment) -> None:
    """Check ``C(out) = B^-eps C(in) B^eps`` at every crossing."""
    for x in d.crossings:
        b = a[x.over_arc]
        got = _conj(a[x.under_in], b, inv(b), x.sign)
        if got != a[x.under_out]:
            raise WirtingerFault(f"Wirtinger relation fails at crossing {x.index + 1} (size {a.level})")


def lift(d: Diagram, a: ArcAssignment, walks: list[WalkResult] | None = None) -> ArcAssignment:
    """Assignment at the next level; refused while any defect is nonzero."""
    walks = walks if walks is not None else _walk_all(d, a)
    bad = [j for j, w in enumerate(walks, start=1) if not w.defect.is_identity()]
    if bad:
        raise LiftRefused(a.level, bad)
    out = _assemble(d, a.level + 1, walks)
    verify_wirtinger(d, out)
    return out


def first_nonvanishing(d: Diagram, max_degree: int = DEFAULT_MAX_DEGREE) -> InvariantResult | None:
    """Iterate lifts until some defect is nonzero; ``None`` when trivial up to ``max_degree``."""
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    if d.q >= 3 and max_degree >= 10:
        est = d.q**max_degree * max_degree**2 * d.num_arcs * 8
        log.warning("degree %d with %d components needs roughly %.1f MB", max_degree, d.q, est / 2**20)
    a = base_assignment(d)
    while a.level <= max_degree:
        walks = _walk_all(d, a)
        if any(not w.defect.is_identity() for w in walks):
            tensors = []
            for w in walks:
                if not is_central(w.defect):
                    raise WirtingerFault(f"defect at degree {a.level} is not central")
                tensors.append(w.defect.top_right())
            longitudes = [invert_Ij(t, j) for j, t in enumerate(tensors, start=1)]
            return InvariantResult(a.level, tensors, longitudes, d.q, a)
        if a.level == max_degree:
            break
        a = lift(d, a, walks)
    return None


def apply_Ij(omega: IntervalTensor, j: int) -> IntervalTensor:
    """Image of ``y -> x_j^-1 y^-1 x_j y`` on degree-``d`` tensors: ``[lambda^(j), omega]``."""
    return bracket(IntervalTensor.generator(omega.q, j), omega.at_level(1))


class NotInImage(ValueError):
    """The tensor is not ``[lambda^(j), omega]`` for any integral Lie tensor ``omega``."""


def invert_Ij(t: IntervalTensor, j: int) -> IntervalTensor:
    """The Lie tensor ``omega`` of degree ``deg t - 1`` with ``[lambda^(j), omega] = t``.

    Solved exactly over the rationals in the Lyndon basis, then checked for
    integrality.  Only ``omega`` up to multiples of ``lambda^(j)`` is
    determined in degree 1; the representative without that term is returned.
    """
    from sympy import Matrix, Rational

    q, deg = t.q, t.degree
    if deg < 2:
        raise ValueError("defect tensors have degree >= 2")
    if t.is_zero():
        return IntervalTensor.zero(q, deg - 1)
    basis = [(w, p) for w, p in lyndon_basis(q, deg - 1) if not (deg == 2 and w == (j,))]
    images = [apply_Ij(p, j).vector() for _, p in basis]
    A = Matrix(images).T
    rhs = Matrix(t.vector())
    try:
        sol, params = A.gauss_jordan_solve(rhs)
    except ValueError:
        raise NotInImage(f"tensor is not in the image of the bracket with lambda^({j})") from None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    coeffs = [Rational(v) for v in sol]
    if any(c.q != 1 for c in coeffs):
        raise NotInImage("solution is not integral")
    out = IntervalTensor.zero(q, deg - 1)
    for (_, p), c in zip(basis, coeffs):
        if c:
            out = out + int(c) * p
    return out


def mu_numbers(result: InvariantResult) -> list[dict[tuple[int, ...], int]]:
    """Coefficient tables of the recovered longitude classes."""
    return [lon.to_dict() for lon in result.longitude]
