"""Crossing-by-crossing cocycle sum, an independent route to the walk defect.

At each crossing the gap between lifting-then-conjugating and
conjugating-then-lifting is central.  Summing those gaps along a component
telescopes to the walk defect, which makes the sum a cross-check on the
engine that shares only the section and the matrix arithmetic.
"""

from __future__ import annotations

from typing import Sequence

from .diagram import Diagram
from .engine import ArcAssignment
from .tensors import IntervalTensor
from .unipotent import UniMatrix, central_part, conjugate, inv, mul, section_lift


def phi(a: UniMatrix, b: UniMatrix, eps: int) -> IntervalTensor:
    """``s(B)^-eps s(A) s(B)^eps . s(B^-eps A B^eps)^-1`` as a central tensor."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    lifted = conjugate(section_lift(a), section_lift(b), eps)
    gap = mul(lifted, inv(section_lift(conjugate(a, b, eps))))
    return central_part(gap)


def cocycle_sum(d: Diagram, a: ArcAssignment, j: int, order: Sequence[int] | None = None) -> IntervalTensor:
    """Sum of ``phi(f(alpha_k), f(beta_k), eps_k)`` over the under-crossings of component ``j``.

    ``order`` permutes the terms; the total does not depend on it because
    every term is central.
    """
    steps = d.walk(j)
    idx = list(order) if order is not None else list(range(len(steps)))
    if sorted(idx) != list(range(len(steps))):
        raise ValueError("order must be a permutation of the walk steps")
    total = IntervalTensor.zero(d.q, a.level)
    for k in idx:
        s = steps[k]
        total = total + phi(a[s.alpha], a[s.beta], s.epsilon)
    return total
