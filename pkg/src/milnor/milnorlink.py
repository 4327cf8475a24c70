"""First non-vanishing invariants of the Milnor link, in closed form and from its longitude words."""

from __future__ import annotations

from .tensors import IntervalTensor, bracket, left_collecting_bracket
from .unipotent import represent_word
from .words import milnor_link_longitude


def _nested(m: int, indices: list[int]) -> IntervalTensor:
    if len(indices) == 1:
        return IntervalTensor.generator(m, indices[0])
    return left_collecting_bracket(m, indices)


def closed_form(m: int, k: int) -> IntervalTensor:
    """Degree ``m-1`` tensor of the ``k``-th longitude of the ``m``-component Milnor link.

    ``(-1)^(m-k+1) [[..[l1^(1), l2^(2)]..l_{k-1}^(k-1)], [[..[l_k^(m), l_{k+1}^(m-1)]..], l_{m-1}^(k+1)]]``.
    When one side is empty the bracket degenerates to the other side:
    ``k = 1`` keeps the sign and gives the right-hand factor alone, while
    ``k = m`` gives the left-normed bracket of ``1 .. m-1`` with sign ``+1``.
    """
    if m < 3:
        raise ValueError("Milnor links need m >= 3 components")
    if not 1 <= k <= m:
        raise ValueError(f"component index {k} out of range 1..{m}")
    left = list(range(1, k))
    right = list(range(m, k, -1))
    if not right:
        return _nested(m, left)
    sign = (-1) ** (m - k + 1)
    if not left:
        return sign * _nested(m, right)
    return sign * bracket(_nested(m, left), _nested(m, right))


def longitude_tensor(m: int, k: int) -> IntervalTensor:
    """Top-right entry of the ``m x m`` matrix of the longitude word."""
    return represent_word(milnor_link_longitude(m, k), m, m).top_right()
