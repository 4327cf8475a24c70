import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from milnor.tensors import (
    IntervalTensor,
    bracket,
    format_pairs,
    left_collecting_bracket,
    left_collecting_signed_sum,
)
from milnor.unipotent import represent_word
from milnor.words import left_collecting_word


def tensors(q: int, degree: int):
    return st.lists(st.integers(-4, 4), min_size=q**degree, max_size=q**degree).map(
        lambda v: IntervalTensor.from_vector(q, degree, v)
    )


index_words = st.integers(1, 3).flatmap(
    lambda q: st.tuples(st.just(q), st.lists(st.integers(1, q), min_size=2, max_size=6))
)


def test_from_dict_accepts_digit_strings():
    t = IntervalTensor.from_dict(2, {"12": 3, (2, 1): -1})
    assert t.coeff("12") == 3 and t.coeff((2, 1)) == -1
    assert list(t.items()) == [((1, 2), 3), ((2, 1), -1)]
    with pytest.raises(ValueError):
        IntervalTensor.from_dict(2, {"13": 1})
    with pytest.raises(ValueError):
        IntervalTensor.from_dict(2, {"12": 1, "1": 1})


def test_bracket_of_generators():
    x1, x2 = IntervalTensor.generator(2, 1), IntervalTensor.generator(2, 2)
    assert bracket(x1, x2) == IntervalTensor.from_dict(2, {"12": 1, "21": -1})
    assert format_pairs(bracket(x1, x2)) == "{12: +1, 21: -1}"


def test_grade_mismatch_is_rejected():
    with pytest.raises(ValueError):
        IntervalTensor.zero(2, 2) + IntervalTensor.zero(2, 3)


def test_arbitrary_precision():
    big = 10**40
    t = IntervalTensor.from_dict(2, {"1": big})
    assert (t * big).coeff("1") == big * big
    assert t.arr.dtype == object


@given(tensors(2, 2), tensors(2, 1))
def test_bracket_is_antisymmetric(a, b):
    assert bracket(a, b) == -bracket(b, a)


@given(tensors(2, 1), tensors(2, 1), tensors(2, 2))
def test_jacobi(a, b, c):
    total = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)
    assert total.is_zero()


@given(index_words)
def test_commutator_word_top_right_is_bracket(case):
    q, J = case
    mat = represent_word(left_collecting_word(J), len(J) + 1, q)
    assert mat.top_right() == left_collecting_bracket(q, J)


@given(index_words)
def test_bracket_equals_signed_sum(case):
    q, J = case
    assert left_collecting_bracket(q, J) == left_collecting_signed_sum(q, J)


@given(tensors(3, 2))
def test_vector_round_trip(t):
    assert IntervalTensor.from_vector(3, 2, t.vector()) == t
    assert IntervalTensor.from_dict(3, t.to_dict(), degree=2) == t


def test_arrays_are_dense_object_arrays():
    t = left_collecting_bracket(3, [1, 2, 3])
    assert isinstance(t.arr, np.ndarray) and t.arr.shape == (3, 3, 3)
