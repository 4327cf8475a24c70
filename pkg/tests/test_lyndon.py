import pytest
from hypothesis import given
from hypothesis import strategies as st

from milnor.lyndon import (
    decompose,
    format_lyndon,
    is_lie,
    is_lyndon,
    lyndon_basis,
    lyndon_words,
    match_left_collecting,
    necklace_count,
    recompose,
    standard_factorization,
)
from milnor.tensors import IntervalTensor, bracket, left_collecting_bracket


@pytest.mark.parametrize("q", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 7))
def test_lyndon_count_is_necklace_count(q, n):
    words = lyndon_words(q, n)
    assert len(words) == necklace_count(q, n)
    assert words == sorted(words) and all(is_lyndon(w) for w in words)


def test_small_lyndon_facts():
    assert lyndon_words(2, 3) == [(1, 1, 2), (1, 2, 2)]
    assert is_lyndon((1, 2, 2)) and not is_lyndon((1, 2, 1)) and not is_lyndon((1, 1))
    assert standard_factorization((1, 1, 2)) == ((1,), (1, 2))


def test_basis_elements_have_leading_word():
    for w, p in lyndon_basis(2, 4):
        assert next(p.items()) == (w, 1)


@given(st.integers(1, 3).flatmap(lambda q: st.tuples(st.just(q), st.integers(1, 4))).flatmap(
    lambda qn: st.tuples(st.just(qn), st.lists(st.integers(-5, 5), min_size=len(lyndon_words(*qn)), max_size=len(lyndon_words(*qn))))
))
def test_decompose_inverts_recompose(case):
    (q, n), coeffs = case
    target = {w: c for w, c in zip(lyndon_words(q, n), coeffs) if c}
    t = recompose(q, target, n)
    got, rest = decompose(t)
    assert rest.is_zero()
    assert {w: c for w, c in got.items() if c} == target


@given(st.lists(st.integers(1, 2), min_size=2, max_size=5))
def test_brackets_are_lie(J):
    assert is_lie(left_collecting_bracket(2, J))


def test_non_lie_tensor_has_remainder():
    t = IntervalTensor.from_dict(2, {"12": 1})
    assert not is_lie(t)


def test_match_left_collecting():
    t = -2 * left_collecting_bracket(2, [1, 2, 1, 2])
    c, J = match_left_collecting(t)
    assert c * left_collecting_bracket(2, J) == t
    x = IntervalTensor.generator(2, 1)
    assert match_left_collecting(bracket(x, x)) is None


def test_format():
    assert format_lyndon({(1, 2, 2): 2, (1, 1, 2): -1}) == "-P(112) + 2*P(122)"
    assert format_lyndon({}) == "0"
