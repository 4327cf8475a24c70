import pytest
from hypothesis import given
from hypothesis import strategies as st

from milnor.words import (
    GroupWord,
    commutator,
    fox_coefficient,
    left_collecting_word,
    milnor_link_longitude,
    parse_word,
    reduce,
    substitute,
)

from conftest import letters


def test_reduction_cancels_adjacent_inverses():
    assert reduce([1, 2, -2, -1, 3]).letters == (3,)
    assert reduce([(1, 1), (2, -1), (2, 1)]).letters == (1,)
    assert GroupWord([1, -1]).letters == ()


def test_reduction_rejects_out_of_range():
    with pytest.raises(ValueError):
        GroupWord([0])
    with pytest.raises(ValueError):
        GroupWord([3], q=2)


def test_parse_and_format_round_trip():
    w = parse_word("x1 x2^-1 x1")
    assert w.letters == (1, -2, 1)
    assert parse_word(str(w)) == w
    assert parse_word("1 -2 1") == w
    assert str(GroupWord()) == "1"


def test_commutator_of_generators():
    assert commutator(GroupWord.generator(1), GroupWord.generator(2)).letters == (1, 2, -1, -2)
    assert left_collecting_word([1, 2, 1]) == commutator(commutator(GroupWord.generator(1), GroupWord.generator(2)), GroupWord.generator(1))
    with pytest.raises(ValueError):
        left_collecting_word([1])


@given(letters(3))
def test_reduced_words_have_no_cancelling_pairs(raw):
    w = GroupWord(raw)
    assert all(a != -b for a, b in zip(w.letters, w.letters[1:]))
    assert GroupWord(w.letters) == w


@given(letters(3), letters(3))
def test_inverse_is_two_sided(a, b):
    u, v = GroupWord(a), GroupWord(b)
    assert (u * u.inverse()).letters == ()
    assert (u * v).inverse() == v.inverse() * u.inverse()


@given(letters(3), letters(3), st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_fox_product_rule(a, b, index):
    # eps D_I(uv) = sum over splits I = JK of eps D_J(u) eps D_K(v), with eps D_() = 1
    u, v = GroupWord(a), GroupWord(b)
    index = tuple(index)
    expected = sum(
        (fox_coefficient(u, index[:k]) if k else 1) * (fox_coefficient(v, index[k:]) if k < len(index) else 1)
        for k in range(len(index) + 1)
    )
    assert fox_coefficient(u * v, index) == expected


def test_fox_of_generators():
    x1 = GroupWord.generator(1)
    assert fox_coefficient(x1, (1,)) == 1
    assert fox_coefficient(x1, (1, 1)) == 0
    assert fox_coefficient(x1.inverse(), (1, 1, 1)) == -1
    assert fox_coefficient(x1.inverse(), (2,)) == 0


@given(letters(2))
def test_substitute_identity_map(raw):
    w = GroupWord(raw)
    assert substitute(w, {1: GroupWord.generator(1), 2: GroupWord.generator(2)}) == w


def test_milnor_link_longitude_end_cases():
    assert milnor_link_longitude(4, 4) == left_collecting_word([1, 2, 3])
    assert milnor_link_longitude(4, 3) == left_collecting_word([1, 2, 4])
    with pytest.raises(ValueError):
        milnor_link_longitude(2, 1)
    with pytest.raises(ValueError):
        milnor_link_longitude(4, 5)
