from hypothesis import given
from hypothesis import strategies as st

from milnor.magnus import check_shuffle_relations, infiltration, magnus_expand
from milnor.tensors import IntervalTensor
from milnor.unipotent import represent_word
from milnor.words import GroupWord, fox_coefficient

from conftest import letters


def test_infiltration_small_cases():
    assert infiltration((1,), (1,)) == {(1, 1): 2, (1,): 1}
    assert infiltration((1,), (2,)) == {(1, 2): 1, (2, 1): 1}


@given(letters(3), st.integers(2, 6))
def test_shuffle_relation_holds(a, n):
    assert check_shuffle_relations(magnus_expand(GroupWord(a), n)) is None


@given(letters(3), st.integers(2, 5))
def test_fox_magnus_matrix_agree(a, n):
    w = GroupWord(a)
    series = magnus_expand(w, n)
    mat = represent_word(w, n, 3)
    for d in range(1, n):
        entry = IntervalTensor(3, 1, mat.e[0][d]).to_dict()
        assert entry == series.degree_part(d)
        for word, c in entry.items():
            assert fox_coefficient(w, word) == c


def test_inverse_letter_series():
    s = magnus_expand(GroupWord([-1]), 4)
    assert s[(1,)] == -1 and s[(1, 1)] == 1 and s[(1, 1, 1)] == -1
