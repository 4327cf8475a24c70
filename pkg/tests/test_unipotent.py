import pytest
from hypothesis import given
from hypothesis import strategies as st

from milnor.tensors import IntervalTensor
from milnor.unipotent import (
    NotCentralError,
    central_part,
    conjugate,
    from_entry_list,
    generator_matrix,
    identity,
    inv,
    magnus_image_check,
    mul,
    represent_word,
    section_lift,
    to_entry_list,
    with_top_right,
)
from milnor.words import GroupWord, left_collecting_word

from conftest import letters


@given(letters(3), letters(3), st.integers(2, 5))
def test_representation_is_a_homomorphism(a, b, n):
    u, v = GroupWord(a), GroupWord(b)
    assert represent_word(u * v, n, 3) == mul(represent_word(u, n, 3), represent_word(v, n, 3))


@given(letters(3), st.integers(2, 5))
def test_inverse(a, n):
    m = represent_word(GroupWord(a), n, 3)
    assert mul(m, inv(m)).is_identity()
    assert inv(m) == represent_word(GroupWord(a).inverse(), n, 3)


@given(letters(2, 10), letters(2, 10), st.integers(2, 5), st.integers(-3, 3), st.sampled_from((1, -1)))
def test_conjugation_ignores_top_right_of_conjugator(a, b, n, k, eps):
    A = represent_word(GroupWord(a), n, 2)
    B = represent_word(GroupWord(b), n, 2)
    bumped = with_top_right(B, B.top_right() + k * IntervalTensor.from_dict(2, {(1,) * (n - 1): 1}))
    assert conjugate(A, B, eps) == conjugate(A, bumped, eps)


@given(letters(2, 10), letters(2, 10), st.integers(2, 4))
def test_conjugations_cancel(a, b, n):
    A = represent_word(GroupWord(a), n, 2)
    B = represent_word(GroupWord(b), n, 2)
    assert conjugate(conjugate(A, B, 1), B, -1) == A
    assert conjugate(A, identity(n, 2), 1) == A


@given(letters(3), st.integers(2, 5))
def test_represented_words_pass_image_check(a, n):
    assert magnus_image_check(represent_word(GroupWord(a), n, 3)).ok


def test_image_check_reports_witness():
    m = identity(3, 1)
    m = with_top_right(m, IntervalTensor.from_dict(1, {"11": 5}))
    m.set_entry(1, 2, IntervalTensor.from_dict(1, {"1": 1}))
    res = magnus_image_check(m)
    assert not res.ok and res.witness == ((1,), (1,))


@given(letters(2), st.integers(2, 5))
def test_section_lift_differs_from_witness_only_in_corner(a, n):
    w = GroupWord(a)
    lifted = section_lift(represent_word(w, n, 2))
    honest = represent_word(w, n + 1, 2)
    assert with_top_right(lifted, honest.top_right()) == honest


def test_section_lift_of_identity():
    assert section_lift(identity(3, 2)) == identity(4, 2)


def test_commutators_of_depth_n_are_central_at_size_n_plus_1():
    w = left_collecting_word([1, 2, 2])
    assert central_part(represent_word(w, 4, 2)) == represent_word(w, 4, 2).top_right()
    assert represent_word(w, 3, 2).is_identity()
    with pytest.raises(NotCentralError):
        central_part(generator_matrix(1, 3, 2))


def test_entry_list_round_trip():
    m = represent_word(GroupWord([1, 2, -1]), 4, 2)
    assert from_entry_list(2, 4, to_entry_list(m)) == m


def test_size_mismatch():
    with pytest.raises(ValueError):
        mul(identity(3, 2), identity(4, 2))
