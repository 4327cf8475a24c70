import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form

from milnor.lattice import DeltaLattice, Lattice, delta_initial, lattice_equal
from milnor.tensors import IntervalTensor

vectors = st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), max_size=5)


@given(vectors)
def test_hnf_shape(rows):
    lat = Lattice(4, rows)
    for row, p in zip(lat.rows, lat.pivots):
        assert row[p] > 0 and not any(row[:p])
    for i, p in enumerate(lat.pivots):
        for r in lat.rows[:i]:
            assert 0 <= r[p] < lat.rows[i][p]


@given(vectors, st.lists(st.integers(-9, 9), min_size=4, max_size=4))
def test_reduce_is_idempotent_and_stays_in_coset(rows, v):
    lat = Lattice(4, rows)
    r = lat.reduce(v)
    assert lat.reduce(r) == r
    assert [a - b for a, b in zip(v, r)] in lat


@given(vectors, st.randoms(use_true_random=False))
def test_hnf_does_not_depend_on_generator_order(rows, rnd):
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert Lattice(4, rows) == Lattice(4, shuffled)


@given(vectors)
def test_generators_are_members(rows):
    lat = Lattice(4, rows)
    assert all(r in lat for r in rows)
    assert lat.rank == Matrix(rows).rank() if rows else lat.rank == 0


@given(vectors)
def test_elementary_divisors_match_smith_form(rows):
    lat = Lattice(4, rows)
    if not rows or not any(any(r) for r in rows):
        assert lat.elementary_divisors() == []
        return
    snf = smith_normal_form(Matrix(rows))
    expected = sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0)
    assert lat.elementary_divisors() == expected


def test_delta_lattice_basics():
    t = IntervalTensor.from_dict(2, {"12": 1, "21": -1})
    empty = delta_initial(2, 2)
    assert empty.rank == 0 and empty.reduce(t) == t and empty.contains(IntervalTensor.zero(2, 2))
    lat = DeltaLattice(2, 2, [3 * t])
    assert lat.contains(6 * t) and not lat.contains(t)
    assert lat.reduce(4 * t) == lat.reduce(t)
    assert lattice_equal(lat, DeltaLattice(2, 2, [3 * t, -3 * t]))
    assert not lattice_equal(lat, DeltaLattice(2, 2, [t]))
    with pytest.raises(ValueError):
        lat.reduce(IntervalTensor.zero(2, 3))
    with pytest.raises(ValueError):
        lattice_equal(lat, delta_initial(2, 3))


def test_large_entries_stay_exact():
    big = 10**30
    lat = Lattice(2, [[big, 1], [0, big]])
    assert [big, 1] in lat and [1, 0] not in lat
