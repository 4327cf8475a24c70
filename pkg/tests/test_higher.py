import pytest
from hypothesis import given
from hypothesis import strategies as st

from milnor import verify
from milnor.catalog import catalog_lookup, entries
from milnor.diagram import build, linking_matrix
from milnor.engine import first_nonvanishing
from milnor.higher import (
    _corner,
    higher_mu,
    lie_part,
    reduce,
    render_symbols,
    symbol_basis,
    symbol_coordinates,
)
from milnor.lattice import DeltaLattice, lattice_equal
from milnor.lyndon import is_lie, lyndon_basis
from milnor.tensors import IntervalTensor, bracket, left_collecting_bracket

LK3 = [name for name in verify.LK3_TABLE]


def _ledger(name, max_h=5, **kw):
    return higher_mu(build(catalog_lookup(name)), max_h, **kw)


def test_knot_and_split_link_give_no_ledger():
    assert _ledger("3_1") is None
    assert _ledger("3_1+3_1") is None


def test_first_entry_is_the_first_defect():
    for name in ("5_1^2", "6_2^3", "6_1^2"):
        d = build(catalog_lookup(name))
        r, led = first_nonvanishing(d), higher_mu(d, 5)
        assert led.m == r.m and led.values(r.m) == r.psi
        assert led.lattices[r.m].rank == 0 and led.reduced(r.m) == r.psi
        assert led.degrees == list(range(r.m, 6))


@pytest.mark.parametrize("name", ["6_1^2", "5_1^2", "6_2^3"])
def test_defect_matrices_project_down(name):
    led = _ledger(name)
    for h in led.degrees[:-1]:
        for big, small in zip(led.defect_matrices[h + 1], led.defect_matrices[h]):
            assert _corner(big, small.n) == small


@pytest.mark.parametrize("name", ["6_1^2", "6_2^2", "5_1^2", "7_4^2", "4_1^2", "6_2^3"])
def test_witness_section_agrees_modulo_delta(name):
    zero, witness = _ledger(name), _ledger(name, section="witness")
    assert zero.degrees == witness.degrees
    assert all(zero.agrees_with(witness, h) for h in zero.degrees)


LK_LINKS = [e.name for e in entries() if e.components == 2 and abs(e.linking[0][1]) in (2, 3)]


@pytest.mark.parametrize("name", LK_LINKS)
def test_linking_number_annihilates_refined_values(name):
    d = build(catalog_lookup(name))
    lk = abs(linking_matrix(d)[0][1])
    led = higher_mu(d, 5)
    for h in led.degrees[1:]:
        assert all(led.lattices[h].contains(lk * v) for v in led.values(h)), h


def test_lk_links_are_bundled():
    assert "4_1^2" in LK_LINKS and set(LK3) <= set(LK_LINKS)


@pytest.mark.parametrize("name", LK3)
def test_lk3_degree_three_vanishes_and_delta5_has_expected_shape(name):
    led = _ledger(name)
    assert all(led.lattices[3].contains(v) for v in led.values(3))
    # same elementary divisors as a lattice <3 Lie_5, x, y> with x, y independent mod 3
    assert led.lattices[5].elementary_divisors() == [1, 1, 3, 3, 3, 3]


@pytest.mark.parametrize("name", [n for n in LK3 if n != "8_a11^2"])
def test_lk3_degree_four_matches_table_up_to_component_sign(name):
    led = _ledger(name, 4)
    target = verify._combo(verify.LK3_TABLE[name][0])
    v1, v2 = led.values(4)
    assert led.lattices[4].contains(v1 - target)
    assert led.lattices[4].contains(v2 + target)


def test_borromean_delta4_is_the_displayed_span():
    led = _ledger("6_2^3", 4)
    gens = [bracket(left_collecting_bracket(3, [j, j % 3 + 1, (j + 1) % 3 + 1]), IntervalTensor.generator(3, k))
            for j in (1, 2, 3) for k in (1, 2, 3)]
    assert lattice_equal(led.lattices[4], DeltaLattice(3, 4, gens))


def test_next_lattice_contains_brackets_of_values():
    led = _ledger("5_1^2", 6)
    for h in led.degrees[:-1]:
        for v in led.values(h):
            for k in (1, 2):
                x = IntervalTensor.generator(2, k)
                assert led.lattices[h + 1].contains(bracket(v, x))
                assert led.lattices[h + 1].contains(bracket(x, v))


def test_reduced_values_are_canonical():
    led = _ledger("6_1^2")
    for h in led.degrees:
        lat = led.lattices[h]
        for e in led.entries[h]:
            assert reduce(e.reduced, lat) == e.reduced
            assert lat.contains(e.value - e.reduced)


def test_published_lattices_of_8a10_and_8a11_differ():
    a = verify.published_delta5(verify.LK3_TABLE["8_a10^2"][1])
    b = verify.published_delta5(verify.LK3_TABLE["8_a11^2"][1])
    assert not lattice_equal(a, b)


@given(st.sampled_from([(2, 3), (2, 4), (3, 3)]).flatmap(
    lambda qd: st.lists(st.integers(-3, 3), min_size=qd[0] ** qd[1], max_size=qd[0] ** qd[1]).map(
        lambda v: IntervalTensor.from_vector(qd[0], qd[1], v))))
def test_lie_part_is_lie_and_idempotent(t):
    p = lie_part(t)
    assert is_lie(p)
    assert lie_part(p) == p


def test_symbols_form_a_basis():
    for degree in (4, 5):
        for name, t in symbol_basis(degree):
            assert symbol_coordinates(t) == {name: 1}
        assert len(symbol_basis(degree)) == len(lyndon_basis(2, degree))
    t = verify._combo("2b1+b2-b3")
    assert render_symbols(t) == "2b1 + b2 - b3"
    assert symbol_coordinates(IntervalTensor.zero(3, 4)) is None


def test_invalid_arguments():
    d = build(catalog_lookup("5_1^2"))
    with pytest.raises(ValueError):
        higher_mu(d, 1)
    with pytest.raises(ValueError):
        higher_mu(d, 5, section="other")


@pytest.mark.parametrize("a, b, top", [("6_1^2", "6_1^2_r", 7), ("5_1^2", "5_1^2_r", 5), ("7_4^2", "7_4^2_r", 5)])
def test_reidemeister_variants_agree_in_low_degrees(a, b, top):
    la, lb = _ledger(a, top), _ledger(b, top)
    assert all(la.agrees_with(lb, h) and lb.agrees_with(la, h) for h in la.degrees)
