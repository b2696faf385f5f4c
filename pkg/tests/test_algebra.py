import pytest
from hypothesis import given

from conftest import BROUWERIAN_ALL, LATTICES, boolean_pointed, posemigroups
from hypothesis import strategies as st
from twistkit.algebra import (BrouwerianAlgebra, Posemigroup, ResiduatedStructure,
                              brouwerian_from_lattice, check_boolean_pointed, check_brouwerian,
                              check_brouwerian_lemmas, check_posemigroup, check_residuated,
                              check_residuated_lattice, compute_residuals)
from twistkit.errors import MissingComponent, MissingPoint
from twistkit.order import Poset, freeze


def _c2(mul, unit=1):
    return Posemigroup(Poset.chain(2), freeze(mul), unit).with_lattice()


def test_meet_monoid_on_two_chain_passes():
    assert check_posemigroup(_c2([[0, 0], [0, 1]]))


def test_join_with_top_as_unit_fails_unit_law():
    r = check_posemigroup(_c2([[0, 1], [1, 1]]))
    assert r.axiom == "posemigroup.unit" and r.witness == (0,)


def test_lukasiewicz_chain():
    luk = LATTICES["luk3"]
    assert check_posemigroup(luk.base)
    assert check_residuated_lattice(luk)
    assert luk.lres[1][0] == 1  # h\0 = h


def test_two_chain_residuals():
    r = compute_residuals(_c2([[0, 0], [0, 1]]))
    assert (r.lres[1][0], r.lres[0][0], r.lres[0][1], r.lres[1][1]) == (0, 1, 1, 1)


def test_antichain_has_no_residuals():
    left = Posemigroup(Poset.antichain(2), freeze([[0, 0], [1, 1]]))
    assert check_posemigroup(left)
    assert compute_residuals(left) is None


def test_antichain_group_is_residuated():
    # the cyclic group of order 2: every bound set is a singleton
    z2 = Posemigroup(Poset.antichain(2), freeze([[0, 1], [1, 0]]), 0)
    r = compute_residuals(z2)
    assert r is not None and check_residuated(r)


def test_corrupted_residual_is_caught():
    c2 = LATTICES["c2"]
    lres = freeze([[1, 1], [1, 1]])
    r = check_residuated_lattice(ResiduatedStructure(c2.base, lres, c2.rres))
    assert r.axiom == "residuated.residuation" and r.witness == (1, 1, 0)


def test_residuated_lattice_needs_a_unit():
    c2 = LATTICES["c2"]
    no_unit = ResiduatedStructure(Posemigroup(c2.poset, c2.mul, None).with_lattice(),
                                  c2.lres, c2.rres)
    assert check_residuated(no_unit)
    with pytest.raises(MissingComponent, match="unit"):
        check_residuated_lattice(no_unit)


def test_brouwerian_examples():
    assert check_brouwerian(brouwerian_from_lattice(Poset.chain(2)))
    g3 = brouwerian_from_lattice(Poset.chain(3))
    assert g3.imp == ((2, 2, 2), (0, 2, 2), (0, 1, 2))
    assert check_brouwerian(g3)
    projection = BrouwerianAlgebra(g3.lattice, freeze([[y for y in range(3)] for _ in range(3)]))
    r = check_brouwerian(projection)
    assert r.axiom == "brouwerian.pseudocomplement"
    x, _, z = r.witness
    assert (x, z) == (0, 2) or (x, z) == (0, 1)


def test_pentagon_is_not_brouwerian():
    pentagon = Poset.from_relation(5, [(0, 1), (1, 2), (0, 3), (2, 4), (3, 4)])
    with pytest.raises(MissingComponent, match="pseudocomplement"):
        brouwerian_from_lattice(pentagon)


def test_boolean_pointed_examples():
    assert check_boolean_pointed(brouwerian_from_lattice(Poset.chain(2), 0))
    assert check_boolean_pointed(brouwerian_from_lattice(Poset.chain(3), 1))
    r = check_boolean_pointed(brouwerian_from_lattice(Poset.chain(3), 0))
    assert r.witness == (1,)


def test_boolean_pointed_needs_a_point():
    with pytest.raises(MissingPoint):
        check_boolean_pointed(brouwerian_from_lattice(Poset.chain(2)))


@given(posemigroups)
def test_enumerated_posemigroups_pass(s):
    assert check_posemigroup(s)


@given(posemigroups)
def test_computed_residuals_satisfy_residuation(s):
    r = compute_residuals(s)
    if r is not None:
        assert check_residuated(r)


@given(posemigroups)
def test_residuals_exist_iff_bound_sets_have_maxima(s):
    p, m = s.poset, s.mul
    expected = all(p.maximum(b for b in s.elements if p.le(m[a][b], c)) is not None and
                   p.maximum(b for b in s.elements if p.le(m[b][a], c)) is not None
                   for a in s.elements for c in s.elements)
    assert (compute_residuals(s) is not None) == expected


@given(st.sampled_from(sorted(LATTICES)))
def test_recomputation_reproduces_residuals(name):
    L = LATTICES[name]
    again = compute_residuals(L.base)
    assert (again.lres, again.rres) == (L.lres, L.rres)


@given(st.sampled_from(BROUWERIAN_ALL))
def test_enumerated_brouwerian_pass(b):
    assert check_brouwerian(b)


@given(boolean_pointed)
def test_boolean_pointed_lemmas(b):
    assert check_boolean_pointed(b)
    assert check_brouwerian_lemmas(b)
    for a in b.elements:
        assert b.imp[b.neg(a)][a] == a


def test_non_distributive_lattice_fails_distributivity():
    pentagon = Poset.from_relation(5, [(0, 1), (1, 2), (0, 3), (2, 4), (3, 4)])
    meet = pentagon.meet_table
    lattice = Posemigroup(pentagon, meet, 4, meet, pentagon.join_table)
    r = check_brouwerian(BrouwerianAlgebra(lattice, freeze([[4] * 5] * 5)))
    assert r.axiom == "brouwerian.distributivity"
