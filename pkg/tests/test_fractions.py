import pytest
from hypothesis import given

from conftest import BROUWERIAN, LATTICES, boolean_pointed
from twistkit.algebra import Posemigroup, brouwerian_from_lattice
from twistkit.corpus import bimonoids
from twistkit.errors import MissingPoint, NonUniqueComplement, NotBooleanPointed, NotComplemented
from twistkit.fractions import (Bimonoid, bimonoid_of_brouwerian, brouwerian_lemma_suite,
                                check_bimonoid, check_fractions, check_mu, check_nu,
                                check_term_equivalence, complement_of, complements,
                                fractions_algebra, lattice_bimonoid, monoid_bimonoid,
                                mu_image, mu_map, nu_map, twist_of)
from twistkit.order import Poset, freeze


def _cyclic_group(n):
    add = freeze([[(i + j) % n for j in range(n)] for i in range(n)])
    return monoid_bimonoid(Posemigroup(Poset.antichain(n), add, 0))


def test_lattice_bimonoids_pass():
    for b in bimonoids().values():
        assert check_bimonoid(b)


def test_monoid_as_bimonoid_passes():
    assert check_bimonoid(monoid_bimonoid(LATTICES["luk3"].base))
    assert check_bimonoid(_cyclic_group(3))


def test_swapped_lattice_bimonoid_fails_linking():
    c2 = Poset.chain(2)
    r = check_bimonoid(Bimonoid(c2, c2.join_table, 0, c2.meet_table, 1))
    assert r.axiom == "bimonoid.linking" and r.witness == (1, 0, 0)


def test_complement_examples():
    assert complement_of(lattice_bimonoid(Poset.chain(2)), 0) == 1
    assert complement_of(lattice_bimonoid(Poset.chain(3)), 1) is None
    z3 = _cyclic_group(3)
    assert [complement_of(z3, x) for x in range(3)] == [0, 2, 1]


def test_missing_complement_raises():
    with pytest.raises(NotComplemented):
        complements(lattice_bimonoid(Poset.chain(3)))


def test_non_unique_complement_raises():
    # everything is a complement of everything when both units sit at the ends
    c2 = Poset.chain(2)
    zero = freeze([[0, 0], [0, 0]])
    one = freeze([[1, 1], [1, 1]])
    with pytest.raises(NonUniqueComplement):
        complement_of(Bimonoid(c2, zero, 0, one, 1), 0)


def test_term_equivalence_examples():
    assert check_term_equivalence(lattice_bimonoid(Poset.chain(2)))
    assert check_term_equivalence(bimonoids()["b4-lattice"])
    assert check_term_equivalence(_cyclic_group(3))


def test_bimonoid_of_brouwerian_sums():
    c2 = Poset.chain(2)
    top = bimonoid_of_brouwerian(brouwerian_from_lattice(c2, 1))
    assert top.add == c2.meet_table
    bottom = bimonoid_of_brouwerian(brouwerian_from_lattice(c2, 0))
    assert bottom.add == c2.join_table
    g3 = bimonoid_of_brouwerian(brouwerian_from_lattice(Poset.chain(3), 1))
    assert g3.add[1][2] == 2


def test_bimonoid_of_brouwerian_needs_a_point():
    with pytest.raises(MissingPoint):
        bimonoid_of_brouwerian(brouwerian_from_lattice(Poset.chain(2)))


def test_lemma_suite_examples():
    for point in (0, 1):
        assert brouwerian_lemma_suite(brouwerian_from_lattice(Poset.chain(2), point))
    assert brouwerian_lemma_suite(brouwerian_from_lattice(Poset.chain(3), 1))
    assert brouwerian_lemma_suite(BROUWERIAN["b4-bottom"])
    r = brouwerian_lemma_suite(brouwerian_from_lattice(Poset.chain(3), 0))
    assert r.axiom == "brouwerian.boolean-pointed"


def test_mu_on_the_two_chain():
    b = brouwerian_from_lattice(Poset.chain(2), 0)
    tw = twist_of(b)
    mu = mu_map(tw, b)
    assert tw.pairs[mu(tw.index[(0, 0)])] == (0, 1)
    image, _ = mu_image(tw, mu)
    assert sorted(tw.pairs[e] for e in image) == [(0, 1), (1, 0)]


def test_nu_fixes_the_two_chain_image():
    b = brouwerian_from_lattice(Poset.chain(2), 0)
    tw = twist_of(b)
    image, sub = mu_image(tw, mu_map(tw, b))
    nu = nu_map(tw, b, image)
    assert nu.is_identity()
    assert check_nu(tw, b, image, sub, nu)


def test_two_chain_fractions():
    f = fractions_algebra(brouwerian_from_lattice(Poset.chain(2), 0))
    assert f.size == 2
    assert f.pairs[f.iota[0]] == (0, 1) and f.pairs[f.iota[1]] == (1, 0)
    assert sorted(f.iota) == [0, 1]
    assert check_term_equivalence(f.bimonoid)


def test_two_chain_with_top_point():
    b = brouwerian_from_lattice(Poset.chain(2), 1)
    assert twist_of(b).size == 4
    f = fractions_algebra(b)
    assert f.size == 3 and check_fractions(f)


def test_singleton_fractions():
    f = fractions_algebra(brouwerian_from_lattice(Poset.chain(1), 0))
    assert f.size == 1


def test_sizes_of_corpus_fractions():
    sizes = {name: fractions_algebra(b).size for name, b in BROUWERIAN.items()}
    assert sizes == {"one": 1, "c2-bottom": 2, "c2-top": 3, "g3-m": 4, "b4-bottom": 4,
                     "b8-bottom": 8}


def test_not_boolean_pointed_is_rejected():
    with pytest.raises(NotBooleanPointed):
        fractions_algebra(brouwerian_from_lattice(Poset.chain(3), 0))


@given(boolean_pointed)
def test_lemma_suite_on_enumerated_algebras(b):
    assert brouwerian_lemma_suite(b)


@given(boolean_pointed)
def test_fractions_pipeline(b):
    f = fractions_algebra(b, verify=False)
    assert check_mu(f.twist, b, f.mu)
    assert check_nu(f.twist, b, f.mu_elements, f.mu_algebra, f.nu)
    assert check_fractions(f)
    assert check_bimonoid(f.bimonoid)
    assert check_term_equivalence(f.bimonoid)


@given(boolean_pointed)
def test_mu_is_idempotent_and_deflationary(b):
    tw = twist_of(b)
    mu = mu_map(tw, b)
    assert mu.is_idempotent() and mu.is_isotone()
    assert all(tw.poset.le(mu(x), x) for x in tw.elements)


@given(boolean_pointed)
def test_nu_stays_in_the_restricted_universe(b):
    # (b→a)∧b = a∧b <= 0
    meet, z = b.lattice.meet, b.point
    for a in b.elements:
        for c in b.elements:
            if b.lattice.poset.le(meet[a][c], z):
                assert b.lattice.poset.le(meet[b.imp[c][a]][c], z)


@given(boolean_pointed)
def test_complement_search_agrees_with_negation(b):
    f = fractions_algebra(b, verify=False)
    assert complements(f.bimonoid) == f.complement


@given(boolean_pointed)
def test_iota_preserves_the_operations(b):
    f = fractions_algebra(b, verify=False)
    bm, i = f.bimonoid, f.iota
    meet = b.lattice.meet
    for x in b.elements:
        for y in b.elements:
            assert i[meet[x][y]] == bm.mul[i[x]][i[y]]
            assert i[b.plus(x, y)] == bm.add[i[x]][i[y]]
    assert i[b.top] == bm.one and i[b.point] == bm.zero
