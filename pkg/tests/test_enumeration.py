import pytest

from twistkit.algebra import check_brouwerian, check_posemigroup, check_residuated_lattice
from twistkit.bimodule import check_bimodule
from twistkit.enumeration import (KINDS, canonical_form, check_poset_counts,
                                  commutative_residuated_chains, count_posets_by_search,
                                  enumerate_brouwerian, enumerate_lattices, enumerate_posemigroups,
                                  enumerate_posets, enumerate_structures, labeled_posets, max_size,
                                  random_structure)
from twistkit.errors import BoundExceeded, GenerationExhausted
from twistkit.order import Poset, check_poset


def test_poset_counts():
    # labeled and unlabeled counts are classical
    assert [len(list(labeled_posets(n))) for n in range(1, 5)] == [1, 3, 19, 219]
    assert [len(enumerate_posets(n)) for n in range(1, 5)] == [1, 2, 5, 16]


def test_double_entry_count_agrees():
    assert check_poset_counts(4) == {1: (1, 1), 2: (2, 2), 3: (5, 5), 4: (16, 16)}


def test_five_element_posets():
    assert len(enumerate_posets(5)) == count_posets_by_search(5) == 63


def test_two_element_posets_are_chain_and_antichain():
    forms = {canonical_form(2, (p.leq,)) for p in enumerate_posets(2)}
    assert forms == {canonical_form(2, (Poset.chain(2).leq,)),
                     canonical_form(2, (Poset.antichain(2).leq,))}


def test_canonical_form_ignores_labels():
    a = Poset.from_relation(3, [(0, 1)])
    b = Poset.from_relation(3, [(2, 0)])
    assert canonical_form(3, (a.leq,)) == canonical_form(3, (b.leq,))
    assert canonical_form(3, (a.leq,)) != canonical_form(3, (Poset.chain(3).leq,))


def test_lattice_counts():
    assert [len(enumerate_lattices(n)) for n in range(1, 6)] == [1, 1, 1, 2, 5]
    assert [len(enumerate_lattices(n, distributive=True)) for n in range(1, 6)] == [1, 1, 1, 2, 3]


def test_boolean_pointed_counts():
    assert len(enumerate_brouwerian(2, boolean_pointed=True)) == 2
    counts = [len(enumerate_brouwerian(n, boolean_pointed=True)) for n in range(1, 6)]
    assert counts == [1, 2, 2, 5, 7]


def test_residuated_chain_counts():
    assert [len(commutative_residuated_chains(n)) for n in range(1, 5)] == [1, 1, 3, 11]
    for n in range(1, 4):
        for L in commutative_residuated_chains(n):
            assert check_residuated_lattice(L)


def test_posemigroup_counts():
    assert [len(enumerate_posemigroups(n)) for n in (1, 2)] == [1, 11]
    threes = enumerate_posemigroups(3)
    assert len(threes) == 173
    assert all(check_posemigroup(s) for s in threes)


def test_enumerated_brouwerian_pass():
    for n in range(1, 6):
        for b in enumerate_brouwerian(n):
            assert check_brouwerian(b)


def test_enumerate_structures_dispatch():
    assert [p.size for p in enumerate_structures("poset", 3)] == [1, 2, 2, 3, 3, 3, 3, 3]
    with pytest.raises(ValueError):
        list(enumerate_structures("groupoid", 2))
    assert set(KINDS) >= {"poset", "posemigroup", "boolean-pointed"}


def test_bounds(monkeypatch):
    monkeypatch.delenv("NAGATA_MAX_SIZE", raising=False)
    assert max_size("posemigroup") == 3 and max_size("poset") == 5
    with pytest.raises(BoundExceeded):
        list(enumerate_structures("posemigroup", 4))
    monkeypatch.setenv("NAGATA_MAX_SIZE", "2")
    with pytest.raises(BoundExceeded):
        list(enumerate_structures("poset", 3))


def test_random_is_deterministic():
    assert random_structure("posemigroup", 3, 1) == random_structure("posemigroup", 3, 1)


def test_random_structures_pass_their_checks():
    assert check_poset(random_structure("poset", 5, 11))
    assert check_posemigroup(random_structure("posemigroup", 3, 1))
    assert check_brouwerian(random_structure("brouwerian", 4, 7))
    assert check_bimodule(random_structure("bimodule", (2, 2), 3), "biaction")
    assert check_bimodule(random_structure("bimodule", (3, 4), 0), "biaction")


def test_random_seeds_differ():
    tables = {random_structure("posemigroup", 3, seed).mul for seed in range(10)}
    assert len(tables) > 1


def test_random_gives_up():
    with pytest.raises(GenerationExhausted):
        random_structure("brouwerian", 4, 0, retries=0)
    with pytest.raises(ValueError):
        random_structure("nagata", 2, 0)
