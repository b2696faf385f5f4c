import pytest
from hypothesis import given, strategies as st

from conftest import POSEMIGROUPS, posemigroups
from twistkit.algebra import Posemigroup
from twistkit.errors import BoundExceeded
from twistkit.iso import MAX_SEARCH, check_iso, find_iso, posemigroup_algebra
from twistkit.order import Poset, freeze


def permuted(s: Posemigroup, perm) -> Posemigroup:
    """The copy of s in which element i is renamed perm[i]."""
    n = s.size
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    leq = freeze([[s.poset.leq[inv[i]][inv[j]] for j in range(n)] for i in range(n)])
    mul = freeze([[perm[s.mul[inv[i]][inv[j]]] for j in range(n)] for i in range(n)])
    return Posemigroup(Poset(n, leq), mul)


@given(posemigroups, st.randoms(use_true_random=False))
def test_renamed_copy_is_found_and_verified(s, rnd):
    perm = list(range(s.size))
    rnd.shuffle(perm)
    t = permuted(s, perm)
    src, dst = posemigroup_algebra(s), posemigroup_algebra(t)
    assert check_iso(src, dst, (perm,))
    found = find_iso(src, dst)
    assert found is not None and check_iso(src, dst, found)


def test_chain_and_antichain_are_not_isomorphic():
    zero = freeze([[0, 0], [0, 0]])
    chain = posemigroup_algebra(Posemigroup(Poset.chain(2), zero))
    anti = posemigroup_algebra(Posemigroup(Poset.antichain(2), zero))
    assert find_iso(chain, anti) is None
    r = check_iso(chain, anti, ((0, 1),))
    assert not r and r.axiom == "iso.leq"


def test_non_bijection_is_rejected():
    a = posemigroup_algebra(POSEMIGROUPS[5])
    n = POSEMIGROUPS[5].size
    assert check_iso(a, a, ((0,) * n,)).axiom == "iso.bijective"


def test_enumerated_classes_are_pairwise_non_isomorphic():
    twos = [posemigroup_algebra(s) for s in POSEMIGROUPS if s.size == 2]
    for i, a in enumerate(twos):
        for b in twos[i + 1:]:
            assert find_iso(a, b) is None


def test_search_is_bounded():
    big = Posemigroup(Poset.chain(MAX_SEARCH + 1), freeze([[0] * (MAX_SEARCH + 1)] * (MAX_SEARCH + 1)))
    a = posemigroup_algebra(big)
    with pytest.raises(BoundExceeded):
        find_iso(a, a)
