import pytest
from hypothesis import given, strategies as st

from conftest import endomaps, idempotent_maps, posets
from twistkit.errors import DimensionMismatch, EmptySet, NotIdempotent
from twistkit.order import (EndoMap, Poset, check_operator, check_poset, classify_operator,
                            dualize, fixpoint_image, glb, lub)


def test_singleton_and_chain_are_posets():
    assert check_poset(Poset.chain(1))
    assert check_poset(Poset.chain(2))


def test_antisymmetry_failure_names_the_pair():
    p = Poset(2, ((True, True), (True, True)))
    r = check_poset(p)
    assert not r and r.axiom == "poset.antisymmetry"
    assert r.witness == (0, 1)


def test_transitivity_failure():
    leq = ((True, True, False), (False, True, True), (False, False, True))
    r = check_poset(Poset(3, leq))
    assert r.axiom == "poset.transitivity" and r.witness == (0, 1, 2)


def test_ragged_order_is_a_dimension_error():
    with pytest.raises(DimensionMismatch):
        check_poset(Poset(2, ((True, False), (True,))))


def test_dualize_examples():
    c2 = Poset.chain(2)
    assert dualize(c2).leq == ((True, False), (True, True))
    assert dualize(Poset.antichain(2)) == Poset.antichain(2)
    d3 = dualize(Poset.chain(3))
    assert d3.le(2, 1) and d3.le(1, 0) and not d3.le(0, 2)


def test_glb_examples():
    assert glb(Poset.chain(2), {0, 1}) == 0
    assert glb(Poset.antichain(2), {0, 1}) is None
    diamond = Poset.from_relation(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert glb(diamond, {1, 2}) == 0
    assert lub(diamond, {1, 2}) == 3


def test_glb_of_empty_set_raises():
    with pytest.raises(EmptySet):
        glb(Poset.chain(2), set())


def test_classify_operator_examples():
    c2 = Poset.chain(2)
    assert classify_operator(EndoMap(c2, (0, 1))) == "both"
    assert classify_operator(EndoMap(c2, (1, 1))) == "closure"
    assert classify_operator(EndoMap(c2, (0, 0))) == "interior"
    assert classify_operator(EndoMap(c2, (1, 0))) == "neither"


def test_fixpoint_image_examples():
    c3 = Poset.chain(3)
    assert fixpoint_image(EndoMap(c3, (0, 1, 2)))[0] == (0, 1, 2)
    assert fixpoint_image(EndoMap(Poset.chain(2), (1, 1)))[0] == (1,)
    fixed, sub = fixpoint_image(EndoMap(c3, (0, 2, 2)))
    assert fixed == (0, 2) and sub == Poset.chain(2)


def test_fixpoint_image_rejects_non_idempotent():
    with pytest.raises(NotIdempotent):
        fixpoint_image(EndoMap(Poset.chain(3), (1, 2, 2)))


def test_operator_check_reports_inflationary_failure():
    r = check_operator(EndoMap(Poset.chain(2), (0, 0)), "closure", "op")
    assert not r and r.axiom == "op.inflationary" and r.witness == (1,)


@given(posets)
def test_enumerated_posets_pass(p):
    assert check_poset(p)


@given(posets)
def test_dualize_is_an_involution(p):
    assert dualize(dualize(p)) == p


@given(posets, st.data())
def test_dualize_swaps_glb_and_lub(p, data):
    xs = data.draw(st.sets(st.integers(0, p.size - 1), min_size=1))
    assert glb(p, xs) == lub(dualize(p), xs)
    assert lub(p, xs) == glb(dualize(p), xs)


@given(posets, st.data())
def test_glb_matches_brute_force(p, data):
    xs = data.draw(st.sets(st.integers(0, p.size - 1), min_size=1))
    lower = [z for z in p.elements if all(p.le(z, x) for x in xs)]
    greatest = [z for z in lower if all(p.le(w, z) for w in lower)]
    assert glb(p, xs) == (greatest[0] if greatest else None)


@given(posets)
def test_identity_is_both(p):
    assert classify_operator(EndoMap(p, tuple(p.elements))) == "both"


@given(idempotent_maps())
def test_fixpoints_are_the_image(f):
    fixed, _ = fixpoint_image(f)
    assert fixed == f.image()


@given(endomaps())
def test_classification_agrees_with_operator_checks(f):
    kind = classify_operator(f)
    assert bool(check_operator(f, "interior", "i")) == (kind in ("interior", "both"))
    assert bool(check_operator(f, "closure", "c")) == (kind in ("closure", "both"))
