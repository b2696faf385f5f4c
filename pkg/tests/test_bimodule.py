from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from conftest import BIMODULES, LATTICES, POSEMIGROUPS
from twistkit.algebra import Posemigroup, compute_residuals
from twistkit.bimodule import (LEVELS, ActionResiduals, Bimodule, check_bimodule,
                               check_join_preservation, check_top_bottom_consequences,
                               compute_action_residuals, division_bimodule)
from twistkit.errors import DimensionMismatch, MissingComponent, MissingPoint
from twistkit.order import Poset, freeze


def _residuated_lattices():
    """Corpus lattices plus every enumerated residuated lattice of size <= 3."""
    out = list(LATTICES.values())
    for s in POSEMIGROUPS:
        s = s.with_lattice()
        if s.unit is not None and s.meet is not None and s.join is not None:
            r = compute_residuals(s)
            if r is not None:
                out.append(r)
    return out


RESIDUATED = _residuated_lattices()


@pytest.mark.parametrize("level", LEVELS)
def test_singleton_passes_every_level(level):
    assert check_bimodule(division_bimodule(LATTICES["one"], 0), level)


def test_two_chain_division_bimodule():
    m = division_bimodule(LATTICES["c2"], 0)
    assert check_bimodule(m, "cyclic")
    assert m.residuals.bslres[1][0] == 0
    assert m.module.le(1, 0)  # the module order is dual


def _with_lact(m, i, x, v):
    rows = [list(r) for r in m.lact]
    rows[i][x] = v
    return replace(m, lact=freeze(rows))


def test_corrupted_action_fails_an_action_law():
    m = division_bimodule(LATTICES["c2"], 0)
    r = check_bimodule(_with_lact(m, 1, 1, 0), "biaction")
    assert r.axiom == "bimodule.action.left-assoc" and r.witness == (1, 0, 0)


def test_flipping_one_times_zero_keeps_a_biaction():
    # 1*0 := 1 makes 1 act as the constant top, which is still associative;
    # the stale residuals are what catch it
    m = _with_lact(division_bimodule(LATTICES["c2"], 0), 1, 0, 1)
    assert check_bimodule(m, "bimodule")
    assert check_bimodule(m, "residuated").axiom == "bimodule.residuation.left"


def test_levels_are_cumulative():
    m = replace(division_bimodule(LATTICES["c2"]), residuals=None)
    assert check_bimodule(m, "bimodule")
    with pytest.raises(MissingComponent):
        check_bimodule(m, "residuated")
    with pytest.raises(MissingPoint):
        check_bimodule(division_bimodule(LATTICES["c2"]), "cyclic")
    with pytest.raises(ValueError):
        check_bimodule(m, "bogus")


def test_wrong_shape_is_a_dimension_error():
    m = division_bimodule(LATTICES["c2"], 0)
    with pytest.raises(DimensionMismatch):
        check_bimodule(replace(m, lact=freeze([[0, 1]])), "biaction")


def test_singleton_residuals_are_constant():
    r = compute_action_residuals(division_bimodule(LATTICES["one"], 0))
    assert r == ActionResiduals(((0,),), ((0,),), ((0,),), ((0,),))


def test_antichain_module_has_no_residuals():
    s = Posemigroup(Poset.chain(1), ((0,),), 0)
    m = Bimodule(s, Poset.antichain(2), freeze([[0, 0], [0, 1]]), ((0, 0),), ((0,), (0,)))
    assert compute_action_residuals(m) is None


def test_top_bottom_consequences():
    m = division_bimodule(LATTICES["c2"], 0)
    assert check_top_bottom_consequences(m)
    bot = m.module.bottom
    other = 1 - bot
    lact = [list(r) for r in m.lact]
    lact[0][bot] = other
    r = check_top_bottom_consequences(replace(m, lact=freeze(lact)))
    assert r.axiom == "bimodule.bounds.bottom-zero"


def test_unbounded_module_is_vacuous():
    s = Posemigroup(Poset.chain(1), ((0,),), 0)
    dummy = ActionResiduals(((0, 0),), ((0, 0), (0, 0)), ((0, 0), (0, 0)), ((0,), (0,)))
    m = Bimodule(s, Poset.antichain(2), freeze([[0, 0], [0, 1]]), ((0, 1),), ((0,), (1,)),
                 residuals=dummy)
    r = check_top_bottom_consequences(m)
    assert r and "vacuous" in r.detail


@given(st.sampled_from(RESIDUATED))
def test_division_residuals_match_the_scan(L):
    m = division_bimodule(L)
    assert compute_action_residuals(m) == m.residuals
    assert check_bimodule(m, "unital")


@given(st.sampled_from(RESIDUATED), st.data())
def test_division_cyclic_iff_left_and_right_negations_agree(L, data):
    z = data.draw(st.integers(0, L.size - 1))
    agree = all(L.lres[a][z] == L.rres[z][a] for a in range(L.size))
    m = division_bimodule(L, z)
    assert m.is_cyclic() == agree
    assert bool(check_bimodule(m, "cyclic")) == agree


@given(st.sampled_from(sorted(BIMODULES)))
def test_corpus_bimodules_preserve_all_joins(name):
    m = BIMODULES[name]
    assert check_bimodule(m, "cyclic")
    assert check_join_preservation(m)
    assert check_top_bottom_consequences(m)
