from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from conftest import BIMODULES, LATTICES
from twistkit.algebra import check_posemigroup, check_residuated_lattice
from twistkit.bimodule import division_bimodule
from twistkit.errors import MissingComponent, NotCyclic, NotPositive
from twistkit.iso import check_bimodule_iso
from twistkit.nagata import (check_action_recovery, check_bilattice_sesquilattice, check_counit,
                             check_decomposition, check_embeddings, check_nagata_lattice,
                             check_nagata_posemigroup, check_triangles, check_unit_map,
                             check_unit_surjectivity, displayed_sigma_residual_equations,
                             double_division_image, embed_module, embed_scalar, nagata_product,
                             nagata_structure, quasi_inequality, restricted_nagata_product,
                             restricted_universe, structural_bimodule, unit_map)
from twistkit.order import EndoMap
from twistkit.report import Sort, first_failure, forall

names = st.sampled_from(sorted(BIMODULES))


def _c2():
    return division_bimodule(LATTICES["c2"], 0)


def test_singleton_product():
    n = nagata_product(division_bimodule(LATTICES["one"], 0))
    assert n.size == 1 and check_posemigroup(n.carrier)


def test_two_chain_product_table():
    m = _c2()
    n = nagata_product(m)
    top_zero = n.index[(1, 0)]
    assert n.carrier.mul[top_zero][top_zero] == top_zero
    assert n.size == 4 and check_posemigroup(n.carrier)


def test_two_chain_restricted_universe():
    m = _c2()
    assert restricted_universe(m) == [(0, 0), (0, 1), (1, 0)]
    n = restricted_nagata_product(m)
    assert n.carrier.unit == n.index[(1, 0)]
    unit = n.carrier.unit
    assert all(n.carrier.mul[x][unit] == x == n.carrier.mul[unit][x] for x in n.elements)


def test_point_at_module_bottom_restricts_nothing():
    # the top of the lattice is the bottom of the dual module
    m = division_bimodule(LATTICES["g3"], 2)
    assert len(restricted_universe(m)) == 9


def test_residuals_on_demand_need_a_residuated_biaction():
    m = replace(_c2(), residuals=None)
    with pytest.raises(MissingComponent):
        nagata_product(m, residuals=True)
    with pytest.raises(MissingComponent):
        restricted_nagata_product(m, require_maps=True)


def test_double_division_examples():
    n = restricted_nagata_product(_c2()).residuated()
    assert double_division_image(n, n.base.unit) == tuple(n.base.elements)
    full = nagata_product(_c2(), residuals=True)
    image = double_division_image(full.residuated(), full.index[(1, 0)])
    assert {full.pairs[e] for e in image} == {(0, 0), (0, 1), (1, 0)}


def test_double_division_needs_a_positive_element():
    full = nagata_product(_c2(), residuals=True).residuated()
    with pytest.raises(NotPositive):
        double_division_image(full, 0)


def test_embeddings_on_the_two_chain():
    m = _c2()
    assert embed_scalar(m, 1) == (1, 0)
    assert embed_module(m, 1) == (0, 1)
    with pytest.raises(NotCyclic):
        embed_scalar(replace(m, point=None), 0)


def test_two_chain_unit_is_a_bijection():
    n = restricted_nagata_product(_c2(), require_maps=True)
    u = unit_map(n)
    assert sorted(u.table) == list(u.target.elements)
    assert check_unit_surjectivity(n)


def test_triangle_on_objects():
    m = division_bimodule(LATTICES["g3"], 1)
    assert check_triangles(m)


def test_structural_bimodule_recovers_the_input():
    m = _c2()
    n = restricted_nagata_product(m, require_maps=True)
    b = structural_bimodule(n)
    es = [n.sigma_image.index(n.index[embed_scalar(m, a)]) for a in m.scalars.elements]
    em = [n.gamma_image.index(n.index[embed_module(m, x)]) for x in m.module.elements]
    # <ε_S, ε_M> read backwards goes from the structural bimodule to m
    inv_s = [es.index(i) for i in range(len(es))]
    inv_m = [em.index(i) for i in range(len(em))]
    assert check_bimodule_iso(b, m, inv_s, inv_m)


def test_identity_maps_give_the_regular_bimodule():
    L = LATTICES["g3"]
    ident = tuple(L.base.elements)
    n = nagata_structure(L.base, ident, ident, 0)
    b = structural_bimodule(n, verify=False)
    assert b.lact == L.mul and b.ract == L.mul


def test_point_equation_failure_with_identity_gamma():
    n = restricted_nagata_product(division_bimodule(LATTICES["g3"], 1), require_maps=True)
    broken = nagata_structure(n.carrier, n.sigma.table, tuple(n.elements), n.point,
                              restricted=True)
    r = check_nagata_posemigroup(broken)
    assert not r


def test_deleting_a_pair_breaks_surjectivity():
    from twistkit.corpus import unit_surjectivity_counterexample

    n = unit_surjectivity_counterexample()
    assert check_nagata_posemigroup(n) and check_nagata_lattice(n)
    r = check_unit_surjectivity(n)
    # <0,0> = <0,1> ⊕ <1,0> is admissible but no longer hit
    assert r.axiom == "nagata.unit.surjective" and r.labels == ("<0,1>", "<1,0>")


def test_full_product_bilattice():
    m = division_bimodule(LATTICES["g3"], 1)
    n = nagata_product(m, require_maps=True)
    assert check_bilattice_sesquilattice(n, "bilattice")
    with pytest.raises(ValueError):
        check_bilattice_sesquilattice(n, "trilattice")


def test_displayed_residual_equations_fail_on_full_products():
    # 0*a need not lie below x outside the restricted universe
    n = nagata_product(_c2(), require_maps=True)
    assert check_nagata_posemigroup(n)
    r = first_failure("displayed", displayed_sigma_residual_equations(n))
    assert r.axiom == "nagata.displayed.sigma-lres" and r.labels == ("<1,1>", "<0,1>")


def test_gamma_of_a_product_needs_the_outer_closure():
    # γ(xy) = σx·γy ∨ γx·σy fails until the right side is closed under γ
    n = nagata_product(division_bimodule(LATTICES["c2"], 1), require_maps=True)
    N = Sort.of(n)
    s, g, mul, join = n.sigma.table, n.gamma.table, n.carrier.mul, n.carrier.join
    raw = forall("raw", [("x", N), ("y", N)],
                 lambda x, y: g[mul[x][y]] == join[mul[s[x]][g[y]]][mul[g[x]][s[y]]])
    assert not raw
    assert check_nagata_lattice(n)


def test_decomposition_only_in_the_restricted_case():
    m = _c2()
    assert not check_decomposition(nagata_product(m, require_maps=True))
    assert check_decomposition(restricted_nagata_product(m, require_maps=True))


@given(names)
def test_full_products_are_nagata_lattices(name):
    n = nagata_product(BIMODULES[name], require_maps=True)
    assert check_nagata_posemigroup(n)
    assert check_nagata_lattice(n)


@given(names)
def test_restricted_products(name):
    m = BIMODULES[name]
    n = restricted_nagata_product(m, require_maps=True)
    assert check_residuated_lattice(n.residuated())
    assert check_nagata_posemigroup(n)
    assert check_nagata_lattice(n)
    assert first_failure("displayed", displayed_sigma_residual_equations(n))


@given(names)
def test_quasi_inequality_follows_from_the_lattice_axioms(name):
    n = restricted_nagata_product(BIMODULES[name], require_maps=True)
    if check_nagata_lattice(n):
        assert quasi_inequality(n)


@given(names)
def test_recovery_and_adjunction(name):
    m = BIMODULES[name]
    n = restricted_nagata_product(m, require_maps=True)
    assert check_embeddings(m, n)
    assert check_action_recovery(m, n)
    assert check_counit(m)
    assert check_unit_map(n)
    assert check_triangles(m)


@given(names)
def test_equivalence(name):
    n = restricted_nagata_product(BIMODULES[name], require_maps=True)
    assert check_bilattice_sesquilattice(n, "sesquilattice")
    assert check_decomposition(n)
    assert check_unit_surjectivity(n)


@given(names)
def test_sigma_and_gamma_fix_the_embeddings(name):
    m = BIMODULES[name]
    n = restricted_nagata_product(m, require_maps=True)
    for a in m.scalars.elements:
        e = n.index[embed_scalar(m, a)]
        assert n.sigma(e) == e
    for x in m.module.elements:
        e = n.index[embed_module(m, x)]
        assert n.gamma(e) == e


@given(names)
def test_scalar_embedding_is_multiplicative(name):
    m = BIMODULES[name]
    n = restricted_nagata_product(m, require_maps=True)
    mul = m.scalars.mul
    for a in m.scalars.elements:
        for b in m.scalars.elements:
            lhs = n.index[embed_scalar(m, mul[a][b])]
            assert lhs == n.carrier.mul[n.index[embed_scalar(m, a)]][n.index[embed_scalar(m, b)]]


def test_singleton_structural_bimodule_and_unit():
    m = division_bimodule(LATTICES["one"], 0)
    n = restricted_nagata_product(m, require_maps=True)
    b = structural_bimodule(n)
    assert b.scalars.size == 1 and b.module.size == 1
    assert unit_map(n).table == (0,)
    assert check_unit_surjectivity(n)
    assert check_nagata_posemigroup(n) and check_nagata_lattice(n)


def test_sigma_corruption_is_caught():
    n = restricted_nagata_product(_c2(), require_maps=True)
    sigma = list(n.sigma.table)
    sigma[n.index[(1, 0)]] = n.index[(0, 0)]
    r = check_nagata_posemigroup(replace(n, sigma=EndoMap(n.poset, tuple(sigma))))
    assert not r and r.axiom.startswith("nagata")
