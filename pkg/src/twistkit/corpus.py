"""The fixture corpus: small named structures and deliberately broken ones.

Lattice elements are labeled; points are given by label in fixture names
(``c2-bottom`` is the 2-chain with point ⊥).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

from .algebra import (BrouwerianAlgebra, ResiduatedStructure, brouwerian_from_lattice,
                      check_brouwerian, check_posemigroup, check_residuated_lattice,
                      residuated_lattice)
from .bimodule import Bimodule, check_bimodule, division_bimodule
from .fractions import Bimonoid, check_bimonoid, lattice_bimonoid
from .nagata import (NagataStructure, check_nagata_posemigroup, check_unit_surjectivity,
                     restricted_nagata_product, substructure)
from .order import Poset, check_poset, freeze
from .report import CheckReport
from .twist import TwistablePair, check_twistable_pair, identity_pair, restricted_twist_product


def _chain(n, labels):
    return Poset.chain(n, labels)


def _boolean(k):
    names = "abc"[:k]
    labels = ["".join(names[i] for i in range(k) if m >> i & 1) or "0" for m in range(2 ** k)]
    labels[-1] = "1"
    return Poset.from_leq(2 ** k, lambda i, j: i & j == i, labels)


def residuated_lattices() -> dict[str, ResiduatedStructure]:
    """Commutative residuated lattices of the corpus, keyed by name."""
    one = _chain(1, ["1"])
    c2 = _chain(2, ["0", "1"])
    c3 = _chain(3, ["0", "m", "1"])
    luk = _chain(3, ["0", "h", "1"])
    b4, b8 = _boolean(2), _boolean(3)
    return {
        "one": residuated_lattice(one, [[0]], 0),
        "c2": residuated_lattice(c2, [[min(a, b) for b in range(2)] for a in range(2)], 1),
        "g3": residuated_lattice(c3, [[min(a, b) for b in range(3)] for a in range(3)], 2),
        "luk3": residuated_lattice(luk, [[max(0, a + b - 2) for b in range(3)] for a in range(3)], 2),
        "b4": residuated_lattice(b4, [[a & b for b in range(4)] for a in range(4)], 3),
        "b8": residuated_lattice(b8, [[a & b for b in range(8)] for a in range(8)], 7),
    }


# (lattice, point label) for every pointed fixture
POINTED = {
    "one": ("one", "1"),
    "c2-bottom": ("c2", "0"),
    "c2-top": ("c2", "1"),
    "g3-m": ("g3", "m"),
    "g3-bottom": ("g3", "0"),
    "luk3-bottom": ("luk3", "0"),
    "luk3-top": ("luk3", "1"),
    "b4-bottom": ("b4", "0"),
}

BOOLEAN_POINTED = ("one", "c2-bottom", "c2-top", "g3-m", "b4-bottom", "b8-bottom")


def _point(L: ResiduatedStructure, label: str) -> int:
    return L.poset.labels.index(label)


def pointed_lattices() -> dict[str, tuple[ResiduatedStructure, int]]:
    lats = residuated_lattices()
    out = {name: (lats[l], _point(lats[l], p)) for name, (l, p) in POINTED.items()}
    out["b8-bottom"] = (lats["b8"], 0)
    return out


def bimodules() -> dict[str, Bimodule]:
    """Division bimodules of the pointed lattices; all unital, cyclic and residuated."""
    return {name: division_bimodule(L, z) for name, (L, z) in pointed_lattices().items()
            if name in POINTED}


def brouwerian_algebras() -> dict[str, BrouwerianAlgebra]:
    """The Boolean-pointed Brouwerian algebras of the corpus."""
    out = {}
    for name, (L, z) in pointed_lattices().items():
        if name in BOOLEAN_POINTED:
            out[name] = brouwerian_from_lattice(L.poset, z)
    return out


def collapsing_pair() -> TwistablePair:
    """The Gödel 3-chain over the 2-chain, λ collapsing m and 1."""
    lats = residuated_lattices()
    return TwistablePair(lats["g3"].base, lats["c2"], (0, 1, 1), (0, 2), 0)


def twistable_pairs() -> dict[str, TwistablePair]:
    out = {f"id-{name}": identity_pair(L, z)
           for name, (L, z) in pointed_lattices().items() if name in POINTED}
    out["collapse"] = collapsing_pair()
    return out


def bimonoids() -> dict[str, Bimonoid]:
    lats = residuated_lattices()
    return {f"{name}-lattice": lattice_bimonoid(lats[name].poset) for name in ("c2", "g3", "b4")}


# fixture name prefix -> the check level every such fixture passes
DECLARED_LEVELS = {
    "rl": "residuated-lattice",
    "bimodule": "cyclic",
    "brouwerian": "boolean-pointed",
    "pair": "cyclic",
    "bimonoid": "bimonoid",
    "nagata": "equivalence",
    "twist": "strong-negation",
}


def fixtures() -> dict[str, object]:
    """Every named corpus structure, for lookup from the command line."""
    out: dict[str, object] = {}
    out.update({f"rl-{k}": v for k, v in residuated_lattices().items()})
    out.update({f"bimodule-{k}": v for k, v in bimodules().items()})
    out.update({f"brouwerian-{k}": v for k, v in brouwerian_algebras().items()})
    out.update({f"pair-{k}": v for k, v in twistable_pairs().items()})
    out.update({f"bimonoid-{k}": v for k, v in bimonoids().items()})
    out.update({f"nagata-{k}": restricted_nagata_product(v, require_maps=True)
                for k, v in bimodules().items()})
    out.update({f"twist-{k}": restricted_twist_product(v) for k, v in twistable_pairs().items()})
    return out


def declared_level(name: str) -> str:
    return DECLARED_LEVELS[name.split("-", 1)[0]]


# -- corrupted fixtures -------------------------------------------------------

@dataclass(frozen=True)
class Corruption:
    """A broken structure and the check that must reject it with ``axiom``."""

    name: str
    family: str
    axiom: str
    structure: object
    check: Callable[[object], CheckReport]
    level: str | None = None  # the command-line check level that exposes it


def _set(table, i, j, v):
    rows = [list(r) for r in table]
    rows[i][j] = v
    return freeze(rows)


def unit_surjectivity_counterexample() -> NagataStructure:
    """The restricted product over c2 with point ⊥, minus <0,0>.

    The remaining elements are closed under every operation, but the pair
    <σm, γm> = <0, 0> is admissible and no longer hit, so the unit is not
    onto.
    """
    n = restricted_nagata_product(bimodules()["c2-bottom"], require_maps=True)
    drop = n.index[(0, 0)]
    return substructure(n, [e for e in n.elements if e != drop])


def corruptions() -> list[Corruption]:
    lats = residuated_lattices()
    c2, g3 = lats["c2"], lats["g3"]
    out = []

    leq = _set(Poset.chain(3).leq, 0, 2, False)
    out.append(Corruption("poset-intransitive", "poset", "poset.transitivity",
                          Poset(3, leq, ("0", "m", "1")), check_poset))

    base = g3.base
    out.append(Corruption("posemigroup-nonassociative", "posemigroup", "posemigroup.associativity",
                          replace(base, mul=_set(base.mul, 1, 2, 0)),
                          check_posemigroup))

    bad_lres = _set(c2.lres, 1, 0, 1)
    out.append(Corruption("residuated-wrong-residual", "residuated-lattice", "residuated.residuation",
                          ResiduatedStructure(c2.base, bad_lres, c2.rres), check_residuated_lattice))

    b = brouwerian_from_lattice(g3.poset, 1)
    out.append(Corruption("brouwerian-wrong-implication", "brouwerian", "brouwerian.pseudocomplement",
                          BrouwerianAlgebra(b.lattice, _set(b.imp, 2, 1, 2), 1), check_brouwerian))

    m = division_bimodule(c2, 0)
    out.append(Corruption("bimodule-nonassociative-action", "bimodule", "bimodule.action.left-assoc",
                          replace(m, lact=_set(m.lact, 1, 1, 0), residuals=None),
                          lambda x: check_bimodule(x, "biaction"), "biaction"))

    n = restricted_nagata_product(m, require_maps=True)
    top = n.index[(1, 0)]
    sigma = list(n.sigma.table)
    sigma[top] = n.index[(0, 0)]
    out.append(Corruption("nagata-sigma-not-idempotent", "nagata", "nagata.sigma",
                          replace(n, sigma=replace(n.sigma, table=tuple(sigma))),
                          check_nagata_posemigroup))

    out.append(Corruption("nagata-unit-not-surjective", "nagata", "nagata.unit.surjective",
                          unit_surjectivity_counterexample(), check_unit_surjectivity,
                          "equivalence"))

    t = identity_pair(g3, 1)
    out.append(Corruption("pair-no-retraction", "twistable-pair", "twist.retraction",
                          replace(t, lam=(0, 1, 1), rho=(0, 1, 2)),
                          lambda x: check_twistable_pair(x, "posemigroup")))

    c2p = c2.poset
    out.append(Corruption("bimonoid-linking", "bimonoid", "bimonoid.linking",
                          Bimonoid(c2p, c2p.join_table, 0, c2p.meet_table, 1), check_bimonoid))
    return out


__all__ = [
    "residuated_lattices", "POINTED", "BOOLEAN_POINTED", "pointed_lattices", "bimodules",
    "brouwerian_algebras", "collapsing_pair", "twistable_pairs", "bimonoids", "fixtures",
    "DECLARED_LEVELS", "declared_level",
    "Corruption", "corruptions", "unit_surjectivity_counterexample",
]
