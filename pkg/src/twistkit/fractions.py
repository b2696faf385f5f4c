"""Commutative bimonoids, complements and bimonoids of fractions.

The bimonoid of fractions of a Boolean-pointed Brouwerian algebra B is
built inside the restricted twist product of the identity pair over B:
first the conucleus μ<a,b> = <a, a→b> cuts out the co-fractions, then the
nucleus ν<a,b> = <b→a, b> on that image keeps the fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

from .algebra import (BrouwerianAlgebra, Posemigroup, brouwerian_lemma_checks, check_range,
                      check_shape, check_boolean_pointed, check_isotone_binary,
                      restrict_posemigroup)
from .errors import (AxiomFailure, MissingComponent, MissingPoint, NonUniqueComplement,
                     NotBooleanPointed, NotComplemented)
from .nagata import NagataStructure
from .order import EndoMap, Poset, Table, check_operator, check_poset, is_order_embedding, tabulate
from .report import CheckReport, Sort, failed, first_failure, forall, passed
from .twist import identity_pair, restricted_twist_product


@dataclass(frozen=True)
class Bimonoid:
    """A poset with commutative monoids (mul, one) and (add, zero)."""

    poset: Poset
    mul: Table
    one: int
    add: Table
    zero: int

    @property
    def size(self) -> int:
        return self.poset.size

    def label(self, i: int) -> str:
        return self.poset.label(i)

    @property
    def elements(self) -> range:
        return self.poset.elements


def _validate(b: Bimonoid) -> None:
    n = b.size
    check_shape(b.poset.leq, n, n, "leq")
    for name in ("mul", "add"):
        check_shape(getattr(b, name), n, n, name)
        check_range(getattr(b, name), n, name)
    check_range(((b.one, b.zero),), n, "units")


def _monoid_checks(b: Bimonoid, name: str, op: Table, unit: int):
    s, le = Sort.of(b), b.poset.leq
    yield forall(f"bimonoid.{name}.commutative", [("x", s), ("y", s)],
                 lambda x, y: op[x][y] == op[y][x])
    yield forall(f"bimonoid.{name}.associative", [("x", s), ("y", s), ("z", s)],
                 lambda x, y, z: op[op[x][y]][z] == op[x][op[y][z]])
    yield check_isotone_binary(f"bimonoid.{name}.isotone", s, s, lambda x, y: op[x][y],
                               lambda i, j: le[i][j], lambda i, j: le[i][j],
                               lambda i, j: le[i][j])
    yield forall(f"bimonoid.{name}.unit", [("x", s)], lambda x: op[unit][x] == x)


def check_bimonoid(b: Bimonoid) -> CheckReport:
    _validate(b)
    s, le, mul, add = Sort.of(b), b.poset.leq, b.mul, b.add
    linking = forall("bimonoid.linking", [("x", s), ("y", s), ("z", s)],
                     lambda x, y, z: le[mul[x][add[y][z]]][add[mul[x][y]][z]])
    return first_failure("bimonoid", chain(
        [check_poset(b.poset)],
        _monoid_checks(b, "mul", mul, b.one),
        _monoid_checks(b, "add", add, b.zero),
        [linking],
    ))


def lattice_bimonoid(poset: Poset) -> Bimonoid:
    """A bounded lattice with x·y = x∧y and x+y = x∨y."""
    meet, join = poset.meet_table, poset.join_table
    if meet is None or join is None or poset.top is None or poset.bottom is None:
        raise MissingComponent("lattice bimonoid needs a bounded lattice")
    return Bimonoid(poset, meet, poset.top, join, poset.bottom)


def monoid_bimonoid(s: Posemigroup) -> Bimonoid:
    """A commutative pomonoid with x+y = x·y and 0 = 1."""
    if s.unit is None:
        raise MissingComponent("monoid bimonoid needs a unit")
    return Bimonoid(s.poset, s.mul, s.unit, s.mul, s.unit)


def complement_of(b: Bimonoid, x: int) -> int | None:
    """The y with x·y <= 0 and 1 <= x+y, or None."""
    le = b.poset.leq
    found = [y for y in b.elements if le[b.mul[x][y]][b.zero] and le[b.one][b.add[x][y]]]
    if len(found) > 1:
        raise NonUniqueComplement(
            f"{b.label(x)} has complements {', '.join(b.label(y) for y in found)}")
    return found[0] if found else None


def complements(b: Bimonoid) -> tuple[int, ...]:
    out = []
    for x in b.elements:
        y = complement_of(b, x)
        if y is None:
            raise NotComplemented(f"{b.label(x)} has no complement")
        out.append(y)
    return tuple(out)


def check_term_equivalence(b: Bimonoid) -> CheckReport:
    """The involutive residuated pomonoid of a complemented bimonoid.

    With x→y = x̄ + y, multiplication is residuated by →, x̄ = x→0 and
    x + y = complement of ȳ·x̄.
    """
    comp = complements(b)
    s, le, mul, add = Sort.of(b), b.poset.leq, b.mul, b.add
    imp = tabulate(b.size, b.size, lambda x, y: add[comp[x]][y])
    return first_failure("bimonoid.term", (
        forall("bimonoid.term.residuation", [("x", s), ("y", s), ("z", s)],
               lambda x, y, z: le[mul[x][y]][z] == le[y][imp[x][z]]),
        forall("bimonoid.term.negation", [("x", s)], lambda x: comp[x] == imp[x][b.zero]),
        forall("bimonoid.term.sum", [("x", s), ("y", s)],
               lambda x, y: add[x][y] == comp[mul[comp[y]][comp[x]]]),
        forall("bimonoid.term.involutive", [("x", s)], lambda x: comp[comp[x]] == x),
    ))


def bimonoid_of_brouwerian(b: BrouwerianAlgebra) -> Bimonoid:
    """x·y = x∧y, 1 = ⊤, x+y = (0→(x∧y))∧(x∨y), 0 = the point."""
    if b.point is None:
        raise MissingPoint("the bimonoid of a Brouwerian algebra needs a point")
    n = b.size
    return Bimonoid(b.lattice.poset, b.lattice.meet, b.top,
                    tabulate(n, n, b.plus), b.point)


def _require_boolean_pointed(b: BrouwerianAlgebra) -> None:
    if b.point is None:
        raise MissingPoint("needs a point")
    report = check_boolean_pointed(b)
    if not report:
        raise NotBooleanPointed(report.line())


def brouwerian_lemma_suite(b: BrouwerianAlgebra) -> CheckReport:
    """The arithmetic of a Boolean-pointed Brouwerian algebra.

    Besides the three lemmas this checks ¬¬x = x∨0, that [0, ⊤] is a
    Boolean lattice, and that the induced bimonoid is a bimonoid.
    """
    if b.point is None:
        raise MissingPoint("the lemmas need a point")
    le = b.lattice.poset.leq
    meet, join, z, top = b.lattice.meet, b.lattice.join, b.point, b.top
    interval = Sort.of(b, [x for x in b.elements if le[z][x]])

    def complemented(x):
        return any(meet[x][y] == z and join[x][y] == top for y in interval.elements)

    return first_failure("brouwerian.lemma", chain(
        [check_boolean_pointed(b),
         forall("brouwerian.lemma.interval-boolean", [("x", interval)], complemented)],
        brouwerian_lemma_checks(b),
        [check_bimonoid(bimonoid_of_brouwerian(b))],
    ))


def twist_of(b: BrouwerianAlgebra) -> NagataStructure:
    """The restricted twist product of the identity pair at the point."""
    return restricted_twist_product(identity_pair(b.residuated(), b.point))


def iota_map(b: BrouwerianAlgebra, tw: NagataStructure) -> tuple[int, ...]:
    """a ↦ <a, a→0> as indices into the twist product."""
    return tuple(tw.index[(a, b.imp[a][b.point])] for a in b.elements)


def twist_sum(tw: NagataStructure, x: int, y: int) -> int:
    """x + y = ⊸(⊸y ∘ ⊸x) in the twist product."""
    ng, mul = tw.negation.table, tw.carrier.mul
    return ng[mul[ng[y]][ng[x]]]


def mu_map(tw: NagataStructure, b: BrouwerianAlgebra) -> EndoMap:
    """μ<a,b> = <a, a→b>."""
    _require_boolean_pointed(b)
    imp = b.imp
    return EndoMap(tw.poset, tuple(tw.index[(a, imp[a][x])] for a, x in tw.pairs))


def mu_image(tw: NagataStructure, mu: EndoMap) -> tuple[tuple[int, ...], Posemigroup]:
    """The fixpoints of μ with the twist product restricted to them."""
    image = mu.image()
    sub = restrict_posemigroup(tw.carrier, image)
    if sub is None:
        raise AxiomFailure(failed("fractions.mu.closed", (), detail="μ-image is not closed"))
    return image, sub


def check_mu(tw: NagataStructure, b: BrouwerianAlgebra, mu: EndoMap) -> CheckReport:
    """μ is a product-preserving conucleus whose image is the co-fractions."""
    s, mul, ng, imp = Sort.of(tw), tw.carrier.mul, tw.negation.table, b.imp
    pairs = tw.pairs
    iota = iota_map(b, tw)
    cofractions = {mul[iota[x]][ng[iota[y]]] for x in b.elements for y in b.elements}
    return first_failure("fractions.mu", (
        check_operator(mu, "interior", "fractions.mu"),
        forall("fractions.mu.mul", [("x", s), ("y", s)],
               lambda x, y: mu(mul[x][y]) == mul[mu(x)][mu(y)]),
        forall("fractions.mu.image", [("m", s)],
               lambda m: (mu(m) == m) == (pairs[m][1] == imp[pairs[m][0]][pairs[m][1]])),
        forall("fractions.cofraction.form", [("m", s)],
               lambda m: (m == mul[iota[pairs[m][0]]][ng[iota[pairs[m][1]]]])
               == (pairs[m][1] == imp[pairs[m][0]][pairs[m][1]])),
        forall("fractions.cofraction.image", [("m", s)],
               lambda m: (m in cofractions) == (mu(m) == m)),
    ))


def nu_map(tw: NagataStructure, b: BrouwerianAlgebra, image: tuple[int, ...]) -> EndoMap:
    """ν<a,b> = <b→a, b> on the μ-image, in the image's own indexing."""
    imp = b.imp
    where = {e: i for i, e in enumerate(image)}
    table = []
    for e in image:
        a, x = tw.pairs[e]
        target = tw.index.get((imp[x][a], x))
        if target not in where:
            raise AxiomFailure(failed("fractions.nu.closed", (e,), ("m",), (tw.label(e),)))
        table.append(where[target])
    return EndoMap(tw.poset.restrict(list(image)), tuple(table))


def check_nu(tw: NagataStructure, b: BrouwerianAlgebra, image: tuple[int, ...],
             sub: Posemigroup, nu: EndoMap) -> CheckReport:
    """ν is a nucleus on the μ-image whose fixpoints are the fractions."""
    s, le, mul, imp = Sort.of(sub), sub.poset.leq, sub.mul, b.imp
    pairs = [tw.pairs[e] for e in image]
    iota = iota_map(b, tw)
    ng = tw.negation.table
    fractions = {twist_sum(tw, iota[x], ng[iota[y]]) for x in b.elements for y in b.elements}
    t = Sort.of(tw)
    return first_failure("fractions.nu", (
        check_operator(nu, "closure", "fractions.nu"),
        forall("fractions.nu.nucleus", [("x", s), ("y", s)],
               lambda x, y: le[mul[nu(x)][nu(y)]][nu(mul[x][y])]),
        forall("fractions.nu.image", [("m", s)],
               lambda m: (nu(m) == m) == (pairs[m][0] == imp[pairs[m][1]][pairs[m][0]])),
        forall("fractions.fraction.form", [("m", t)],
               lambda m: (m == twist_sum(tw, iota[tw.pairs[m][0]], ng[iota[tw.pairs[m][1]]]))
               == (tw.pairs[m][0] == imp[tw.pairs[m][1]][tw.pairs[m][0]])),
        forall("fractions.fraction.image", [("m", t)],
               lambda m: (m in fractions)
               == (tw.pairs[m][0] == imp[tw.pairs[m][1]][tw.pairs[m][0]])),
    ))


@dataclass(frozen=True)
class Fractions:
    """The bimonoid of fractions with its provenance inside the twist product."""

    source: BrouwerianAlgebra
    twist: NagataStructure
    mu: EndoMap
    mu_elements: tuple[int, ...]
    mu_algebra: Posemigroup
    nu: EndoMap
    elements: tuple[int, ...]  # twist indices
    bimonoid: Bimonoid
    complement: tuple[int, ...]
    iota: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.bimonoid.size

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.twist.pairs[e] for e in self.elements)


def fractions_algebra(b: BrouwerianAlgebra, verify: bool = True) -> Fractions:
    """((B⋈0)_μ)_ν with ι(a) = <a, a→0>; AxiomFailure if a check fails."""
    _require_boolean_pointed(b)
    tw = twist_of(b)
    mu = mu_map(tw, b)
    image, sub = mu_image(tw, mu)
    nu = nu_map(tw, b, image)
    if verify:
        for report in (check_mu(tw, b, mu), check_nu(tw, b, image, sub, nu)):
            if not report:
                raise AxiomFailure(report)
    keep = nu.fixpoints()
    elements = tuple(image[i] for i in keep)
    where = {e: i for i, e in enumerate(elements)}
    to_nu = {image[i]: image[nu(i)] for i in range(len(image))}
    n = len(elements)
    tmul = tw.carrier.mul
    mul = tabulate(n, n, lambda i, j: where[to_nu[tmul[elements[i]][elements[j]]]])
    ng = tw.negation.table
    missing = [e for e in elements if ng[e] not in where]
    if missing:
        raise AxiomFailure(failed("fractions.complement.closed", (missing[0],), ("m",),
                                  (tw.label(missing[0]),)))
    comp = tuple(where[ng[e]] for e in elements)
    add = tabulate(n, n, lambda i, j: comp[mul[comp[j]][comp[i]]])
    top, z = b.top, b.point
    one = where[tw.index[(top, b.imp[top][z])]]
    zero = where[tw.index[(z, top)]]
    poset = tw.poset.restrict(list(elements))
    bm = Bimonoid(poset, mul, one, add, zero)
    iota = tuple(where[e] for e in iota_map(b, tw))
    out = Fractions(b, tw, mu, image, sub, nu, elements, bm, comp, iota)
    if verify:
        report = check_fractions(out)
        if not report:
            raise AxiomFailure(report)
    return out


def _residual_into(f: Fractions, target: int, left: bool) -> tuple[int | None, ...]:
    bm, le = f.bimonoid, f.bimonoid.poset.leq
    out = []
    for x in bm.elements:
        ys = [y for y in bm.elements
              if le[bm.mul[x][y] if left else bm.mul[y][x]][target]]
        out.append(bm.poset.maximum(ys))
    return tuple(out)


def _constant(axiom: str, got: int, want: int, bm: Bimonoid) -> CheckReport:
    if got == want:
        return passed(axiom)
    return failed(axiom, (got,), ("image",), (bm.label(got),), detail=f"expected {bm.label(want)}")


def check_fractions(f: Fractions) -> CheckReport:
    """Every property of a bimonoid of fractions we can check on a finite instance."""
    b, bm, iota, comp = f.source, f.bimonoid, f.iota, f.complement
    s, sb = Sort.of(bm), Sort.of(b)
    mul, add = bm.mul, bm.add
    cofractions = {mul[iota[x]][comp[iota[y]]] for x in b.elements for y in b.elements}
    fractions = {add[iota[x]][comp[iota[y]]] for x in b.elements for y in b.elements}
    local_pairs = f.pairs
    left_dual = _residual_into(f, bm.zero, True)
    right_dual = _residual_into(f, bm.zero, False)

    def checks():
        yield check_bimonoid(bm)
        yield forall("fractions.complement.oracle", [("m", s)],
                     lambda m: complement_of(bm, m) == comp[m])
        yield forall("fractions.complement.swap", [("m", s)],
                     lambda m: local_pairs[comp[m]] == local_pairs[m][::-1])
        yield forall("fractions.complement.involutive", [("m", s)],
                     lambda m: comp[comp[m]] == m)
        yield check_term_equivalence(bm)
        yield forall("fractions.dualizing", [("m", s)],
                     lambda m: left_dual[m] == comp[m] == right_dual[m])
        yield is_order_embedding(b.lattice.poset, bm.poset, iota)
        yield forall("fractions.iota.mul", [("a", sb), ("b", sb)],
                     lambda x, y: iota[b.lattice.meet[x][y]] == mul[iota[x]][iota[y]])
        yield forall("fractions.iota.add", [("a", sb), ("b", sb)],
                     lambda x, y: iota[b.plus(x, y)] == add[iota[x]][iota[y]])
        yield forall("fractions.iota.add-complement", [("a", sb), ("b", sb)],
                     lambda x, y: comp[iota[b.plus(x, y)]] == mul[comp[iota[x]]][comp[iota[y]]])
        yield _constant("fractions.iota.one", iota[b.top], bm.one, bm)
        yield _constant("fractions.iota.zero", iota[b.point], bm.zero, bm)
        yield forall("fractions.cofraction", [("m", s)], lambda m: m in cofractions)
        yield forall("fractions.cofraction.canonical", [("m", s)],
                     lambda m: mul[iota[local_pairs[m][0]]][comp[iota[local_pairs[m][1]]]] == m)
        yield forall("fractions.fraction", [("m", s)], lambda m: m in fractions)

    return first_failure("fractions", checks())


__all__ = [
    "Bimonoid", "check_bimonoid", "lattice_bimonoid", "monoid_bimonoid", "complement_of",
    "complements", "check_term_equivalence", "bimonoid_of_brouwerian", "brouwerian_lemma_suite",
    "twist_of", "iota_map", "twist_sum", "mu_map", "mu_image", "check_mu", "nu_map", "check_nu",
    "Fractions", "fractions_algebra", "check_fractions",
]
