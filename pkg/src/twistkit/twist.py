"""Twistable pairs, twist products with strong negation, and untwisting.

A twistable pair links a posemigroup S+ and a residuated meet semilattice
S- by an adjunction λ ⊣ ρ with λ∘ρ = id.  Its induced bimodule lets S+ act
on the order dual of S- by division through λ, and the twist product is
the Nagata product of that bimodule together with ⊸<a,x> = <ρx, λa>.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import chain

from .algebra import (Posemigroup, ResiduatedStructure, check_range, compute_residuals,
                      posemigroup_checks, residuation_checks, restrict_posemigroup, unit_of)
from .bimodule import ActionResiduals, Bimodule
from .errors import AxiomFailure, DimensionMismatch, MissingComponent, MissingPoint
from .iso import check_iso, find_iso, pair_algebra
from .nagata import (NagataStructure, check_nagata_posemigroup, nagata_product,
                     restricted_nagata_product)
from .order import EndoMap, check_poset, tabulate
from .report import CheckReport, Sort, failed, first_failure, forall, passed

LEVELS = ("posemigroup", "residuated-lattice", "cyclic")


@dataclass(frozen=True)
class TwistablePair:
    plus: Posemigroup
    minus: ResiduatedStructure
    lam: tuple[int, ...]
    rho: tuple[int, ...]
    point: int | None = None

    @property
    def P(self) -> Sort:
        return Sort.of(self.plus)

    @property
    def Q(self) -> Sort:
        return Sort.of(self.minus)


def identity_pair(L: ResiduatedStructure, point: int | None = None) -> TwistablePair:
    """λ = ρ = id on a residuated lattice."""
    ident = tuple(range(L.size))
    return TwistablePair(L.base, L, ident, ident, point)


def _validate(t: TwistablePair) -> None:
    if len(t.lam) != t.plus.size or len(t.rho) != t.minus.size:
        raise DimensionMismatch("lam/rho lengths differ from the sort sizes")
    check_range((t.lam,), t.minus.size, "lam")
    check_range((t.rho,), t.plus.size, "rho")
    if t.point is not None and not 0 <= t.point < t.minus.size:
        raise DimensionMismatch("point out of range")


def _pair_checks(t: TwistablePair):
    P, Q = t.P, t.Q
    lam, rho = t.lam, t.rho
    lp, lm = t.plus.poset.leq, t.minus.poset.leq
    mp, mm = t.plus.mul, t.minus.mul
    yield check_poset(t.plus.poset)
    yield from posemigroup_checks(t.plus, "twist.plus")
    yield check_poset(t.minus.poset)
    yield from posemigroup_checks(t.minus.base, "twist.minus")
    yield from residuation_checks(t.minus, "twist.minus")
    yield forall("twist.lam.isotone", [("a", P), ("b", P)],
                 lambda a, b: not lp[a][b] or lm[lam[a]][lam[b]])
    yield forall("twist.lam.mul", [("a", P), ("b", P)],
                 lambda a, b: lam[mp[a][b]] == mm[lam[a]][lam[b]])
    yield forall("twist.rho.isotone", [("x", Q), ("y", Q)],
                 lambda x, y: not lm[x][y] or lp[rho[x]][rho[y]])
    yield forall("twist.rho.mul", [("x", Q), ("y", Q)],
                 lambda x, y: rho[mm[x][y]] == mp[rho[x]][rho[y]])
    yield forall("twist.retraction", [("x", Q)], lambda x: lam[rho[x]] == x)
    yield forall("twist.adjunction", [("a", P), ("x", Q)],
                 lambda a, x: lm[lam[a]][x] == lp[a][rho[x]])


def _lattice_checks(t: TwistablePair):
    for name, s in (("plus", t.plus), ("minus", t.minus.base)):
        for part in ("meet", "join", "unit"):
            if getattr(s, part) is None:
                raise MissingComponent(f"residuated-lattice level needs the {part} of S{name}")
    if compute_residuals(t.plus) is None:
        yield failed("twist.plus.residuated", (), detail="S+ is not residuated")
    u_plus, u_minus = t.plus.unit, t.minus.base.unit
    yield forall("twist.rho.unit", [("1", Sort((u_minus,), t.minus.label))],
                 lambda u: t.rho[u] == u_plus)


def _cyclic_checks(t: TwistablePair):
    if t.point is None:
        raise MissingPoint("cyclic level needs a point")
    z, lres, rres = t.point, t.minus.lres, t.minus.rres
    yield forall("twist.cyclic", [("a", t.P)],
                 lambda a: lres[t.lam[a]][z] == rres[z][t.lam[a]])


def check_twistable_pair(t: TwistablePair, level: str = "posemigroup") -> CheckReport:
    if level not in LEVELS:
        raise ValueError(f"unknown twistable-pair level {level!r}")
    _validate(t)
    if t.minus.base.meet is None:
        raise MissingComponent("S- must be a meet semilattice")
    stages = [_pair_checks(t)]
    if level == "residuated-lattice":
        stages.append(_lattice_checks(t))
    if level == "cyclic":
        stages.append(_cyclic_checks(t))
    return first_failure(f"twist.pair.{level}", chain.from_iterable(stages))


def induced_bimodule(t: TwistablePair) -> Bimodule:
    """S+ acting on S-^∂ by a*x = x/λa and x*a = λa\\x."""
    minus = t.minus.base
    if minus.meet is None:
        raise MissingComponent("induced bimodule needs meets in S-")
    lam, rho = t.lam, t.rho
    lres, rres, mul = t.minus.lres, t.minus.rres, minus.mul
    ns, nm = t.plus.size, t.minus.size
    residuals = ActionResiduals(
        bslres=tabulate(ns, nm, lambda a, x: mul[x][lam[a]]),
        slres=tabulate(nm, nm, lambda y, x: rho[lres[y][x]]),
        bsrres=tabulate(nm, nm, lambda x, y: rho[rres[x][y]]),
        srres=tabulate(nm, ns, lambda x, a: mul[lam[a]][x]),
    )
    return Bimodule(
        scalars=t.plus,
        module=minus.poset.dual(),
        mjoin=minus.meet,
        lact=tabulate(ns, nm, lambda a, x: rres[x][lam[a]]),
        ract=tabulate(nm, ns, lambda x, a: lres[lam[a]][x]),
        point=t.point,
        residuals=residuals,
        mmeet=minus.join,
    )


def _with_negation(n: NagataStructure, t: TwistablePair) -> NagataStructure:
    table = []
    for a, x in n.pairs:
        image = n.index.get((t.rho[x], t.lam[a]))
        if image is None:
            raise AxiomFailure(failed("twist.negation.closed", (a, x), ("a", "x")))
        table.append(image)
    return replace(n, negation=EndoMap(n.poset, tuple(table)))


def twist_product(t: TwistablePair) -> NagataStructure:
    m = induced_bimodule(t)
    return _with_negation(nagata_product(m), t)


def restricted_twist_product(t: TwistablePair) -> NagataStructure:
    """Pairs with x·λa <= 0 and λa·x <= 0, closed under ⊸."""
    if t.point is None:
        raise MissingPoint("restricted twist product needs a point")
    m = induced_bimodule(t)
    return _with_negation(restricted_nagata_product(m), t)


def strong_negation_checks(n: NagataStructure):
    N = Sort.of(n)
    ng, s, g = n.negation.table, n.sigma.table, n.gamma.table
    mul, le, gl, gr = n.carrier.mul, n.poset.leq, n.gres_l, n.gres_r
    yield forall("twist.negation.double-inflationary", [("x", N)], lambda x: le[x][ng[ng[x]]])
    yield forall("twist.negation.triple", [("x", N)], lambda x: ng[ng[ng[x]]] == ng[x])
    yield forall("twist.negation.sigma-gamma", [("x", N)], lambda x: ng[s[ng[x]]] == g[x])
    yield forall("twist.negation.gamma-sigma", [("x", N)],
                 lambda x: ng[g[ng[x]]] == ng[ng[s[x]]])
    yield forall("twist.negation.sigma-commute", [("x", N)],
                 lambda x: ng[ng[s[x]]] == s[ng[ng[x]]])
    yield forall("twist.negation.gres-swap", [("x", N), ("y", N)],
                 lambda x, y: g[gl[ng[x]][y]] == g[gr[x][ng[y]]])
    yield forall("twist.negation.gres-mul", [("x", N), ("y", N)],
                 lambda x, y: g[gl[ng[ng[y]]][ng[x]]] == g[ng[mul[x][y]]])
    yield forall("twist.negation.sigma-mul", [("x", N), ("y", N)],
                 lambda x, y: mul[s[ng[x]]][s[ng[y]]] == s[ng[gl[ng[y]][x]]])


def lattice_negation_checks(n: NagataStructure):
    """The three extra equations with full residuals."""
    N = Sort.of(n)
    ng, s, g = n.negation.table, n.sigma.table, n.gamma.table
    mul, lr, rr = n.carrier.mul, n.lres, n.rres
    yield forall("twist.negation.lres-swap", [("x", N), ("y", N)],
                 lambda x, y: g[lr[ng[x]][y]] == g[rr[x][ng[y]]])
    yield forall("twist.negation.lres-mul", [("x", N), ("y", N)],
                 lambda x, y: g[lr[ng[ng[y]]][ng[x]]] == g[ng[mul[x][y]]])
    yield forall("twist.negation.sigma-lres", [("x", N), ("y", N)],
                 lambda x, y: mul[s[ng[x]]][s[ng[y]]] == s[ng[lr[ng[y]][x]]])


def check_strong_negation(n: NagataStructure, lattice: bool | None = None) -> CheckReport:
    """The strong-negation axioms; ``lattice`` adds the residuated-lattice extras.

    By default the extras are checked whenever full residuals are present.
    """
    if n.negation is None:
        raise MissingComponent("structure has no strong negation")
    if n.sigma is None or n.gamma is None or n.gres_l is None or n.gres_r is None:
        raise MissingComponent("strong negation checks need sigma, gamma and the gamma-residuals")
    if lattice is None:
        lattice = n.lres is not None and n.rres is not None
    if lattice and (n.lres is None or n.rres is None):
        raise MissingComponent("lattice equations need full residuals")
    stages = [strong_negation_checks(n)]
    if lattice:
        stages.append(lattice_negation_checks(n))
    return first_failure("twist.negation", chain.from_iterable(stages))


def check_negation_antitone(n: NagataStructure) -> CheckReport:
    N, ng, le = Sort.of(n), n.negation.table, n.poset.leq
    return forall("twist.negation.antitone", [("x", N), ("y", N)],
                  lambda x, y: not le[x][y] or le[ng[y]][ng[x]])


def check_negation_constant(n: NagataStructure) -> CheckReport:
    """(⊸1)/x = ⊸x = x\\(⊸1)."""
    u = n.carrier.unit
    if u is None or n.lres is None or n.rres is None:
        raise MissingComponent("needs a unit and full residuals")
    ng, lr, rr = n.negation.table, n.lres, n.rres
    c = ng[u]
    return forall("twist.negation.constant", [("x", Sort.of(n))],
                  lambda x: rr[c][x] == ng[x] == lr[x][c])


def untwist(n: NagataStructure, verify: bool = True) -> TwistablePair:
    """<N_σ, (N_γ)^∂, γ∘⊸, σ∘⊸> with the S- operations recovered through ⊸."""
    if n.negation is None:
        raise MissingComponent("untwisting needs a strong negation")
    if verify:
        report = first_failure("twist.untwist", (check_nagata_posemigroup(n),
                                                 check_strong_negation(n, lattice=False)))
        if not report:
            raise AxiomFailure(report)
    si, gi = n.sigma_image, n.gamma_image
    ks = {e: i for i, e in enumerate(si)}
    kg = {e: i for i, e in enumerate(gi)}
    s, g, ng = n.sigma.table, n.gamma.table, n.negation.table
    mul, gl = n.carrier.mul, n.gres_l
    plus = restrict_posemigroup(n.carrier, si)
    if plus is None:
        raise AxiomFailure(failed("nagata.sigma.closed", si, detail="sigma-image not closed"))
    k = len(gi)
    # S- carries the order dual to the one inherited from N
    order = n.poset.restrict(list(gi)).dual()
    mminus = tabulate(k, k, lambda x, y: kg[g[gl[ng[gi[y]]][gi[x]]]])
    base = Posemigroup(order, mminus)
    base = replace(base, unit=unit_of(base)).with_lattice()
    minus = ResiduatedStructure(
        base,
        lres=tabulate(k, k, lambda x, y: kg[g[mul[gi[y]][ng[gi[x]]]]]),
        rres=tabulate(k, k, lambda x, y: kg[g[mul[ng[gi[y]]][gi[x]]]]),
    )
    lam = tuple(kg[g[ng[a]]] for a in si)
    rho = tuple(ks[s[ng[x]]] for x in gi)
    return TwistablePair(plus, minus, lam, rho, kg[n.point])


def counit_maps(t: TwistablePair, n: NagataStructure) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """ε+ a = <a, λa\\0> and ε- x = <ρ(x\\0), x>, as indices into untwist(n)."""
    z = t.point
    ks = {e: i for i, e in enumerate(n.sigma_image)}
    kg = {e: i for i, e in enumerate(n.gamma_image)}
    lres = t.minus.lres
    plus = tuple(ks[n.index[(a, lres[t.lam[a]][z])]] for a in t.plus.elements)
    minus = tuple(kg[n.index[(t.rho[lres[x][z]], x)]] for x in range(t.minus.size))
    return plus, minus


def check_roundtrip(t: TwistablePair) -> CheckReport:
    """untwist(twist(t)) is isomorphic to t via <ε+, ε->, commuting with λ and ρ."""
    if t.point is None:
        raise MissingPoint("untwisting needs the point to recover sigma and gamma")
    n = restricted_twist_product(t)
    u = untwist(n)
    src, dst = pair_algebra(t), pair_algebra(u)
    report = check_iso(src, dst, counit_maps(t, n), "twist.roundtrip")
    if not report:
        return report
    if find_iso(src, dst) is None:
        return failed("twist.roundtrip.search", (), detail="no isomorphism found by search")
    return passed("twist.roundtrip")


def involutive_sides(t: TwistablePair) -> tuple[int | None, int | None]:
    """Witnesses against ⊸⊸ = id and against ρλ = id (None where it holds)."""
    n = restricted_twist_product(t) if t.point is not None else twist_product(t)
    ng = n.negation.table
    left = next((m for m in n.elements if ng[ng[m]] != m), None)
    right = next((a for a in t.plus.elements if t.rho[t.lam[a]] != a), None)
    return left, right


def check_involutive_collapse(t: TwistablePair) -> CheckReport:
    """⊸⊸ = id on the twist product iff ρ∘λ = id on S+."""
    left, right = involutive_sides(t)
    if (left is None) != (right is None):
        witness = (left,) if left is not None else (right,)
        return failed("twist.involutive-collapse", witness, ("w",),
                      detail=f"double negation identity: {left is None}, rho.lam identity: {right is None}")
    return passed("twist.involutive-collapse",
                  detail=f"involutive: {left is None}")


__all__ = [
    "LEVELS", "TwistablePair", "identity_pair", "check_twistable_pair", "induced_bimodule",
    "twist_product", "restricted_twist_product", "check_strong_negation",
    "check_negation_antitone", "check_negation_constant", "untwist", "counit_maps",
    "check_roundtrip", "involutive_sides", "check_involutive_collapse",
]
