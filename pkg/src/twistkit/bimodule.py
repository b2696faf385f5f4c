"""Bimodules: a posemigroup acting on a join semilattice from both sides.

The scalar sort S and the module sort M keep separate index spaces.  The
four residuals of a residuated biaction are stored positionally:

============  ==================  =========
field         meaning             lands in
============  ==================  =========
``bslres``    ``a ⟍∗ y``          M
``slres``     ``y /∗ x``          S
``bsrres``    ``x ∗⟍ y``          S
``srres``     ``y ∗/ a``          M
============  ==================  =========

so that ``x <= a⟍∗y  iff  a∗x <= y  iff  a <= y/∗x`` and
``x <= y∗/a  iff  x∗a <= y  iff  a <= x∗⟍y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations

from .algebra import Posemigroup, ResiduatedStructure, check_range, check_shape, posemigroup_checks
from .errors import MissingComponent, MissingPoint
from .order import Poset, Table, check_poset, tabulate
from .report import CheckReport, Sort, failed, first_failure, forall, passed

LEVELS = ("biaction", "bimodule", "residuated", "unital", "cyclic")


@dataclass(frozen=True)
class ActionResiduals:
    bslres: Table
    slres: Table
    bsrres: Table
    srres: Table


@dataclass(frozen=True)
class Bimodule:
    scalars: Posemigroup
    module: Poset
    mjoin: Table
    lact: Table
    ract: Table
    point: int | None = None
    residuals: ActionResiduals | None = None
    mmeet: Table | None = None

    @property
    def S(self) -> Sort:
        return Sort.of(self.scalars)

    @property
    def M(self) -> Sort:
        return Sort.of(self.module)

    def with_residuals(self) -> "Bimodule | None":
        r = compute_action_residuals(self)
        if r is None:
            return None
        return Bimodule(self.scalars, self.module, self.mjoin, self.lact, self.ract,
                        self.point, r, self.mmeet)

    def is_cyclic(self) -> bool:
        z = self.point
        return z is not None and all(self.lact[a][z] == self.ract[z][a]
                                     for a in self.scalars.elements)


def _validate(m: Bimodule) -> None:
    ns, nm = m.scalars.size, m.module.size
    check_shape(m.mjoin, nm, nm, "mjoin")
    check_range(m.mjoin, nm, "mjoin")
    check_shape(m.lact, ns, nm, "lact")
    check_range(m.lact, nm, "lact")
    check_shape(m.ract, nm, ns, "ract")
    check_range(m.ract, nm, "ract")
    check_shape(m.mmeet, nm, nm, "mmeet")
    if m.residuals is not None:
        r = m.residuals
        check_shape(r.bslres, ns, nm, "bslres")
        check_range(r.bslres, nm, "bslres")
        check_shape(r.slres, nm, nm, "slres")
        check_range(r.slres, ns, "slres")
        check_shape(r.bsrres, nm, nm, "bsrres")
        check_range(r.bsrres, ns, "bsrres")
        check_shape(r.srres, nm, ns, "srres")
        check_range(r.srres, nm, "srres")
    if m.point is not None and not 0 <= m.point < nm:
        raise MissingPoint("point out of range")


def biaction_checks(m: Bimodule):
    S, M = m.S, m.M
    mul, la, ra = m.scalars.mul, m.lact, m.ract
    les, lem = m.scalars.poset.leq, m.module.leq
    yield forall("bimodule.action.left-assoc", [("a", S), ("b", S), ("x", M)],
                 lambda a, b, x: la[mul[a][b]][x] == la[a][la[b][x]])
    yield forall("bimodule.action.right-assoc", [("x", M), ("a", S), ("b", S)],
                 lambda x, a, b: ra[x][mul[a][b]] == ra[ra[x][a]][b])
    yield forall("bimodule.action.middle-assoc", [("a", S), ("x", M), ("b", S)],
                 lambda a, x, b: ra[la[a][x]][b] == la[a][ra[x][b]])
    yield forall("bimodule.action.left-isotone", [("a", S), ("a'", S), ("x", M)],
                 lambda a, a2, x: not les[a][a2] or lem[la[a][x]][la[a2][x]])
    yield forall("bimodule.action.left-isotone", [("a", S), ("x", M), ("x'", M)],
                 lambda a, x, x2: not lem[x][x2] or lem[la[a][x]][la[a][x2]])
    yield forall("bimodule.action.right-isotone", [("x", M), ("a", S), ("a'", S)],
                 lambda x, a, a2: not les[a][a2] or lem[ra[x][a]][ra[x][a2]])
    yield forall("bimodule.action.right-isotone", [("x", M), ("x'", M), ("a", S)],
                 lambda x, x2, a: not lem[x][x2] or lem[ra[x][a]][ra[x2][a]])


def join_checks(m: Bimodule):
    M, S = m.M, m.S
    j, la, ra = m.mjoin, m.lact, m.ract
    yield forall("bimodule.module-join", [("x", M), ("y", M)],
                 lambda x, y: j[x][y] == m.module.lub((x, y)))
    if m.mmeet is not None:
        yield forall("bimodule.module-meet", [("x", M), ("y", M)],
                     lambda x, y: m.mmeet[x][y] == m.module.glb((x, y)))
    yield forall("bimodule.join.left", [("a", S), ("x", M), ("y", M)],
                 lambda a, x, y: la[a][j[x][y]] == j[la[a][x]][la[a][y]])
    yield forall("bimodule.join.right", [("x", M), ("y", M), ("a", S)],
                 lambda x, y, a: ra[j[x][y]][a] == j[ra[x][a]][ra[y][a]])


def residual_checks(m: Bimodule):
    if m.residuals is None:
        raise MissingComponent("residuated level needs the four action residuals")
    r, S, M = m.residuals, m.S, m.M
    la, ra = m.lact, m.ract
    les, lem = m.scalars.poset.leq, m.module.leq
    yield forall("bimodule.residuation.left", [("a", S), ("x", M), ("y", M)],
                 lambda a, x, y: lem[x][r.bslres[a][y]] == lem[la[a][x]][y] == les[a][r.slres[y][x]])
    yield forall("bimodule.residuation.right", [("a", S), ("x", M), ("y", M)],
                 lambda a, x, y: lem[x][r.srres[y][a]] == lem[ra[x][a]][y] == les[a][r.bsrres[x][y]])


def unital_checks(m: Bimodule):
    u = m.scalars.unit
    if u is None:
        raise MissingComponent("unital level needs a scalar unit")
    yield from posemigroup_checks(m.scalars, "bimodule.scalars")
    yield forall("bimodule.unital", [("x", m.M)],
                 lambda x: m.lact[u][x] == x == m.ract[x][u])


def cyclic_checks(m: Bimodule):
    if m.point is None:
        raise MissingPoint("cyclic level needs a point")
    z = m.point
    yield forall("bimodule.cyclic", [("a", m.S)], lambda a: m.lact[a][z] == m.ract[z][a])


def check_bimodule(m: Bimodule, level: str = "bimodule") -> CheckReport:
    """Check the cumulative invariants up to ``level``."""
    if level not in LEVELS:
        raise ValueError(f"unknown bimodule level {level!r}")
    _validate(m)
    rank = LEVELS.index(level)
    stages = [[check_poset(m.scalars.poset), check_poset(m.module)],
              posemigroup_checks(m.scalars, "bimodule.scalars"), biaction_checks(m)]
    if rank >= 1:
        stages.append(join_checks(m))
    if rank >= 2:
        stages.append(residual_checks(m))
    if rank >= 3:
        stages.append(unital_checks(m))
    if rank >= 4:
        stages.append(cyclic_checks(m))
    return first_failure(f"bimodule.{level}", chain.from_iterable(stages))


def compute_action_residuals(m: Bimodule) -> ActionResiduals | None:
    """All four residuals by maximum-of-set scans, or None if one is missing."""
    S, M = m.scalars.poset, m.module
    la, ra = m.lact, m.ract
    ns, nm = S.size, M.size

    def table(rows, cols, candidates, poset):
        out = []
        for i in range(rows):
            row = []
            for j in range(cols):
                best = poset.maximum(candidates(i, j))
                if best is None:
                    return None
                row.append(best)
            out.append(tuple(row))
        return tuple(out)

    bslres = table(ns, nm, lambda a, y: (x for x in range(nm) if M.leq[la[a][x]][y]), M)
    srres = table(nm, ns, lambda y, a: (x for x in range(nm) if M.leq[ra[x][a]][y]), M)
    slres = table(nm, nm, lambda y, x: (a for a in range(ns) if M.leq[la[a][x]][y]), S)
    bsrres = table(nm, nm, lambda x, y: (a for a in range(ns) if M.leq[ra[x][a]][y]), S)
    if None in (bslres, srres, slres, bsrres):
        return None
    return ActionResiduals(bslres, slres, bsrres, srres)


def division_bimodule(L: ResiduatedStructure, zero: int | None = None) -> Bimodule:
    """L acting on its order dual by division: a∗x = x/a and x∗a = a\\x."""
    b = L.base
    if b.meet is None or b.join is None:
        raise MissingComponent("division bimodule needs a lattice-ordered scalar sort")
    n = L.size
    lres, rres, mul = L.lres, L.rres, b.mul
    residuals = ActionResiduals(
        bslres=tabulate(n, n, lambda a, x: mul[x][a]),
        slres=tabulate(n, n, lambda y, x: lres[y][x]),
        bsrres=tabulate(n, n, lambda x, y: rres[x][y]),
        srres=tabulate(n, n, lambda x, a: mul[a][x]),
    )
    return Bimodule(
        scalars=b,
        module=b.poset.dual(),
        mjoin=b.meet,
        lact=tabulate(n, n, lambda a, x: rres[x][a]),
        ract=tabulate(n, n, lambda x, a: lres[a][x]),
        point=zero,
        residuals=residuals,
        mmeet=b.join,
    )


def check_top_bottom_consequences(m: Bimodule) -> CheckReport:
    """Bounds of M force a zero for the action and a top scalar."""
    if m.residuals is None:
        raise MissingComponent("needs action residuals")
    r, S, M = m.residuals, m.S, m.M
    bot, top = m.module.bottom, m.module.top
    stop = m.scalars.poset.top
    checks = []
    if bot is None and top is None:
        return passed("bimodule.bounds", "vacuous: module has no bounds")
    if stop is None:
        return failed("bimodule.bounds.scalar-top", (), detail="scalar sort has no top")
    if bot is not None:
        checks.append(forall("bimodule.bounds.bottom-zero", [("a", S)],
                             lambda a: m.ract[bot][a] == bot == m.lact[a][bot]))
        checks.append(forall("bimodule.bounds.scalar-top", [("a", S)],
                             lambda a: r.bsrres[bot][bot] == stop == r.slres[bot][bot]))
    if top is not None:
        checks.append(forall("bimodule.bounds.scalar-top", [("x", M)],
                             lambda x: r.bsrres[x][top] == stop == r.slres[top][x]))
    return first_failure("bimodule.bounds", checks)


def check_join_preservation(m: Bimodule) -> CheckReport:
    """a∗(join xs) = join(a∗xs) for every nonempty subset of M."""
    M = m.module
    j = m.mjoin

    def join_all(xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = j[acc][x]
        return acc

    for k in range(1, M.size + 1):
        for xs in combinations(M.elements, k):
            top = join_all(xs)
            for a in m.scalars.elements:
                if m.lact[a][top] != join_all([m.lact[a][x] for x in xs]):
                    return failed("bimodule.join.subset-left", (a, xs), ("a", "xs"))
                if m.ract[top][a] != join_all([m.ract[x][a] for x in xs]):
                    return failed("bimodule.join.subset-right", (a, xs), ("a", "xs"))
    return passed("bimodule.join.subset")


__all__ = [
    "LEVELS", "ActionResiduals", "Bimodule", "check_bimodule", "compute_action_residuals",
    "division_bimodule", "check_top_bottom_consequences", "check_join_preservation",
    "biaction_checks", "join_checks", "residual_checks", "cyclic_checks", "unital_checks",
]
