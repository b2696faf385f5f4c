"""Posemigroups, residuated structures and Brouwerian algebras.

Residuals are never assumed: :func:`compute_residuals` finds them as maxima
of bound sets, so their existence is something a caller can test.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import chain
from typing import Sequence

from .errors import DimensionMismatch, MissingComponent, MissingPoint
from .order import Poset, Table, check_poset, tabulate
from .report import CheckReport, Sort, first_failure, forall, passed


def check_shape(table, rows: int, cols: int, name: str) -> None:
    if table is None:
        return
    if len(table) != rows or any(len(r) != cols for r in table):
        raise DimensionMismatch(f"table {name!r} is not {rows}x{cols}")


def check_range(table, bound: int, name: str) -> None:
    for row in table:
        for v in row:
            if v is not None and not 0 <= v < bound:
                raise DimensionMismatch(f"table {name!r} has out-of-range entry {v}")


@dataclass(frozen=True)
class Posemigroup:
    poset: Poset
    mul: Table
    unit: int | None = None
    meet: Table | None = None
    join: Table | None = None

    @property
    def size(self) -> int:
        return self.poset.size

    def label(self, i: int) -> str:
        return self.poset.label(i)

    def le(self, i: int, j: int) -> bool:
        return self.poset.leq[i][j]

    @property
    def elements(self) -> range:
        return self.poset.elements

    def with_lattice(self) -> "Posemigroup":
        """Attach the poset's meet and join tables when they exist."""
        return replace(self, meet=self.poset.meet_table, join=self.poset.join_table)


@dataclass(frozen=True)
class ResiduatedStructure:
    """A posemigroup with tables ``lres[a][c] = a\\c`` and ``rres[c][b] = c/b``."""

    base: Posemigroup
    lres: Table
    rres: Table

    @property
    def size(self) -> int:
        return self.base.size

    def label(self, i: int) -> str:
        return self.base.label(i)

    @property
    def poset(self) -> Poset:
        return self.base.poset

    @property
    def mul(self) -> Table:
        return self.base.mul


@dataclass(frozen=True)
class BrouwerianAlgebra:
    lattice: Posemigroup
    imp: Table
    point: int | None = None

    @property
    def size(self) -> int:
        return self.lattice.size

    def label(self, i: int) -> str:
        return self.lattice.label(i)

    @property
    def elements(self) -> range:
        return self.lattice.elements

    @property
    def top(self) -> int:
        return self.lattice.poset.top

    def neg(self, a: int) -> int:
        if self.point is None:
            raise MissingPoint("negation needs a point")
        return self.imp[a][self.point]

    def plus(self, x: int, y: int) -> int:
        """x + y = (0 -> (x meet y)) meet (x join y)."""
        meet, join = self.lattice.meet, self.lattice.join
        return meet[self.imp[self.point][meet[x][y]]][join[x][y]]

    def residuated(self) -> ResiduatedStructure:
        return ResiduatedStructure(self.lattice, self.imp,
                                   tabulate(self.size, self.size, lambda c, b: self.imp[b][c]))


def _validate_posemigroup(s: Posemigroup) -> None:
    n = s.size
    check_shape(s.poset.leq, n, n, "leq")
    check_shape(s.mul, n, n, "mul")
    check_range(s.mul, n, "mul")
    for name in ("meet", "join"):
        t = getattr(s, name)
        check_shape(t, n, n, name)
        if t is not None:
            check_range(t, n, name)
    if s.unit is not None and not 0 <= s.unit < n:
        raise DimensionMismatch("unit out of range")


def check_isotone_binary(axiom: str, left: Sort, right: Sort, op, le_left, le_right, le_out) -> CheckReport:
    """Isotonicity of a binary operation in both arguments, in O(n^3)."""
    def in_first(a, a2, b):
        return not le_left(a, a2) or le_out(op(a, b), op(a2, b))

    def in_second(a, b, b2):
        return not le_right(b, b2) or le_out(op(a, b), op(a, b2))

    return first_failure(axiom, (
        forall(axiom, [("a", left), ("a'", left), ("b", right)], in_first),
        forall(axiom, [("a", left), ("b", right), ("b'", right)], in_second),
    ))


def posemigroup_checks(s: Posemigroup, prefix: str = "posemigroup"):
    """Lazy stream of the posemigroup invariant checks."""
    s_ = Sort.of(s)
    m, le = s.mul, s.poset.leq
    yield forall(f"{prefix}.associativity", [("a", s_), ("b", s_), ("c", s_)],
                 lambda a, b, c: m[m[a][b]][c] == m[a][m[b][c]])
    yield check_isotone_binary(f"{prefix}.isotone", s_, s_, lambda a, b: m[a][b],
                               lambda i, j: le[i][j], lambda i, j: le[i][j],
                               lambda i, j: le[i][j])
    if s.unit is not None:
        u = s.unit
        yield forall(f"{prefix}.unit", [("a", s_)],
                     lambda a: m[u][a] == a and m[a][u] == a)
    if s.meet is not None:
        yield forall(f"{prefix}.meet", [("a", s_), ("b", s_)],
                     lambda a, b: s.meet[a][b] == s.poset.glb((a, b)))
    if s.join is not None:
        yield forall(f"{prefix}.join", [("a", s_), ("b", s_)],
                     lambda a, b: s.join[a][b] == s.poset.lub((a, b)))


def check_posemigroup(s: Posemigroup) -> CheckReport:
    _validate_posemigroup(s)
    return first_failure("posemigroup", chain([check_poset(s.poset)], posemigroup_checks(s)))


def compute_residuals(s: Posemigroup) -> ResiduatedStructure | None:
    """Residuals as maxima of bound sets, or None if one is missing."""
    n, m, p = s.size, s.mul, s.poset
    lres, rres = [[0] * n for _ in range(n)], [[0] * n for _ in range(n)]
    for a in range(n):
        for c in range(n):
            best = p.maximum(b for b in range(n) if p.leq[m[a][b]][c])
            if best is None:
                return None
            lres[a][c] = best
    for c in range(n):
        for b in range(n):
            best = p.maximum(a for a in range(n) if p.leq[m[a][b]][c])
            if best is None:
                return None
            rres[c][b] = best
    return ResiduatedStructure(s, tuple(map(tuple, lres)), tuple(map(tuple, rres)))


def residuation_checks(r: ResiduatedStructure, prefix: str = "residuated"):
    s_ = Sort.of(r)
    m, le, lres, rres = r.mul, r.poset.leq, r.lres, r.rres
    yield forall(f"{prefix}.residuation", [("a", s_), ("b", s_), ("c", s_)],
                 lambda a, b, c: le[b][lres[a][c]] == le[m[a][b]][c] == le[a][rres[c][b]])


def check_residuated(r: ResiduatedStructure) -> CheckReport:
    """Posemigroup axioms plus the residuation law (no lattice or unit needed)."""
    _validate_posemigroup(r.base)
    n = r.size
    for name in ("lres", "rres"):
        check_shape(getattr(r, name), n, n, name)
        check_range(getattr(r, name), n, name)
    return first_failure("residuated", chain([check_poset(r.poset)], posemigroup_checks(r.base),
                                             residuation_checks(r)))


def check_residuated_semilattice_ordered(r: ResiduatedStructure) -> CheckReport:
    """Residuated l-semigroup: lattice tables present, unit not required."""
    b = r.base
    for name in ("meet", "join"):
        if getattr(b, name) is None:
            raise MissingComponent(f"residuated l-semigroup needs a {name} table")
    return check_residuated(r)


def check_residuated_lattice(r: ResiduatedStructure) -> CheckReport:
    b = r.base
    for name in ("meet", "join", "unit"):
        if getattr(b, name) is None:
            raise MissingComponent(f"residuated lattice needs a {name}")
    return check_residuated(r)


def residuated_lattice(poset: Poset, mul: Sequence[Sequence[int]], unit: int | None) -> ResiduatedStructure:
    """Build a residuated lattice from an order and a multiplication table."""
    base = Posemigroup(poset, tuple(map(tuple, mul)), unit).with_lattice()
    r = compute_residuals(base)
    if r is None:
        raise MissingComponent("multiplication is not residuated")
    return r


def relative_pseudocomplement(lattice: Posemigroup) -> Table | None:
    """x -> y as the largest z with x meet z <= y, or None if missing."""
    if lattice.meet is None:
        raise MissingComponent("relative pseudocomplement needs a meet table")
    p, meet, n = lattice.poset, lattice.meet, lattice.size
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            z = p.maximum(z for z in range(n) if p.leq[meet[x][z]][y])
            if z is None:
                return None
            row.append(z)
        rows.append(tuple(row))
    return tuple(rows)


def brouwerian_from_lattice(poset: Poset, point: int | None = None) -> BrouwerianAlgebra:
    """The Brouwerian algebra on a finite distributive lattice."""
    if not poset.is_lattice():
        raise MissingComponent("order is not a lattice")
    top = poset.top
    lattice = Posemigroup(poset, poset.meet_table, top, poset.meet_table, poset.join_table)
    imp = relative_pseudocomplement(lattice)
    if imp is None:
        # finite lattices have one exactly when they are distributive
        raise MissingComponent("lattice has no relative pseudocomplement")
    return BrouwerianAlgebra(lattice, imp, point)


def check_brouwerian(b: BrouwerianAlgebra) -> CheckReport:
    lat = b.lattice
    for name in ("meet", "join"):
        if getattr(lat, name) is None:
            raise MissingComponent(f"Brouwerian algebra needs a {name} table")
    _validate_posemigroup(lat)
    check_shape(b.imp, b.size, b.size, "imp")
    check_range(b.imp, b.size, "imp")
    s_ = Sort.of(b)
    le, meet, join, imp = lat.poset.leq, lat.meet, lat.join, b.imp

    def checks():
        yield from posemigroup_checks(lat, "brouwerian.lattice")
        yield forall("brouwerian.mul-is-meet", [("x", s_), ("y", s_)],
                     lambda x, y: lat.mul[x][y] == meet[x][y])
        # the unit must be the top: 1 is above every x
        yield forall("brouwerian.top-unit", [("x", s_)],
                     lambda x: lat.unit is not None and le[x][lat.unit])
        yield forall("brouwerian.distributivity", [("x", s_), ("y", s_), ("z", s_)],
                     lambda x, y, z: meet[x][join[y][z]] == join[meet[x][y]][meet[x][z]])
        yield forall("brouwerian.pseudocomplement", [("x", s_), ("y", s_), ("z", s_)],
                     lambda x, y, z: le[z][imp[x][y]] == le[meet[x][z]][y])

    return first_failure("brouwerian", checks())


def check_boolean_pointed(b: BrouwerianAlgebra) -> CheckReport:
    if b.point is None:
        raise MissingPoint("Boolean-pointedness needs a point")
    z, imp, join = b.point, b.imp, b.lattice.join
    return forall("brouwerian.boolean-pointed", [("x", Sort.of(b))],
                  lambda x: imp[imp[x][z]][z] == join[x][z])


def brouwerian_lemma_checks(b: BrouwerianAlgebra):
    """The three arithmetic lemmas of Boolean-pointed Brouwerian algebras."""
    s_ = Sort.of(b)
    imp, meet, z = b.imp, b.lattice.meet, b.point
    neg = [imp[a][z] for a in range(b.size)]
    yield forall("brouwerian.lemma.negation-fixpoint", [("a", s_)],
                 lambda a: imp[neg[a]][a] == a)
    yield forall("brouwerian.lemma.separation", [("a", s_), ("b", s_)],
                 lambda a, c: not (meet[z][a] == meet[z][c] and neg[a] == neg[c]) or a == c)
    yield forall("brouwerian.lemma.sum", [("a", s_), ("b", s_)],
                 lambda a, c: b.plus(a, c) == meet[imp[neg[a]][c]][imp[neg[c]][a]])


def check_brouwerian_lemmas(b: BrouwerianAlgebra) -> CheckReport:
    if b.point is None:
        raise MissingPoint("the lemmas need a point")
    return first_failure("brouwerian.lemma", brouwerian_lemma_checks(b))


def is_commutative(s: Posemigroup) -> bool:
    return all(s.mul[a][b] == s.mul[b][a] for a in s.elements for b in s.elements)


def unit_of(s: Posemigroup) -> int | None:
    """Search for a two-sided multiplicative unit."""
    for e in s.elements:
        if all(s.mul[e][a] == a == s.mul[a][e] for a in s.elements):
            return e
    return None


def restrict_posemigroup(s: Posemigroup, elements: Sequence[int], with_lattice: bool = True) -> Posemigroup | None:
    """The subposemigroup on ``elements`` (reindexed), or None if not closed.

    Lattice tables are recomputed inside the subposet; the unit is searched
    for among the retained elements.
    """
    index = {e: i for i, e in enumerate(elements)}
    rows = []
    for a in elements:
        row = []
        for b in elements:
            c = s.mul[a][b]
            if c not in index:
                return None
            row.append(index[c])
        rows.append(tuple(row))
    poset = s.poset.restrict(list(elements))
    sub = Posemigroup(poset, tuple(rows))
    sub = replace(sub, unit=unit_of(sub))
    if with_lattice:
        sub = sub.with_lattice()
    return sub


def is_homomorphism(src: Posemigroup, dst: Posemigroup, f: Sequence[int], axiom: str) -> CheckReport:
    """Isotone and multiplicative."""
    s_ = Sort.of(src)
    return first_failure(axiom, (
        forall(f"{axiom}.isotone", [("a", s_), ("b", s_)],
               lambda a, b: not src.poset.leq[a][b] or dst.poset.leq[f[a]][f[b]]),
        forall(f"{axiom}.mul", [("a", s_), ("b", s_)],
               lambda a, b: f[src.mul[a][b]] == dst.mul[f[a]][f[b]]),
    ))


__all__ = [
    "Posemigroup", "ResiduatedStructure", "BrouwerianAlgebra", "check_posemigroup",
    "compute_residuals", "check_residuated", "check_residuated_semilattice_ordered",
    "check_residuated_lattice", "residuated_lattice", "relative_pseudocomplement",
    "brouwerian_from_lattice", "check_brouwerian", "check_boolean_pointed",
    "check_brouwerian_lemmas", "is_commutative", "unit_of", "restrict_posemigroup",
    "is_homomorphism", "passed",
]
