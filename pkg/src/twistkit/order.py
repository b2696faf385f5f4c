"""Finite posets, endomaps, and interior/closure operator machinery.

Elements of every finite structure are the dense indices ``0..size-1``;
labels only matter for printing.  Partial meets and joins are returned as
``None`` when they do not exist.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatch, EmptySet, NotIdempotent
from .report import CheckReport, Sort, failed, first_failure, forall, passed

Table = tuple[tuple[int, ...], ...]


def freeze(rows) -> tuple:
    """Turn nested lists into nested tuples (tables are immutable)."""
    return tuple(tuple(r) for r in rows)


def tabulate(n: int, m: int, fn: Callable[[int, int], int]) -> Table:
    return tuple(tuple(fn(i, j) for j in range(m)) for i in range(n))


@dataclass(frozen=True)
class Poset:
    size: int
    leq: tuple[tuple[bool, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_leq(cls, size: int, le: Callable[[int, int], bool], labels=None) -> "Poset":
        return cls(size, tabulate(size, size, lambda i, j: bool(le(i, j))),
                   None if labels is None else tuple(map(str, labels)))

    @classmethod
    def from_relation(cls, size: int, pairs: Iterable[tuple[int, int]], labels=None) -> "Poset":
        """Reflexive-transitive closure of a relation given by pairs."""
        rel = [[i == j for j in range(size)] for i in range(size)]
        for i, j in pairs:
            rel[i][j] = True
        for k in range(size):
            for i in range(size):
                if rel[i][k]:
                    for j in range(size):
                        if rel[k][j]:
                            rel[i][j] = True
        return cls(size, freeze(rel), None if labels is None else tuple(map(str, labels)))

    @classmethod
    def chain(cls, n: int, labels=None) -> "Poset":
        return cls.from_leq(n, lambda i, j: i <= j, labels)

    @classmethod
    def antichain(cls, n: int, labels=None) -> "Poset":
        return cls.from_leq(n, lambda i, j: i == j, labels)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    @property
    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def _down(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(j for j in self.elements if self.leq[j][i]) for i in self.elements)

    @cached_property
    def _up(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(j for j in self.elements if self.leq[i][j]) for i in self.elements)

    def down(self, i: int) -> frozenset:
        return self._down[i]

    def up(self, i: int) -> frozenset:
        return self._up[i]

    def maximum(self, xs: Iterable[int]) -> int | None:
        """The greatest element of a subset, if it has one."""
        xs = frozenset(xs)
        for c in xs:
            if xs <= self._down[c]:
                return c
        return None

    def minimum(self, xs: Iterable[int]) -> int | None:
        xs = frozenset(xs)
        for c in xs:
            if xs <= self._up[c]:
                return c
        return None

    def glb(self, xs: Iterable[int]) -> int | None:
        xs = list(xs)
        if not xs:
            raise EmptySet("glb of an empty set")
        lower = frozenset.intersection(*(self._down[x] for x in xs))
        return self.maximum(lower)

    def lub(self, xs: Iterable[int]) -> int | None:
        xs = list(xs)
        if not xs:
            raise EmptySet("lub of an empty set")
        upper = frozenset.intersection(*(self._up[x] for x in xs))
        return self.minimum(upper)

    @cached_property
    def bottom(self) -> int | None:
        return self.minimum(self.elements)

    @cached_property
    def top(self) -> int | None:
        return self.maximum(self.elements)

    @cached_property
    def meet_table(self) -> Table | None:
        """Binary meets, or None if some pair lacks a meet."""
        rows = []
        for i in self.elements:
            row = []
            for j in self.elements:
                m = self.glb((i, j))
                if m is None:
                    return None
                row.append(m)
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def join_table(self) -> Table | None:
        rows = []
        for i in self.elements:
            row = []
            for j in self.elements:
                m = self.lub((i, j))
                if m is None:
                    return None
                row.append(m)
            rows.append(tuple(row))
        return tuple(rows)

    def is_lattice(self) -> bool:
        return self.meet_table is not None and self.join_table is not None

    def dual(self) -> "Poset":
        return Poset(self.size, tabulate(self.size, self.size, lambda i, j: self.leq[j][i]),
                     self.labels)

    def restrict(self, elements: Sequence[int]) -> "Poset":
        """The induced subposet on ``elements``, reindexed in the given order."""
        return Poset(len(elements),
                     tabulate(len(elements), len(elements),
                              lambda i, j: self.leq[elements[i]][elements[j]]),
                     tuple(self.label(e) for e in elements))

    def hasse(self) -> list[tuple[int, int]]:
        """Covering pairs (i, j) with i < j and nothing strictly between."""
        covers = []
        for i in self.elements:
            for j in self.elements:
                if i != j and self.leq[i][j]:
                    if not any(k not in (i, j) and self.leq[i][k] and self.leq[k][j]
                               for k in self.elements):
                        covers.append((i, j))
        return covers


def check_poset(p: Poset) -> CheckReport:
    if len(p.leq) != p.size or any(len(row) != p.size for row in p.leq):
        raise DimensionMismatch(f"leq table is not {p.size}x{p.size}")
    s = Sort.of(p)
    le = p.leq
    return first_failure("poset", (
        forall("poset.reflexivity", [("x", s)], lambda x: le[x][x]),
        forall("poset.antisymmetry", [("x", s), ("y", s)],
               lambda x, y: x == y or not (le[x][y] and le[y][x])),
        forall("poset.transitivity", [("x", s), ("y", s), ("z", s)],
               lambda x, y, z: not (le[x][y] and le[y][z]) or le[x][z]),
    ))


def dualize(p: Poset) -> Poset:
    return p.dual()


def glb(p: Poset, xs: Iterable[int]) -> int | None:
    return p.glb(xs)


def lub(p: Poset, xs: Iterable[int]) -> int | None:
    return p.lub(xs)


@dataclass(frozen=True)
class EndoMap:
    base: Poset
    table: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.table[i]

    def __post_init__(self):
        if len(self.table) != self.base.size:
            raise DimensionMismatch("endomap table length differs from poset size")

    def is_isotone(self) -> bool:
        le, t = self.base.leq, self.table
        return all(le[t[i]][t[j]] for i in self.base.elements
                   for j in self.base.elements if le[i][j])

    def is_antitone(self) -> bool:
        le, t = self.base.leq, self.table
        return all(le[t[j]][t[i]] for i in self.base.elements
                   for j in self.base.elements if le[i][j])

    def is_idempotent(self) -> bool:
        return all(self.table[self.table[i]] == self.table[i] for i in self.base.elements)

    def is_identity(self) -> bool:
        return all(self.table[i] == i for i in self.base.elements)

    def fixpoints(self) -> tuple[int, ...]:
        return tuple(i for i in self.base.elements if self.table[i] == i)

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.table)))


def classify_operator(f: EndoMap) -> str:
    """One of 'interior', 'closure', 'both', 'neither'."""
    if not (f.is_isotone() and f.is_idempotent()):
        return "neither"
    le, t = f.base.leq, f.table
    deflationary = all(le[t[i]][i] for i in f.base.elements)
    inflationary = all(le[i][t[i]] for i in f.base.elements)
    if deflationary and inflationary:
        return "both"
    if deflationary:
        return "interior"
    if inflationary:
        return "closure"
    return "neither"


def check_operator(f: EndoMap, kind: str, axiom: str) -> CheckReport:
    """Check that f is an interior (kind='interior') or closure operator."""
    s = Sort.of(f.base)
    le, t = f.base.leq, f.table
    bound = ((lambda x: le[t[x]][x]) if kind == "interior" else (lambda x: le[x][t[x]]))
    return first_failure(axiom, (
        forall(f"{axiom}.isotone", [("x", s), ("y", s)],
               lambda x, y: not le[x][y] or le[t[x]][t[y]]),
        forall(f"{axiom}.idempotent", [("x", s)], lambda x: t[t[x]] == t[x]),
        forall(f"{axiom}.{'deflationary' if kind == 'interior' else 'inflationary'}",
               [("x", s)], bound),
    ))


def fixpoint_image(f: EndoMap) -> tuple[tuple[int, ...], Poset]:
    """Fixpoints of an idempotent map together with the induced order."""
    if not f.is_idempotent():
        bad = next(i for i in f.base.elements if f.table[f.table[i]] != f.table[i])
        raise NotIdempotent(f"f(f({f.base.label(bad)})) != f({f.base.label(bad)})")
    fixed = f.fixpoints()
    return fixed, f.base.restrict(fixed)


def is_order_embedding(src: Poset, dst: Poset, table: Sequence[int]) -> CheckReport:
    s = Sort.of(src)
    return forall("map.order-embedding", [("x", s), ("y", s)],
                  lambda x, y: src.leq[x][y] == dst.leq[table[x]][table[y]])


def check_isotone_map(src: Poset, dst: Poset, table: Sequence[int], axiom: str) -> CheckReport:
    s = Sort.of(src)
    return forall(axiom, [("x", s), ("y", s)],
                  lambda x, y: not src.leq[x][y] or dst.leq[table[x]][table[y]])


__all__ = [
    "Poset", "EndoMap", "Table", "check_poset", "dualize", "glb", "lub",
    "classify_operator", "check_operator", "fixpoint_image", "freeze", "tabulate",
    "is_order_embedding", "check_isotone_map", "passed", "failed",
]
