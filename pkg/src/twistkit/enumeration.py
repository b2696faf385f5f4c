"""Exhaustive enumeration and seeded random generation of small structures.

Labeled structures are enumerated in a fixed order; ``up_to_iso`` keeps the
first structure of each isomorphism class, recognised by a canonical form
(the lexicographically least table concatenation over all relabelings).
"""

from __future__ import annotations

import os
import random
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

from .algebra import (BrouwerianAlgebra, Posemigroup, ResiduatedStructure, brouwerian_from_lattice,
                      check_boolean_pointed, check_brouwerian, check_posemigroup,
                      compute_residuals, residuated_lattice, unit_of)
from .bimodule import Bimodule, check_bimodule
from .errors import BoundExceeded, GenerationExhausted
from .iso import SortedAlgebra, _order, find_iso
from .order import Poset, freeze

DEFAULT_MAX_SIZE = 5
# multiplication tables grow as n^(n*n); keep these kinds smaller by default
KIND_BOUNDS = {"posemigroup": 3}
RETRIES = 20000

KINDS = ("poset", "lattice", "distributive-lattice", "brouwerian", "boolean-pointed",
         "residuated-chain", "posemigroup")


def max_size(kind: str | None = None) -> int:
    """The configured bound, overridable through NAGATA_MAX_SIZE."""
    env = os.environ.get("NAGATA_MAX_SIZE")
    if env:
        return int(env)
    return KIND_BOUNDS.get(kind, DEFAULT_MAX_SIZE)


def _bounded(kind: str, n: int) -> None:
    bound = max_size(kind)
    if n > bound:
        raise BoundExceeded(f"{kind} enumeration is bounded to size {bound} (set NAGATA_MAX_SIZE)")


# canonical forms

def _relabel(table, perm):
    """The table of the structure transported along perm (old -> new)."""
    n = len(perm)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    if isinstance(table, int):
        return (perm[table],)
    if isinstance(table[0][0], bool):
        return tuple(table[inv[i]][inv[j]] for i in range(n) for j in range(n))
    return tuple(perm[table[inv[i]][inv[j]]] for i in range(n) for j in range(n))


def canonical_form(n: int, tables) -> tuple:
    """Least concatenation of the relabeled tables over all permutations."""
    best = None
    for perm in permutations(range(n)):
        key = tuple(x for t in tables for x in _relabel(t, perm))
        if best is None or key < best:
            best = key
    return best


def _iso_classes(items, n, tables_of):
    seen = set()
    for item in items:
        key = canonical_form(n, tables_of(item))
        if key not in seen:
            seen.add(key)
            yield item


# posets

def labeled_posets(n: int) -> Iterator[Poset]:
    """Every partial order on 0..n-1, in a fixed order."""
    pairs = list(combinations(range(n), 2))
    for states in product((0, 1, 2), repeat=len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), s in zip(pairs, states):
            if s == 1:
                rel[i][j] = True
            elif s == 2:
                rel[j][i] = True
        if all(not (rel[i][k] and rel[k][j]) or rel[i][j]
               for i in range(n) for j in range(n) for k in range(n)):
            yield Poset(n, freeze(rel))


@lru_cache(maxsize=None)
def _posets(n: int, up_to_iso: bool) -> tuple[Poset, ...]:
    posets = labeled_posets(n)
    if up_to_iso:
        return tuple(_iso_classes(posets, n, lambda p: (p.leq,)))
    return tuple(posets)


def enumerate_posets(n: int, up_to_iso: bool = True) -> list[Poset]:
    _bounded("poset", n)
    return list(_posets(n, up_to_iso))


def count_posets_by_search(n: int) -> int:
    """Isomorphism classes of labeled posets by pairwise isomorphism search.

    Independent of canonical forms; used as the second entry of a
    double-entry count.
    """
    reps: list[tuple[tuple, SortedAlgebra]] = []
    for p in labeled_posets(n):
        # the multiset of (down-set, up-set) sizes prunes most searches
        profile = tuple(sorted((len(p.down(i)), len(p.up(i))) for i in p.elements))
        a = SortedAlgebra((n,), (_order("leq", 0, p),))
        if not any(prof == profile and find_iso(a, r) is not None for prof, r in reps):
            reps.append((profile, a))
    return len(reps)


def check_poset_counts(limit: int = 4) -> dict[int, tuple[int, int]]:
    """Canonical-form and search counts per size; equal when consistent."""
    return {n: (len(enumerate_posets(n)), count_posets_by_search(n)) for n in range(1, limit + 1)}


# lattices and Brouwerian algebras

def _is_distributive(p: Poset) -> bool:
    m, j = p.meet_table, p.join_table
    return all(m[x][j[y][z]] == j[m[x][y]][m[x][z]]
               for x in p.elements for y in p.elements for z in p.elements)


def enumerate_lattices(n: int, up_to_iso: bool = True, distributive: bool = False) -> list[Poset]:
    _bounded("lattice", n)
    out = [p for p in enumerate_posets(n, up_to_iso) if p.is_lattice()]
    if distributive:
        out = [p for p in out if _is_distributive(p)]
    return out


def enumerate_brouwerian(n: int, up_to_iso: bool = True,
                         boolean_pointed: bool = False) -> list[BrouwerianAlgebra]:
    """Pointed Brouwerian algebras on the distributive lattices of size n."""
    _bounded("brouwerian", n)
    out = []
    for p in enumerate_lattices(n, up_to_iso=False, distributive=True):
        base = brouwerian_from_lattice(p)
        for z in p.elements:
            b = BrouwerianAlgebra(base.lattice, base.imp, z)
            if boolean_pointed and not check_boolean_pointed(b):
                continue
            out.append(b)
    if up_to_iso:
        out = list(_iso_classes(out, n, lambda b: (b.lattice.poset.leq, b.point)))
    return out


# residuated chains and posemigroups

def commutative_residuated_chains(n: int, up_to_iso: bool = True) -> list[ResiduatedStructure]:
    """Commutative residuated lattices on the n-chain.

    On a chain isomorphism is the identity, so ``up_to_iso`` changes nothing.
    """
    _bounded("residuated-chain", n)
    chain = Poset.chain(n)
    out = []
    for unit in range(n):
        free = [(i, j) for i in range(n) for j in range(i, n) if unit not in (i, j)]
        for values in product(range(n), repeat=len(free)):
            mul = [[0] * n for _ in range(n)]
            for i in range(n):
                mul[unit][i] = mul[i][unit] = i
            for (i, j), v in zip(free, values):
                mul[i][j] = mul[j][i] = v
            if not all(mul[i][j] <= mul[i][j + 1] for i in range(n) for j in range(n - 1)):
                continue
            if not all(mul[mul[a][b]][c] == mul[a][mul[b][c]]
                       for a in range(n) for b in range(n) for c in range(n)):
                continue
            s = Posemigroup(chain, freeze(mul), unit)
            if compute_residuals(s) is None:
                continue
            out.append(residuated_lattice(chain, mul, unit))
    return out


def enumerate_posemigroups(n: int, up_to_iso: bool = True) -> list[Posemigroup]:
    """Isotone associative multiplications on every poset of size n."""
    _bounded("posemigroup", n)
    out = []
    cells = [(i, j) for i in range(n) for j in range(n)]
    for p in enumerate_posets(n, up_to_iso=False):
        le = p.leq
        mul = [[None] * n for _ in range(n)]

        def ok(i, j):
            v = mul[i][j]
            for a, b in cells[:cells.index((i, j))]:
                w = mul[a][b]
                if a == i and le[b][j] and not le[w][v]:
                    return False
                if a == i and le[j][b] and not le[v][w]:
                    return False
                if b == j and le[a][i] and not le[w][v]:
                    return False
                if b == j and le[i][a] and not le[v][w]:
                    return False
            return True

        def fill(k):
            if k == len(cells):
                if all(mul[mul[a][b]][c] == mul[a][mul[b][c]]
                       for a in range(n) for b in range(n) for c in range(n)):
                    s = Posemigroup(p, freeze(mul))
                    yield Posemigroup(p, s.mul, unit_of(s))
                return
            i, j = cells[k]
            for v in range(n):
                mul[i][j] = v
                if ok(i, j):
                    yield from fill(k + 1)
            mul[i][j] = None

        out.extend(fill(0))
    if up_to_iso:
        out = list(_iso_classes(out, n, lambda s: (s.poset.leq, s.mul)))
    return out


def enumerate_structures(kind: str, max_size: int, up_to_iso: bool = True) -> Iterator:
    """All structures of ``kind`` with sizes 1..max_size, in a fixed order."""
    makers = {
        "poset": lambda n: enumerate_posets(n, up_to_iso),
        "lattice": lambda n: enumerate_lattices(n, up_to_iso),
        "distributive-lattice": lambda n: enumerate_lattices(n, up_to_iso, distributive=True),
        "brouwerian": lambda n: enumerate_brouwerian(n, up_to_iso),
        "boolean-pointed": lambda n: enumerate_brouwerian(n, up_to_iso, boolean_pointed=True),
        "residuated-chain": lambda n: commutative_residuated_chains(n, up_to_iso),
        "posemigroup": lambda n: enumerate_posemigroups(n, up_to_iso),
    }
    if kind not in makers:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    _bounded(kind, max_size)
    for n in range(1, max_size + 1):
        yield from makers[kind](n)


# random generation

def _random_poset(rng: random.Random, n: int) -> Poset:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    perm = list(range(n))
    rng.shuffle(perm)
    return Poset.from_relation(n, [(perm[i], perm[j]) for i, j in pairs])


@lru_cache(maxsize=None)
def _isotone_maps(p: Poset) -> list[tuple[int, ...]]:
    le = p.leq
    return [f for f in product(range(p.size), repeat=p.size)
            if all(le[f[i]][f[j]] for i in p.elements for j in p.elements if le[i][j])]


def _random_action(rng, s: Posemigroup, module: Poset, maps, left: bool, budget: int = 2000):
    """One isotone map per scalar with f(ab) = f(a)f(b) (or f(b)f(a) on the right).

    A depth-first search over shuffled candidates; constant maps onto a
    fixpoint always qualify, so it rarely runs out of budget.
    """
    n, mul, le, mle = s.size, s.mul, s.poset.leq, module.leq
    rows: list = [None] * n
    steps = 0

    def compose(f, g):  # x -> f(g(x))
        return tuple(f[g[x]] for x in range(len(g)))

    def ok(upto):
        for a in range(upto + 1):
            for b in range(upto + 1):
                c = mul[a][b]
                if c <= upto:
                    want = compose(rows[a], rows[b]) if left else compose(rows[b], rows[a])
                    if rows[c] != want:
                        return False
                if le[a][b] and not all(mle[u][v] for u, v in zip(rows[a], rows[b])):
                    return False
        return True

    def extend(a):
        nonlocal steps
        if a == n:
            return True
        for f in rng.sample(maps, len(maps)):
            steps += 1
            if steps > budget:
                return False
            rows[a] = f
            if ok(a) and extend(a + 1):
                return True
        rows[a] = None
        return False

    return rows if extend(0) else None


def _random_table(rng, rows, cols, bound):
    return tuple(tuple(rng.randrange(bound) for _ in range(cols)) for _ in range(rows))


def random_structure(kind: str, size, seed: int, retries: int = RETRIES):
    """A structure of ``kind`` drawn deterministically from ``seed``.

    Candidates are generated at random and filtered through the kind's base
    checks; GenerationExhausted is raised after ``retries`` rejections.
    ``size`` is a pair of sort sizes for bimodules.
    """
    rng = random.Random(seed)
    for _ in range(retries):
        candidate = _candidate(kind, size, rng)
        if candidate is not None:
            return candidate
    raise GenerationExhausted(f"no valid {kind} of size {size} after {retries} tries")


def _candidate(kind, size, rng):
    if kind == "poset":
        return _random_poset(rng, size)
    if kind == "posemigroup":
        s = Posemigroup(_random_poset(rng, size), _random_table(rng, size, size, size))
        if not check_posemigroup(s):
            return None
        return Posemigroup(s.poset, s.mul, unit_of(s))
    if kind == "brouwerian":
        p = _random_poset(rng, size)
        if not p.is_lattice() or not _is_distributive(p):
            return None
        b = brouwerian_from_lattice(p, rng.randrange(size))
        return b if check_brouwerian(b) else None
    if kind == "bimodule":
        ns, nm = size
        s = _candidate("posemigroup", ns, rng)
        module = _random_poset(rng, nm)
        if s is None or module.join_table is None:
            return None
        maps = _isotone_maps(module)
        lrows = _random_action(rng, s, module, maps, left=True)
        rrows = _random_action(rng, s, module, maps, left=False)
        if lrows is None or rrows is None:
            return None
        lact = tuple(tuple(f[x] for x in range(nm)) for f in lrows)
        ract = tuple(tuple(rrows[a][x] for a in range(ns)) for x in range(nm))
        m = Bimodule(s, module, module.join_table, lact, ract)
        return m if check_bimodule(m, "biaction") else None
    raise ValueError(f"random generation does not support kind {kind!r}")


__all__ = [
    "KINDS", "DEFAULT_MAX_SIZE", "max_size", "canonical_form", "labeled_posets", "enumerate_posets",
    "count_posets_by_search", "check_poset_counts", "enumerate_lattices", "enumerate_brouwerian",
    "commutative_residuated_chains", "enumerate_posemigroups", "enumerate_structures",
    "random_structure",
]
