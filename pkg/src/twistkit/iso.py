"""Many-sorted isomorphism checking and search.

A structure is flattened into a :class:`SortedAlgebra`: a size per sort and
a list of operations, each a dict from argument tuples to results.  Order
relations become boolean-valued operations.  Isomorphisms are checked by
transporting every table along candidate bijections, and searched for by
backtracking with fully-assigned entries checked eagerly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BoundExceeded
from .report import CheckReport, failed, passed

MAX_SEARCH = 64
BOOL = None  # result sort of a relation


@dataclass(frozen=True)
class Operation:
    name: str
    args: tuple[int, ...]
    result: int | None
    table: dict


@dataclass(frozen=True)
class SortedAlgebra:
    sizes: tuple[int, ...]
    ops: tuple[Operation, ...]


def _binary(name, s1, s2, out, table, n1, n2) -> Operation:
    return Operation(name, (s1, s2), out,
                     {(i, j): table[i][j] for i in range(n1) for j in range(n2)})


def _unary(name, s, out, table) -> Operation:
    return Operation(name, (s,), out, {(i,): v for i, v in enumerate(table)})


def _const(name, s, value) -> Operation:
    return Operation(name, (), s, {(): value})


def _order(name, s, poset) -> Operation:
    return _binary(name, s, s, BOOL, poset.leq, poset.size, poset.size)


def posemigroup_algebra(s, extra: Sequence[tuple[str, object]] = (),
                       definable: bool = False) -> SortedAlgebra:
    """Order and product; units and lattice operations only if ``definable``.

    Those are determined by order and product, so leaving them out does not
    change which bijections are isomorphisms.
    """
    n = s.size
    ops = [_order("leq", 0, s.poset), _binary("mul", 0, 0, 0, s.mul, n, n)]
    if definable:
        for name in ("meet", "join"):
            t = getattr(s, name)
            if t is not None:
                ops.append(_binary(name, 0, 0, 0, t, n, n))
        if s.unit is not None:
            ops.append(_const("unit", 0, s.unit))
    for name, t in extra:
        if t is None:
            continue
        if isinstance(t, int):
            ops.append(_const(name, 0, t))
        elif isinstance(t[0], int) or t[0] is None:
            ops.append(_unary(name, 0, 0, t))
        else:
            ops.append(_binary(name, 0, 0, 0, t, n, n))
    return SortedAlgebra((n,), tuple(ops))


def bimodule_algebra(m) -> SortedAlgebra:
    """Sort 0 is S, sort 1 is M."""
    ns, nm = m.scalars.size, m.module.size
    base = posemigroup_algebra(m.scalars)
    ops = list(base.ops) + [
        _order("mleq", 1, m.module),
        _binary("mjoin", 1, 1, 1, m.mjoin, nm, nm),
        _binary("lact", 0, 1, 1, m.lact, ns, nm),
        _binary("ract", 1, 0, 1, m.ract, nm, ns),
    ]
    if m.point is not None:
        ops.append(_const("point", 1, m.point))
    if m.residuals is not None:
        r = m.residuals
        ops += [
            _binary("bslres", 0, 1, 1, r.bslres, ns, nm),
            _binary("slres", 1, 1, 0, r.slres, nm, nm),
            _binary("bsrres", 1, 1, 0, r.bsrres, nm, nm),
            _binary("srres", 1, 0, 1, r.srres, nm, ns),
        ]
    return SortedAlgebra((ns, nm), tuple(ops))


def pair_algebra(t) -> SortedAlgebra:
    """A twistable pair: sort 0 is S+, sort 1 is S-."""
    plus, minus = t.plus, t.minus.base
    n0, n1 = plus.size, minus.size
    ops = list(posemigroup_algebra(plus).ops)
    ops += [
        _order("leq-", 1, minus.poset),
        _binary("mul-", 1, 1, 1, minus.mul, n1, n1),
        _binary("lres-", 1, 1, 1, t.minus.lres, n1, n1),
        _binary("rres-", 1, 1, 1, t.minus.rres, n1, n1),
        _unary("lam", 0, 1, t.lam),
        _unary("rho", 1, 0, t.rho),
    ]
    if t.point is not None:
        ops.append(_const("point", 1, t.point))
    return SortedAlgebra((n0, n1), tuple(ops))


def _signature(a: SortedAlgebra):
    return a.sizes, tuple((o.name, o.args, o.result) for o in a.ops)


def check_iso(src: SortedAlgebra, dst: SortedAlgebra, maps: Sequence[Sequence[int]],
              axiom: str = "iso") -> CheckReport:
    """Check that ``maps`` (one per sort) is an isomorphism src -> dst."""
    if _signature(src)[1] != _signature(dst)[1]:
        return failed(f"{axiom}.signature", (), detail="operation lists differ")
    for k, (n, f) in enumerate(zip(src.sizes, maps)):
        if n != dst.sizes[k] or len(f) != n or sorted(f) != list(range(n)):
            return failed(f"{axiom}.bijective", (k,), ("sort",), detail="map is not a bijection")
    for a, b in zip(src.ops, dst.ops):
        for args, res in a.table.items():
            image = tuple(maps[s][x] for s, x in zip(a.args, args))
            want = res if a.result is BOOL or res is None else maps[a.result][res]
            if b.table.get(image) != want:
                return failed(f"{axiom}.{a.name}", args, detail="table not preserved")
    return passed(axiom)


def find_iso(src: SortedAlgebra, dst: SortedAlgebra) -> tuple[tuple[int, ...], ...] | None:
    """Backtracking search for an isomorphism; None if there is none."""
    if _signature(src) != _signature(dst):
        return None
    if sum(src.sizes) > MAX_SEARCH:
        raise BoundExceeded(f"isomorphism search is bounded to {MAX_SEARCH} elements")
    slots = [(s, x) for s, n in enumerate(src.sizes) for x in range(n)]
    # constants first, they are forced
    forced = {}
    for a, b in zip(src.ops, dst.ops):
        if not a.args:
            key = (a.result, a.table[()])
            if forced.get(key, b.table[()]) != b.table[()]:
                return None
            forced[key] = b.table[()]
    slots.sort(key=lambda sx: sx not in forced)
    position = {sx: i for i, sx in enumerate(slots)}
    # entries become checkable once their latest slot is assigned
    pending = [[] for _ in slots]
    for oi, a in enumerate(src.ops):
        for args, res in a.table.items():
            mentioned = [position[(s, x)] for s, x in zip(a.args, args)]
            if a.result is not BOOL and res is not None:
                mentioned.append(position[(a.result, res)])
            if mentioned:
                pending[max(mentioned)].append((oi, args, res))
    maps = [[None] * n for n in src.sizes]
    used = [set() for _ in src.sizes]

    def consistent(i):
        for oi, args, res in pending[i]:
            a, b = src.ops[oi], dst.ops[oi]
            image = tuple(maps[s][x] for s, x in zip(a.args, args))
            want = res if a.result is BOOL or res is None else maps[a.result][res]
            if b.table.get(image) != want:
                return False
        return True

    def extend(i):
        if i == len(slots):
            return True
        s, x = slots[i]
        candidates = [forced[(s, x)]] if (s, x) in forced else range(src.sizes[s])
        for y in candidates:
            if y in used[s]:
                continue
            maps[s][x] = y
            used[s].add(y)
            if consistent(i) and extend(i + 1):
                return True
            used[s].discard(y)
            maps[s][x] = None
        return False

    if not extend(0):
        return None
    return tuple(tuple(f) for f in maps)


def check_bimodule_iso(src, dst, scalar_map, module_map, axiom: str = "bimodule.iso") -> CheckReport:
    return check_iso(bimodule_algebra(src), bimodule_algebra(dst), (scalar_map, module_map), axiom)


__all__ = [
    "Operation", "SortedAlgebra", "posemigroup_algebra", "bimodule_algebra", "pair_algebra",
    "check_iso", "find_iso", "check_bimodule_iso", "MAX_SEARCH",
]
