"""Nagata products, the σ/γ recovery maps, and the Nagata axiom suites.

A :class:`NagataStructure` is a posemigroup with two idempotent maps σ and
γ, a point 0 and the partial operations

* ``gres_l[m][n] = m \\ γn``
* ``gres_r[n][m] = γn / m``
* ``gjoin[m][n] = γm ⊔ γn`` (join inside the γ-image)

Entries of these tables are ``None`` where the residual or join does not
exist.  Products built from bimodules keep their pairs ``(a, x)`` in
lexicographic order in ``pairs``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import chain
from typing import Sequence

from .algebra import (Posemigroup, ResiduatedStructure, check_residuated, compute_residuals,
                      restrict_posemigroup, unit_of)
from .bimodule import ActionResiduals, Bimodule
from .errors import AxiomFailure, MissingComponent, NotCyclic, NotPositive
from .order import EndoMap, Poset, Table, check_operator, tabulate
from .report import CheckReport, Sort, failed, first_failure, forall

Partial = tuple[tuple["int | None", ...], ...]


@dataclass(frozen=True)
class NagataStructure:
    carrier: Posemigroup
    sigma: EndoMap | None
    gamma: EndoMap | None
    point: int | None
    one: int | None = None
    gres_l: Partial | None = None
    gres_r: Partial | None = None
    gjoin: Partial | None = None
    oplus: Table | None = None
    otimes: Table | None = None
    negation: EndoMap | None = None
    lres: Table | None = None
    rres: Table | None = None
    pairs: tuple[tuple[int, int], ...] | None = None
    restricted: bool = False
    source: Bimodule | None = field(default=None, compare=False, repr=False)

    @property
    def size(self) -> int:
        return self.carrier.size

    def label(self, i: int) -> str:
        return self.carrier.label(i)

    @property
    def poset(self) -> Poset:
        return self.carrier.poset

    @property
    def elements(self) -> range:
        return self.carrier.elements

    @cached_property
    def index(self) -> dict:
        """Pair -> element index, for products built from a bimodule."""
        return {p: i for i, p in enumerate(self.pairs or ())}

    def residuated(self) -> ResiduatedStructure:
        if self.lres is None or self.rres is None:
            raise MissingComponent("full residual tables are absent")
        return ResiduatedStructure(self.carrier, self.lres, self.rres)

    @cached_property
    def sigma_image(self) -> tuple[int, ...]:
        return self.sigma.image()

    @cached_property
    def gamma_image(self) -> tuple[int, ...]:
        return self.gamma.image()


def _pair_labels(m: Bimodule, pairs) -> tuple[str, ...]:
    return tuple(f"<{m.scalars.label(a)},{m.module.label(x)}>" for a, x in pairs)


def _require_maps(n: NagataStructure) -> None:
    if n.sigma is None or n.gamma is None or n.point is None:
        raise MissingComponent("structure lacks sigma, gamma or the point")


# -- constructions ----------------------------------------------------------

def _product_tables(m: Bimodule, pairs, want_residuals: bool | None):
    """Order, multiplication and optional lattice/residual tables on ``pairs``.

    Tables are computed by the componentwise formulas; an entry that falls
    outside ``pairs`` makes the whole table absent.
    """
    S, M = m.scalars, m.module
    mul, la, ra, mj = S.mul, m.lact, m.ract, m.mjoin
    index = {p: i for i, p in enumerate(pairs)}
    n = len(pairs)

    def table(fn):
        rows = []
        for p in pairs:
            row = []
            for q in pairs:
                r = index.get(fn(p, q))
                if r is None:
                    return None
                row.append(r)
            rows.append(tuple(row))
        return tuple(rows)

    poset = Poset(n, tabulate(n, n, lambda i, j: S.poset.leq[pairs[i][0]][pairs[j][0]]
                              and M.leq[pairs[i][1]][pairs[j][1]]),
                  _pair_labels(m, pairs))
    prod = table(lambda p, q: (mul[p[0]][q[0]], mj[ra[p[1]][q[0]]][la[p[0]][q[1]]]))
    if prod is None:
        raise AxiomFailure(failed("nagata.product.closed", (), detail="universe not closed under products"))
    meet = join = None
    if S.meet is not None and m.mmeet is not None:
        meet = table(lambda p, q: (S.meet[p[0]][q[0]], m.mmeet[p[1]][q[1]]))
    if S.join is not None:
        join = table(lambda p, q: (S.join[p[0]][q[0]], mj[p[1]][q[1]]))

    lres = rres = None
    if want_residuals is not False:
        sres = compute_residuals(S)
        r = m.residuals
        if sres is None or r is None or S.meet is None:
            if want_residuals:
                raise MissingComponent("product residuals need residuated scalars with meets "
                                       "and a residuated biaction")
        else:
            sm = S.meet
            lres = table(lambda p, q: (sm[sres.lres[p[0]][q[0]]][r.bsrres[p[1]][q[1]]],
                                       r.bslres[p[0]][q[1]]))
            rres = table(lambda p, q: (sm[sres.rres[p[0]][q[0]]][r.slres[p[1]][q[1]]],
                                       r.srres[p[1]][q[0]]))
            if want_residuals and (lres is None or rres is None):
                raise MissingComponent("residuals leave the restricted universe")
    return poset, prod, meet, join, lres, rres, index


def _attach_maps(m: Bimodule, pairs, index, restricted: bool, require: bool):
    """σ, γ, point and the γ-tables when the bimodule is cyclic and residuated."""
    z, r = m.point, m.residuals
    if z is None or r is None or not m.is_cyclic():
        if require:
            raise MissingComponent("sigma/gamma need a cyclic pointed residuated bimodule")
        return {}
    S, la, ra, mj = m.scalars, m.lact, m.ract, m.mjoin

    def eps_m(x):
        return index[(r.bsrres[z][x], x)]

    sigma = tuple(index[(a, la[a][z])] for a, _ in pairs)
    gamma = tuple(eps_m(x) for _, x in pairs)
    n = len(pairs)
    if restricted:
        gres_l = tabulate(n, n, lambda i, j: index[(r.bsrres[pairs[i][1]][pairs[j][1]],
                                                    r.bslres[pairs[i][0]][pairs[j][1]])])
        gres_r = tabulate(n, n, lambda j, i: index[(r.slres[pairs[j][1]][pairs[i][1]],
                                                    r.srres[pairs[j][1]][pairs[i][0]])])
    else:
        gres_l = tabulate(n, n, lambda i, j: index[(
            r.bsrres[mj[ra[z][pairs[i][0]]][pairs[i][1]]][pairs[j][1]],
            r.bslres[pairs[i][0]][pairs[j][1]])])
        gres_r = tabulate(n, n, lambda j, i: index[(
            r.slres[pairs[j][1]][mj[pairs[i][1]][la[pairs[i][0]][z]]],
            r.srres[pairs[j][1]][pairs[i][0]])])
    gjoin = tabulate(n, n, lambda i, j: eps_m(mj[pairs[i][1]][pairs[j][1]]))
    one = None
    if S.unit is not None:
        one = index.get((S.unit, la[S.unit][z]))
    out = dict(
        sigma=sigma, gamma=gamma, point=eps_m(z), gres_l=gres_l, gres_r=gres_r,
        gjoin=gjoin, one=one,
    )
    if S.meet is not None:
        oplus = [[index.get((S.meet[p[0]][q[0]], mj[p[1]][q[1]])) for q in pairs] for p in pairs]
        if all(v is not None for row in oplus for v in row):
            out["oplus"] = tuple(map(tuple, oplus))
    if S.join is not None and m.mmeet is not None:
        otimes = [[index.get((S.join[p[0]][q[0]], m.mmeet[p[1]][q[1]])) for q in pairs] for p in pairs]
        if all(v is not None for row in otimes for v in row):
            out["otimes"] = tuple(map(tuple, otimes))
    return out


def _build(m: Bimodule, pairs, restricted: bool, residuals, require_maps: bool) -> NagataStructure:
    poset, prod, meet, join, lres, rres, index = _product_tables(m, pairs, residuals)
    carrier = Posemigroup(poset, prod, None, meet, join)
    carrier = replace(carrier, unit=unit_of(carrier))
    extra = _attach_maps(m, pairs, index, restricted, require_maps)
    sigma = gamma = None
    if extra:
        sigma = EndoMap(poset, extra.pop("sigma"))
        gamma = EndoMap(poset, extra.pop("gamma"))
    point = extra.pop("point", None)
    return NagataStructure(carrier, sigma, gamma, point, lres=lres, rres=rres,
                           pairs=tuple(pairs), restricted=restricted, source=m, **extra)


def nagata_product(m: Bimodule, residuals: bool | None = None,
                   require_maps: bool = False) -> NagataStructure:
    """S x M with <a,x><b,y> = <ab, x*b v a*y>.

    ``residuals=None`` attaches the residual tables when the bimodule allows
    them; ``True`` demands them.  σ, γ and the point are attached whenever
    the bimodule is cyclic, pointed and residuated.
    """
    pairs = [(a, x) for a in m.scalars.elements for x in m.module.elements]
    return _build(m, pairs, False, residuals, require_maps)


def restricted_universe(m: Bimodule) -> list[tuple[int, int]]:
    if m.point is None:
        raise MissingComponent("restricted product needs a point")
    z, le = m.point, m.module.leq
    return [(a, x) for a in m.scalars.elements for x in m.module.elements
            if le[m.ract[z][a]][x] and le[m.lact[a][z]][x]]


def restricted_nagata_product(m: Bimodule, residuals: bool | None = None,
                              require_maps: bool = False) -> NagataStructure:
    """The subposemigroup of pairs with 0*a <= x and a*0 <= x."""
    return _build(m, restricted_universe(m), True, residuals, require_maps)


def embed_scalar(m: Bimodule, a: int) -> tuple[int, int]:
    if not m.is_cyclic():
        raise NotCyclic("embedding needs a cyclic point")
    return (a, m.lact[a][m.point])


def embed_module(m: Bimodule, x: int) -> tuple[int, int]:
    if not m.is_cyclic():
        raise NotCyclic("embedding needs a cyclic point")
    if m.residuals is None:
        raise MissingComponent("embedding needs action residuals")
    return (m.residuals.bsrres[m.point][x], x)


def double_division_image(n: ResiduatedStructure, p: int) -> tuple[int, ...]:
    """Image of x -> (p\\x)/p for a positive element p."""
    le, mul, lres, rres = n.poset.leq, n.mul, n.lres, n.rres
    for x in range(n.size):
        if not (le[lres[p][x]][x] and le[rres[x][p]][x] and le[x][mul[p][x]] and le[x][mul[x][p]]):
            raise NotPositive(f"{n.label(p)} is not positive at x={n.label(x)}")
    return tuple(sorted({rres[lres[p][x]][p] for x in range(n.size)}))


# -- abstract structures ----------------------------------------------------

def gamma_tables(carrier: Posemigroup, gamma: Sequence[int]):
    """γ-residuals and γ-joins found by scanning; None marks absence."""
    p, mul, size = carrier.poset, carrier.mul, carrier.size
    img = sorted(set(gamma))
    gres_l = tuple(tuple(p.maximum(k for k in range(size) if p.leq[mul[m][k]][gamma[t]])
                         for t in range(size)) for m in range(size))
    gres_r = tuple(tuple(p.maximum(k for k in range(size) if p.leq[mul[k][m]][gamma[t]])
                         for m in range(size)) for t in range(size))
    gjoin = tuple(tuple(p.minimum(z for z in img if p.leq[gamma[i]][z] and p.leq[gamma[j]][z])
                        for j in range(size)) for i in range(size))
    return gres_l, gres_r, gjoin


def nagata_structure(carrier: Posemigroup, sigma: Sequence[int], gamma: Sequence[int],
                     point: int, *, one: int | None = None, restricted: bool = False,
                     with_residuals: bool = True, **extra) -> NagataStructure:
    """Assemble a structure, filling the γ-tables (and residuals) by scan."""
    gres_l, gres_r, gjoin = gamma_tables(carrier, gamma)
    lres = rres = None
    if with_residuals:
        r = compute_residuals(carrier)
        if r is not None:
            lres, rres = r.lres, r.rres
    if one is None and restricted:
        one = carrier.unit
    return NagataStructure(carrier, EndoMap(carrier.poset, tuple(sigma)),
                           EndoMap(carrier.poset, tuple(gamma)), point, one,
                           gres_l, gres_r, gjoin, lres=lres, rres=rres,
                           restricted=restricted, **extra)


def substructure(n: NagataStructure, keep: Sequence[int]) -> NagataStructure:
    """Restrict to the elements ``keep``; every table must stay inside."""
    keep = list(keep)
    index = {e: i for i, e in enumerate(keep)}
    carrier = restrict_posemigroup(n.carrier, keep)
    if carrier is None:
        raise AxiomFailure(failed("nagata.substructure.closed", tuple(keep), detail="not closed under products"))

    def move(f):
        if f is None:
            return None
        try:
            return tuple(index[f[e]] for e in keep)
        except KeyError:
            raise AxiomFailure(failed("nagata.substructure.closed", tuple(keep),
                                      detail="not closed under a unary map")) from None

    def move2(t):
        if t is None:
            return None
        rows = [[index.get(t[a][b]) for b in keep] for a in keep]
        if any(v is None for row in rows for v in row):
            return None
        return tuple(map(tuple, rows))

    neg = move(n.negation.table) if n.negation is not None else None
    out = nagata_structure(
        carrier, move(n.sigma.table), move(n.gamma.table), index[n.point],
        one=index.get(n.one) if n.one is not None else None, restricted=n.restricted,
        oplus=move2(n.oplus), otimes=move2(n.otimes),
        pairs=tuple(n.pairs[e] for e in keep) if n.pairs else None,
    )
    if neg is not None:
        out = replace(out, negation=EndoMap(carrier.poset, neg))
    return out


# -- axiom suites -----------------------------------------------------------

def _sorts(n: NagataStructure):
    N = Sort.of(n)
    return N, Sort.of(n, n.sigma_image), Sort.of(n, n.gamma_image)


def operator_checks(n: NagataStructure, restricted: bool):
    """Pre-conucleus σ and σ-structural σ-closure γ with γ0 = 0."""
    _require_maps(n)
    N, NS, NG = _sorts(n)
    s, g, mul, le = n.sigma.table, n.gamma.table, n.carrier.mul, n.poset.leq
    yield forall("nagata.sigma.isotone", [("x", N), ("y", N)],
                 lambda x, y: not le[x][y] or le[s[x]][s[y]])
    yield forall("nagata.sigma.idempotent", [("x", N)], lambda x: s[s[x]] == s[x])
    yield forall("nagata.sigma.closed", [("a", NS), ("b", NS)],
                 lambda a, b: s[mul[a][b]] == mul[a][b])
    yield forall("nagata.gamma.isotone", [("x", N), ("y", N)],
                 lambda x, y: not le[x][y] or le[g[x]][g[y]])
    yield forall("nagata.gamma.idempotent", [("x", N)], lambda x: g[g[x]] == g[x])
    yield forall("nagata.gamma.sigma-closure", [("a", NS), ("x", NG)],
                 lambda a, x: le[mul[a][x]][g[mul[a][x]]] and le[mul[x][a]][g[mul[x][a]]])
    yield forall("nagata.gamma.sigma-structural", [("a", NS), ("m", N)],
                 lambda a, m: le[mul[a][g[m]]][g[mul[a][m]]] and le[mul[g[m]][a]][g[mul[m][a]]])
    yield forall("nagata.point", [("0", Sort((n.point,), n.label))], lambda z: g[z] == z)
    if restricted:
        yield check_operator(n.sigma, "interior", "nagata.restricted.sigma-interior")
        yield check_operator(n.gamma, "closure", "nagata.restricted.gamma-closure")


def gamma_table_checks(n: NagataStructure):
    """The γ-residuals and γ-joins exist and are what they claim to be."""
    N, _, NG = _sorts(n)
    g, mul, le = n.gamma.table, n.carrier.mul, n.poset.leq
    for name in ("gres_l", "gres_r", "gjoin"):
        if getattr(n, name) is None:
            raise MissingComponent(f"structure lacks the {name} table")
    gl, gr, gj = n.gres_l, n.gres_r, n.gjoin
    yield forall("nagata.gamma-residuated", [("m", N), ("n", N)],
                 lambda m, t: gl[m][t] is not None and gr[t][m] is not None)
    yield forall("nagata.gamma-residuated.left", [("m", N), ("n", N), ("k", N)],
                 lambda m, t, k: le[k][gl[m][t]] == le[mul[m][k]][g[t]])
    yield forall("nagata.gamma-residuated.right", [("m", N), ("n", N), ("k", N)],
                 lambda m, t, k: le[k][gr[t][m]] == le[mul[k][m]][g[t]])
    yield forall("nagata.gamma-join", [("m", N), ("n", N)],
                 lambda m, t: gj[m][t] is not None and g[gj[m][t]] == gj[m][t]
                 and gj[m][t] == n.poset.minimum(z for z in n.gamma_image
                                                 if le[g[m]][z] and le[g[t]][z]))


def posemigroup_equations(n: NagataStructure):
    N, _, _ = _sorts(n)
    s, g, mul, le, z = n.sigma.table, n.gamma.table, n.carrier.mul, n.poset.leq, n.point
    gl, gr, gj = n.gres_l, n.gres_r, n.gjoin
    yield forall("nagata.sigma-mul", [("x", N), ("y", N)],
                 lambda x, y: s[mul[x][y]] == mul[s[x]][s[y]])
    yield forall("nagata.gamma-mul", [("x", N), ("y", N)],
                 lambda x, y: g[mul[x][y]] == gj[g[mul[g[x]][s[y]]]][g[mul[s[x]][g[y]]]])
    # γx is joined with γ(0·σx) and γ(σx·0); in the restricted case these
    # are below γx and the displayed form σ(x\γy) = σ(γx\γy) is recovered
    lower = [gj[g[mul[z][s[x]]]][x] for x in n.elements]
    upper = [gj[x][g[mul[s[x]][z]]] for x in n.elements]
    yield forall("nagata.sigma-lres", [("x", N), ("y", N)],
                 lambda x, y: s[gl[x][y]] == s[gl[lower[x]][y]])
    yield forall("nagata.gamma-lres", [("x", N), ("y", N)],
                 lambda x, y: g[gl[x][y]] == g[gl[s[x]][y]])
    yield forall("nagata.sigma-rres", [("x", N), ("y", N)],
                 lambda x, y: s[gr[y][x]] == s[gr[y][upper[x]]])
    yield forall("nagata.gamma-rres", [("x", N), ("y", N)],
                 lambda x, y: g[gr[y][x]] == g[gr[y][s[x]]])
    yield from point_equations(n, lambda x: gl[z][x], lambda x: gr[x][z])
    yield forall("nagata.quasi-inequality", [("x", N), ("y", N)],
                 lambda x, y: not (le[s[x]][s[y]] and le[g[x]][g[y]]) or le[x][y])


def point_equations(n: NagataStructure, zero_under, over_zero):
    """σγx = σ(0\\γx), γσx = γ(0·σx), σγx = σ(γx/0), γσx = γ(σx·0)."""
    N = Sort.of(n)
    s, g, mul, z = n.sigma.table, n.gamma.table, n.carrier.mul, n.point
    yield forall("nagata.point-lres", [("x", N)], lambda x: s[g[x]] == s[zero_under(g[x])])
    yield forall("nagata.point-lmul", [("x", N)], lambda x: g[s[x]] == g[mul[z][s[x]]])
    yield forall("nagata.point-rres", [("x", N)], lambda x: s[g[x]] == s[over_zero(g[x])])
    yield forall("nagata.point-rmul", [("x", N)], lambda x: g[s[x]] == g[mul[s[x]][z]])


def displayed_sigma_residual_equations(n: NagataStructure):
    """σ(x\γy) = σ(γx\γy) and its mirror, exactly as usually displayed.

    These hold in restricted structures but can fail in a full Nagata
    product, where 0*a need not lie below x.
    """
    N = Sort.of(n)
    s, g, gl, gr = n.sigma.table, n.gamma.table, n.gres_l, n.gres_r
    yield forall("nagata.displayed.sigma-lres", [("x", N), ("y", N)],
                 lambda x, y: s[gl[x][y]] == s[gl[g[x]][y]])
    yield forall("nagata.displayed.sigma-rres", [("x", N), ("y", N)],
                 lambda x, y: s[gr[y][x]] == s[gr[y][g[x]]])


def derived_posemigroup_equations(n: NagataStructure):
    """The strong forms, which follow from the weak ones in the definition."""
    N = Sort.of(n)
    s, g = n.sigma.table, n.gamma.table
    gl, gr = n.gres_l, n.gres_r
    yield forall("nagata.derived.gamma-lres-strong", [("x", N), ("y", N)],
                 lambda x, y: g[gl[x][y]] == gl[s[x]][y])
    yield forall("nagata.derived.gamma-rres-strong", [("x", N), ("y", N)],
                 lambda x, y: g[gr[y][x]] == gr[y][s[x]])


def check_nagata_posemigroup(n: NagataStructure, restricted: bool | None = None) -> CheckReport:
    if restricted is None:
        restricted = n.restricted
    axiom = "nagata.restricted-posemigroup" if restricted else "nagata.posemigroup"
    return first_failure(axiom, chain(
        operator_checks(n, restricted), gamma_table_checks(n),
        posemigroup_equations(n), derived_posemigroup_equations(n)))


def _require_lattice(n: NagataStructure, restricted: bool) -> None:
    c = n.carrier
    for name, value in (("meet", c.meet), ("join", c.join), ("lres", n.lres), ("rres", n.rres)):
        if value is None:
            raise MissingComponent(f"Nagata lattice needs the {name} table")
    if restricted and c.unit is None:
        raise MissingComponent("restricted Nagata lattice needs a unit")
    if not restricted and n.one is None:
        raise MissingComponent("Nagata lattice needs the constant 1")


def lattice_equations(n: NagataStructure):
    N = Sort.of(n)
    s, g, mul, le = n.sigma.table, n.gamma.table, n.carrier.mul, n.poset.leq
    meet, join, lr, rr, one = n.carrier.meet, n.carrier.join, n.lres, n.rres, n.one
    yield forall("nagata.lattice.sigma-mul", [("x", N), ("y", N)],
                 lambda x, y: s[mul[x][y]] == mul[s[x]][s[y]])
    # the right-hand join is closed under γ before comparing
    yield forall("nagata.lattice.gamma-mul", [("x", N), ("y", N)],
                 lambda x, y: g[mul[x][y]] == g[join[mul[s[x]][g[y]]][mul[g[x]][s[y]]]])
    yield forall("nagata.lattice.sigma-meet", [("x", N), ("y", N)],
                 lambda x, y: s[meet[x][y]] == s[meet[s[x]][s[y]]])
    yield forall("nagata.lattice.gamma-join", [("x", N), ("y", N)],
                 lambda x, y: g[join[x][y]] == g[join[g[x]][g[y]]])
    yield forall("nagata.lattice.sigma-join", [("x", N), ("y", N)],
                 lambda x, y: s[join[x][y]] == join[s[x]][s[y]])
    yield forall("nagata.lattice.gamma-meet", [("x", N), ("y", N)],
                 lambda x, y: g[meet[x][y]] == meet[g[x]][g[y]])
    yield forall("nagata.lattice.sigma-lres", [("x", N), ("y", N)],
                 lambda x, y: s[lr[x][y]] == s[meet[lr[s[x]][s[y]]][lr[g[x]][g[y]]]])
    yield forall("nagata.lattice.gamma-lres", [("x", N), ("y", N)],
                 lambda x, y: lr[s[x]][g[y]] == g[lr[x][y]])
    yield forall("nagata.lattice.sigma-rres", [("x", N), ("y", N)],
                 lambda x, y: s[rr[y][x]] == s[meet[rr[s[y]][s[x]]][rr[g[y]][g[x]]]])
    yield forall("nagata.lattice.gamma-rres", [("x", N), ("y", N)],
                 lambda x, y: rr[g[y]][s[x]] == g[rr[y][x]])
    z = n.point
    yield from point_equations(n, lambda x: lr[z][x], lambda x: rr[x][z])
    yield forall("nagata.lattice.one-sigma", [("1", Sort((one,), n.label))], lambda u: s[u] == u)
    yield forall("nagata.lattice.one-lres", [("x", N)], lambda x: le[one][s[lr[x][x]]])
    yield forall("nagata.lattice.one-rres", [("x", N)], lambda x: le[one][s[rr[x][x]]])
    yield forall("nagata.lattice.quasi-lres", [("x", N), ("y", N)],
                 lambda x, y: not le[one][s[lr[x][y]]] or le[x][y])
    yield forall("nagata.lattice.quasi-rres", [("x", N), ("y", N)],
                 lambda x, y: not le[one][s[rr[y][x]]] or le[x][y])


def restricted_lattice_equations(n: NagataStructure):
    N = Sort.of(n)
    s, g, mul = n.sigma.table, n.gamma.table, n.carrier.mul
    meet, join, lr, rr, u = n.carrier.meet, n.carrier.join, n.lres, n.rres, n.carrier.unit
    yield forall("nagata.restricted-lattice.sigma-unital", [("1", Sort((u,), n.label))],
                 lambda e: s[e] == e)
    yield forall("nagata.restricted-lattice.sigma-mul", [("x", N), ("y", N)],
                 lambda x, y: s[mul[x][y]] == mul[s[x]][s[y]])
    yield forall("nagata.restricted-lattice.mul-split", [("x", N), ("y", N)],
                 lambda x, y: mul[x][y] == join[mul[s[x]][y]][mul[x][s[y]]])
    yield forall("nagata.restricted-lattice.lres-split", [("x", N), ("y", N)],
                 lambda x, y: meet[lr[s[x]][y]][lr[x][g[y]]] == lr[x][y])
    yield forall("nagata.restricted-lattice.rres-split", [("x", N), ("y", N)],
                 lambda x, y: meet[rr[x][s[y]]][rr[g[x]][y]] == rr[x][y])
    yield forall("nagata.restricted-lattice.gamma-lres", [("x", N), ("y", N)],
                 lambda x, y: lr[s[x]][g[y]] == g[lr[x][y]])
    yield forall("nagata.restricted-lattice.gamma-rres", [("x", N), ("y", N)],
                 lambda x, y: rr[g[y]][s[x]] == g[rr[y][x]])
    z = n.point
    yield from point_equations(n, lambda x: lr[z][x], lambda x: rr[x][z])


def quasi_inequality(n: NagataStructure) -> CheckReport:
    N = Sort.of(n)
    s, g, le = n.sigma.table, n.gamma.table, n.poset.leq
    return forall("nagata.lemma.quasi-inequality", [("x", N), ("y", N)],
                  lambda x, y: not (le[s[x]][s[y]] and le[g[x]][g[y]]) or le[x][y])


def check_nagata_lattice(n: NagataStructure, restricted: bool | None = None) -> CheckReport:
    if restricted is None:
        restricted = n.restricted
    _require_maps(n)
    _require_lattice(n, restricted)
    r = n.residuated()
    base = [check_residuated(r)]
    if restricted:
        axiom = "nagata.restricted-lattice"
        eqs = restricted_lattice_equations(n)
    else:
        axiom = "nagata.lattice"
        eqs = lattice_equations(n)
    return first_failure(axiom, chain(
        base, operator_checks(n, restricted), eqs, [quasi_inequality(n)]))


def check_bilattice_sesquilattice(n: NagataStructure, variant: str) -> CheckReport:
    if variant not in ("bilattice", "sesquilattice"):
        raise ValueError(f"unknown variant {variant!r}")
    _require_maps(n)
    c = n.carrier
    if n.oplus is None:
        raise MissingComponent("needs the oplus table")
    if variant == "bilattice" and n.otimes is None:
        raise MissingComponent("bilattice needs the otimes table")
    if c.meet is None or c.join is None:
        raise MissingComponent("needs meet and join tables")
    N = Sort.of(n)
    s, g, meet, join, op = n.sigma.table, n.gamma.table, c.meet, c.join, n.oplus

    def checks():
        yield forall(f"nagata.{variant}.sigma-oplus", [("x", N), ("y", N)],
                     lambda x, y: s[op[x][y]] == s[meet[x][y]])
        yield forall(f"nagata.{variant}.gamma-oplus", [("x", N), ("y", N)],
                     lambda x, y: g[op[x][y]] == g[join[x][y]])
        if variant == "bilattice":
            ot = n.otimes
            yield forall("nagata.bilattice.sigma-otimes", [("x", N), ("y", N)],
                         lambda x, y: s[ot[x][y]] == s[join[x][y]])
            yield forall("nagata.bilattice.gamma-otimes", [("x", N), ("y", N)],
                         lambda x, y: g[ot[x][y]] == g[meet[x][y]])

    return first_failure(f"nagata.{variant}", checks())


def check_decomposition(n: NagataStructure) -> CheckReport:
    """m = σm ⊕ γm for every m."""
    if n.oplus is None:
        raise MissingComponent("needs the oplus table")
    s, g, op = n.sigma.table, n.gamma.table, n.oplus
    return forall("nagata.sesquilattice.decomposition", [("m", Sort.of(n))],
                  lambda m: op[s[m]][g[m]] == m)


# -- the structural bimodule and the adjunction -----------------------------

def structural_bimodule(n: NagataStructure, verify: bool = True) -> Bimodule:
    """N_σ acting on N_γ by a*x = γ(a·x) and x*a = γ(x·a)."""
    _require_maps(n)
    if verify:
        report = first_failure("nagata.structural", chain(operator_checks(n, False),
                                                          gamma_table_checks(n)))
        if not report:
            raise AxiomFailure(report)
    for name in ("gres_l", "gres_r", "gjoin"):
        if getattr(n, name) is None:
            raise MissingComponent(f"structure lacks the {name} table")
    si, gi = n.sigma_image, n.gamma_image
    ks = {e: i for i, e in enumerate(si)}
    kg = {e: i for i, e in enumerate(gi)}
    s, g, mul = n.sigma.table, n.gamma.table, n.carrier.mul
    gl, gr, gj = n.gres_l, n.gres_r, n.gjoin
    scalars = restrict_posemigroup(n.carrier, si)
    if scalars is None:
        raise AxiomFailure(failed("nagata.sigma.closed", si, detail="sigma-image not closed"))
    module = n.poset.restrict(list(gi))
    ns, nm = len(si), len(gi)
    residuals = ActionResiduals(
        bslres=tabulate(ns, nm, lambda a, x: kg[g[gl[si[a]][gi[x]]]]),
        slres=tabulate(nm, nm, lambda y, x: ks[s[gr[gi[y]][gi[x]]]]),
        bsrres=tabulate(nm, nm, lambda x, y: ks[s[gl[gi[x]][gi[y]]]]),
        srres=tabulate(nm, ns, lambda x, a: kg[g[gr[gi[x]][si[a]]]]),
    )
    return Bimodule(
        scalars=scalars,
        module=module,
        mjoin=tabulate(nm, nm, lambda x, y: kg[gj[gi[x]][gi[y]]]),
        lact=tabulate(ns, nm, lambda a, x: kg[g[mul[si[a]][gi[x]]]]),
        ract=tabulate(nm, ns, lambda x, a: kg[g[mul[gi[x]][si[a]]]]),
        point=kg[n.point],
        residuals=residuals,
        mmeet=module.meet_table,
    )


def structural_is_cyclic(n: NagataStructure) -> bool:
    s_img, g, mul, z = n.sigma_image, n.gamma.table, n.carrier.mul, n.point
    return all(g[mul[a][z]] == g[mul[z][a]] for a in s_img)


@dataclass(frozen=True)
class UnitMap:
    source: NagataStructure
    bimodule: Bimodule
    target: NagataStructure
    table: tuple[int | None, ...]


def unit_map(n: NagataStructure) -> UnitMap:
    """m -> <σm, γm> into the (restricted) product of the structural bimodule."""
    b = structural_bimodule(n)
    target = (restricted_nagata_product if n.restricted else nagata_product)(b, require_maps=True)
    ks = {e: i for i, e in enumerate(n.sigma_image)}
    kg = {e: i for i, e in enumerate(n.gamma_image)}
    s, g = n.sigma.table, n.gamma.table
    table = tuple(target.index.get((ks[s[m]], kg[g[m]])) for m in n.elements)
    return UnitMap(n, b, target, table)


def _preserves(name, src_sort, f, lhs, rhs):
    return forall(name, src_sort, lambda *xs: f[lhs(*xs)] == rhs(*xs))


def check_unit_map(n: NagataStructure) -> CheckReport:
    """The unit is an injective order embedding preserving every operation present."""
    u = unit_map(n)
    t, f = u.target, u.table
    N = Sort.of(n)
    two = [("x", N), ("y", N)]
    le, tle = n.poset.leq, t.poset.leq

    def checks():
        yield forall("nagata.unit.membership", [("m", N)], lambda m: f[m] is not None)
        yield forall("nagata.unit.order-embedding", two,
                     lambda x, y: le[x][y] == tle[f[x]][f[y]])
        yield forall("nagata.unit.injective", two, lambda x, y: x == y or f[x] != f[y])
        yield _preserves("nagata.unit.mul", two, f, lambda x, y: n.carrier.mul[x][y],
                         lambda x, y: t.carrier.mul[f[x]][f[y]])
        yield forall("nagata.unit.point", [("0", Sort((n.point,), n.label))],
                     lambda z: f[z] == t.point)
        yield _preserves("nagata.unit.sigma", [("x", N)], f, lambda x: n.sigma(x),
                         lambda x: t.sigma(f[x]))
        yield _preserves("nagata.unit.gamma", [("x", N)], f, lambda x: n.gamma(x),
                         lambda x: t.gamma(f[x]))
        yield _preserves("nagata.unit.gres-left", two, f, lambda x, y: n.gres_l[x][y],
                         lambda x, y: t.gres_l[f[x]][f[y]])
        yield _preserves("nagata.unit.gres-right", two, f, lambda x, y: n.gres_r[y][x],
                         lambda x, y: t.gres_r[f[y]][f[x]])
        yield _preserves("nagata.unit.gjoin", two, f, lambda x, y: n.gjoin[x][y],
                         lambda x, y: t.gjoin[f[x]][f[y]])
        if n.one is not None and t.one is not None:
            yield forall("nagata.unit.one", [("1", Sort((n.one,), n.label))],
                         lambda e: f[e] == t.one)
        for name in ("meet", "join"):
            a, b = getattr(n.carrier, name), getattr(t.carrier, name)
            if a is not None and b is not None:
                yield _preserves(f"nagata.unit.{name}", two, f, lambda x, y, a=a: a[x][y],
                                 lambda x, y, b=b: b[f[x]][f[y]])
        for name in ("lres", "rres", "oplus", "otimes"):
            a, b = getattr(n, name), getattr(t, name)
            if a is not None and b is not None:
                yield _preserves(f"nagata.unit.{name}", two, f, lambda x, y, a=a: a[x][y],
                                 lambda x, y, b=b: b[f[x]][f[y]])

    return first_failure("nagata.unit", checks())


def check_unit_surjectivity(n: NagataStructure) -> CheckReport:
    """Each admissible <a, x> in N_σ x N_γ is <σm, γm> for some m."""
    _require_maps(n)
    s, g, mul, le, z = n.sigma.table, n.gamma.table, n.carrier.mul, n.poset.leq, n.point
    hit = {(s[m], g[m]) for m in n.elements}

    def admissible(a, x):
        if not n.restricted:
            return True
        return le[g[mul[a][z]]][x] and le[g[mul[z][a]]][x]

    return forall("nagata.unit.surjective",
                  [("a", Sort.of(n, n.sigma_image)), ("x", Sort.of(n, n.gamma_image))],
                  lambda a, x: not admissible(a, x) or (a, x) in hit)


@dataclass(frozen=True)
class Counit:
    product: NagataStructure
    structural: Bimodule
    scalar_map: tuple[int, ...]
    module_map: tuple[int, ...]


def counit_map(m: Bimodule, restricted: bool = True) -> Counit:
    """Inverse of <ε_S, ε_M>: structural(product(m)) -> m."""
    build = restricted_nagata_product if restricted else nagata_product
    n = build(m, require_maps=True)
    b = structural_bimodule(n)
    return Counit(n, b, tuple(n.pairs[e][0] for e in n.sigma_image),
                  tuple(n.pairs[e][1] for e in n.gamma_image))


def check_counit(m: Bimodule, restricted: bool = True) -> CheckReport:
    from .iso import check_bimodule_iso

    c = counit_map(m, restricted)
    return check_bimodule_iso(c.structural, m, c.scalar_map, c.module_map, "nagata.counit")


def check_embeddings(m: Bimodule, n: NagataStructure) -> CheckReport:
    """ε_S is a multiplicative order embedding onto N_σ; ε_M an order embedding onto N_γ."""
    S, M = m.S, m.M
    es = [n.index[embed_scalar(m, a)] for a in m.scalars.elements]
    em = [n.index[embed_module(m, x)] for x in m.module.elements]
    le, mul = n.poset.leq, n.carrier.mul
    sle, mle = m.scalars.poset.leq, m.module.leq

    def checks():
        yield forall("nagata.embed-scalar.order", [("a", S), ("b", S)],
                     lambda a, b: sle[a][b] == le[es[a]][es[b]])
        yield forall("nagata.embed-scalar.mul", [("a", S), ("b", S)],
                     lambda a, b: es[m.scalars.mul[a][b]] == mul[es[a]][es[b]])
        if m.scalars.join is not None and n.carrier.join is not None:
            yield forall("nagata.embed-scalar.join", [("a", S), ("b", S)],
                         lambda a, b: es[m.scalars.join[a][b]] == n.carrier.join[es[a]][es[b]])
        yield forall("nagata.embed-scalar.onto", [("a", S)], lambda a: n.sigma(es[a]) == es[a])
        yield forall("nagata.embed-module.order", [("x", M), ("y", M)],
                     lambda x, y: mle[x][y] == le[em[x]][em[y]])
        yield forall("nagata.embed-module.onto", [("x", M)], lambda x: n.gamma(em[x]) == em[x])
        if len(set(es)) != len(n.sigma_image):
            yield failed("nagata.embed-scalar.onto", (), detail="image smaller than N_sigma")
        if len(set(em)) != len(n.gamma_image):
            yield failed("nagata.embed-module.onto", (), detail="image smaller than N_gamma")

    return first_failure("nagata.embeddings", checks())


def check_action_recovery(m: Bimodule, n: NagataStructure) -> CheckReport:
    """The six equations recovering actions and residuals from σ, γ and ε."""
    S, M = m.S, m.M
    r = m.residuals
    es = [n.index[embed_scalar(m, a)] for a in m.scalars.elements]
    em = [n.index[embed_module(m, x)] for x in m.module.elements]
    s, g, mul, gl, gr = n.sigma.table, n.gamma.table, n.carrier.mul, n.gres_l, n.gres_r
    return first_failure("nagata.recovery", (
        forall("nagata.recovery.right-action", [("x", M), ("a", S)],
               lambda x, a: em[m.ract[x][a]] == g[mul[em[x]][es[a]]]),
        forall("nagata.recovery.left-action", [("a", S), ("x", M)],
               lambda a, x: em[m.lact[a][x]] == g[mul[es[a]][em[x]]]),
        forall("nagata.recovery.bsrres", [("x", M), ("y", M)],
               lambda x, y: es[r.bsrres[x][y]] == s[gl[em[x]][em[y]]]),
        forall("nagata.recovery.slres", [("x", M), ("y", M)],
               lambda x, y: es[r.slres[x][y]] == s[gr[em[x]][em[y]]]),
        forall("nagata.recovery.bslres", [("a", S), ("x", M)],
               lambda a, x: em[r.bslres[a][x]] == g[gl[es[a]][em[x]]]),
        forall("nagata.recovery.srres", [("x", M), ("a", S)],
               lambda x, a: em[r.srres[x][a]] == g[gr[em[x]][es[a]]]),
    ))


def check_triangles(m: Bimodule, restricted: bool = True) -> CheckReport:
    """Both triangle identities on the product N of m and its structural bimodule.

    First: <a,x> -> <<a,a*0>, <0*\\x,x>> -> <a,x> through the counit.
    Second: a -> <a, γ(a·0)> -> a and x -> <0*\\x, x> -> x inside the unit.
    """
    c = counit_map(m, restricted)
    n = c.product
    u = unit_map(n)
    ks = {e: i for i, e in enumerate(n.sigma_image)}
    kg = {e: i for i, e in enumerate(n.gamma_image)}
    N = Sort.of(n)
    t = u.target

    def first(p):
        i, j = t.pairs[u.table[p]]
        return (c.scalar_map[i], c.module_map[j]) == n.pairs[p]

    def second_scalar(a):
        i = ks[a]
        return u.table[a] == t.index[embed_scalar(u.bimodule, i)]

    def second_module(x):
        j = kg[x]
        return u.table[x] == t.index[embed_module(u.bimodule, j)]

    return first_failure("nagata.triangle", (
        forall("nagata.triangle.product", [("m", N)], first),
        forall("nagata.triangle.scalar", [("a", Sort.of(n, n.sigma_image))], second_scalar),
        forall("nagata.triangle.module", [("x", Sort.of(n, n.gamma_image))], second_module),
    ))


__all__ = [
    "NagataStructure", "nagata_product", "restricted_nagata_product", "restricted_universe",
    "embed_scalar", "embed_module", "double_division_image", "gamma_tables", "nagata_structure",
    "substructure", "check_nagata_posemigroup", "check_nagata_lattice",
    "check_bilattice_sesquilattice", "check_decomposition", "structural_bimodule",
    "structural_is_cyclic", "UnitMap", "unit_map", "check_unit_map", "check_unit_surjectivity",
    "Counit", "counit_map", "check_counit", "check_embeddings", "check_action_recovery",
    "check_triangles", "quasi_inequality", "displayed_sigma_residual_equations",
]
