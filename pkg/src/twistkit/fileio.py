"""YAML structure files.

Every file is a mapping with a ``kind`` discriminator.  Orders are 0/1
matrices, operations are row-major integer matrices, constants are
integers, and ``labels`` is optional.  Two-sorted kinds nest one mapping
per sort.
"""

from __future__ import annotations

from dataclasses import replace
from pathlib import Path

import yaml

from .algebra import (BrouwerianAlgebra, Posemigroup, ResiduatedStructure, check_brouwerian,
                      check_posemigroup, check_residuated, compute_residuals,
                      relative_pseudocomplement)
from .bimodule import ActionResiduals, Bimodule, check_bimodule
from .errors import ParseError, ValidationError
from .fractions import Bimonoid, check_bimonoid
from .nagata import NagataStructure, nagata_structure
from .order import EndoMap, Poset, check_poset, freeze
from .report import CheckReport
from .twist import TwistablePair, check_twistable_pair

KINDS = ("poset", "posemigroup", "residuated-lattice", "brouwerian", "bimodule", "nagata",
         "twistable-pair", "bimonoid")


class _Reader:
    """Field access with errors that name the field and its line."""

    def __init__(self, data: dict, lines: dict, prefix: str = ""):
        self.data, self.lines, self.prefix = data, lines, prefix

    def _where(self, key):
        path = self.prefix + key
        return path, self.lines.get(path)

    def has(self, key) -> bool:
        return self.data.get(key) is not None

    def sub(self, key) -> "_Reader":
        value = self.get(key)
        if not isinstance(value, dict):
            raise ParseError("expected a mapping", *self._where(key))
        return _Reader(value, self.lines, self.prefix + key + ".")

    def get(self, key, default=...):
        if key not in self.data or self.data[key] is None:
            if default is not ...:
                return default
            raise ParseError("missing field", *self._where(key))
        return self.data[key]

    def size(self, key="size") -> int:
        n = self.get(key)
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ParseError("size must be a positive integer", *self._where(key))
        return n

    def const(self, key, bound, optional=False):
        v = self.get(key, None) if optional else self.get(key)
        if v is None:
            return None
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < bound:
            raise ParseError(f"expected an index below {bound}", *self._where(key))
        return v

    def vector(self, key, length, bound, optional=False):
        v = self.get(key, None) if optional else self.get(key)
        if v is None:
            return None
        if not isinstance(v, list) or len(v) != length:
            raise ParseError(f"expected a list of length {length}", *self._where(key))
        for x in v:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < bound:
                raise ParseError(f"entries must be indices below {bound}", *self._where(key))
        return tuple(v)

    def table(self, key, rows, cols, bound, optional=False):
        t = self.get(key, None) if optional else self.get(key)
        if t is None:
            return None
        if not isinstance(t, list) or len(t) != rows:
            raise ParseError(f"expected {rows} rows", *self._where(key))
        for row in t:
            if not isinstance(row, list) or len(row) != cols:
                raise ParseError(f"ragged table: every row needs {cols} entries", *self._where(key))
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < bound:
                    raise ParseError(f"entries must be indices below {bound}", *self._where(key))
        return freeze(t)

    def order(self, n) -> Poset:
        t = self.table("leq", n, n, 2)
        labels = self.get("labels", None)
        if labels is not None and (not isinstance(labels, list) or len(labels) != n):
            raise ParseError(f"expected {n} labels", *self._where("labels"))
        return Poset(n, tuple(tuple(bool(x) for x in row) for row in t),
                     None if labels is None else tuple(map(str, labels)))


def _line_map(text: str) -> dict[str, int]:
    """Dotted key path -> 1-based line, from the YAML node tree."""
    out = {}
    try:
        root = yaml.compose(text)
    except yaml.YAMLError:
        return out

    def walk(node, prefix):
        if isinstance(node, yaml.MappingNode):
            for k, v in node.value:
                path = prefix + str(k.value)
                out[path] = k.start_mark.line + 1
                walk(v, path + ".")

    walk(root, "")
    return out


# -- reading ------------------------------------------------------------------

def _posemigroup(r: _Reader) -> Posemigroup:
    n = r.size()
    return Posemigroup(r.order(n), r.table("mul", n, n, n), r.const("unit", n, True),
                       r.table("meet", n, n, n, True), r.table("join", n, n, n, True))


def _residuated(r: _Reader) -> ResiduatedStructure:
    base = _posemigroup(r)
    n = base.size
    return ResiduatedStructure(base, r.table("lres", n, n, n), r.table("rres", n, n, n))


def _read(kind: str, r: _Reader):
    if kind == "poset":
        return r.order(r.size())
    if kind == "posemigroup":
        return _posemigroup(r)
    if kind == "residuated-lattice":
        return _residuated(r)
    if kind == "brouwerian":
        lattice = _posemigroup(r)
        n = lattice.size
        imp = r.table("imp", n, n, n, True)
        if imp is None:
            imp = relative_pseudocomplement(lattice)
        return BrouwerianAlgebra(lattice, imp, r.const("point", n, True))
    if kind == "bimodule":
        s = _posemigroup(r.sub("scalars"))
        mr = r.sub("module")
        nm, ns = mr.size(), s.size
        module = mr.order(nm)
        residuals = None
        if r.has("residuals"):
            rr = r.sub("residuals")
            residuals = ActionResiduals(rr.table("bslres", ns, nm, nm), rr.table("slres", nm, nm, ns),
                                        rr.table("bsrres", nm, nm, ns), rr.table("srres", nm, ns, nm))
        return Bimodule(s, module, r.table("mjoin", nm, nm, nm), r.table("lact", ns, nm, nm),
                        r.table("ract", nm, ns, nm), r.const("point", nm, True), residuals,
                        r.table("mmeet", nm, nm, nm, True))
    if kind == "nagata":
        carrier = _posemigroup(r)
        n = carrier.size
        pairs = r.get("pairs", None)
        pairs = None if pairs is None else tuple(tuple(p) for p in pairs)
        if not r.has("sigma"):
            # a bare product: no point, so no σ and γ
            res = compute_residuals(carrier)
            return NagataStructure(carrier, None, None, None, pairs=pairs,
                                   lres=None if res is None else res.lres,
                                   rres=None if res is None else res.rres)
        out = nagata_structure(
            carrier, r.vector("sigma", n, n), r.vector("gamma", n, n), r.const("point", n),
            one=r.const("one", n, True), restricted=bool(r.get("restricted", False)),
            oplus=r.table("oplus", n, n, n, True), otimes=r.table("otimes", n, n, n, True),
            pairs=pairs)
        negation = r.vector("negation", n, n, True)
        if negation is not None:
            out = replace(out, negation=EndoMap(carrier.poset, negation))
        return out
    if kind == "twistable-pair":
        plus = _posemigroup(r.sub("plus"))
        minus = _residuated(r.sub("minus"))
        return TwistablePair(plus, minus, r.vector("lam", plus.size, minus.size),
                             r.vector("rho", minus.size, plus.size),
                             r.const("point", minus.size, True))
    if kind == "bimonoid":
        n = r.size()
        return Bimonoid(r.order(n), r.table("mul", n, n, n), r.const("one", n),
                        r.table("add", n, n, n), r.const("zero", n))
    raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", "kind",
                     r.lines.get("kind"))


def base_check(kind: str, s) -> CheckReport:
    """The invariants a file of ``kind`` must satisfy to load."""
    if kind == "poset":
        return check_poset(s)
    if kind == "posemigroup":
        return check_posemigroup(s)
    if kind == "residuated-lattice":
        return check_residuated(s)
    if kind == "brouwerian":
        return check_brouwerian(s)
    if kind == "bimodule":
        return check_bimodule(s, "biaction")
    if kind == "nagata":
        return check_posemigroup(s.carrier)
    if kind == "twistable-pair":
        return check_twistable_pair(s, "posemigroup")
    if kind == "bimonoid":
        return check_bimonoid(s)
    raise ValueError(kind)


def loads(text: str, validate: bool = True):
    """Parse a document; return (kind, structure)."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise ParseError(f"malformed YAML: {getattr(e, 'problem', e)}", None,
                         None if mark is None else mark.line + 1) from None
    if not isinstance(data, dict):
        raise ParseError("document must be a mapping")
    r = _Reader(data, _line_map(text))
    kind = r.get("kind")
    structure = _read(kind, r)
    if validate:
        report = base_check(kind, structure)
        if not report:
            raise ValidationError(report)
    return kind, structure


def load(path, validate: bool = True):
    """Read a structure file; return (kind, structure)."""
    return loads(Path(path).read_text(encoding="utf-8"), validate)


# -- writing ------------------------------------------------------------------

def _rows(t):
    return None if t is None else [list(r) for r in t]


def _order_fields(p: Poset) -> dict:
    out = {"size": p.size, "leq": [[int(x) for x in row] for row in p.leq]}
    if p.labels:
        out["labels"] = list(p.labels)
    return out


def _posemigroup_fields(s: Posemigroup) -> dict:
    out = _order_fields(s.poset)
    out["mul"] = _rows(s.mul)
    for name in ("unit", "meet", "join"):
        v = getattr(s, name)
        if v is not None:
            out[name] = v if name == "unit" else _rows(v)
    return out


def _residuated_fields(r: ResiduatedStructure) -> dict:
    out = _posemigroup_fields(r.base)
    out["lres"], out["rres"] = _rows(r.lres), _rows(r.rres)
    return out


def kind_of(s) -> str:
    if isinstance(s, Poset):
        return "poset"
    if isinstance(s, Posemigroup):
        return "posemigroup"
    if isinstance(s, ResiduatedStructure):
        return "residuated-lattice"
    if isinstance(s, BrouwerianAlgebra):
        return "brouwerian"
    if isinstance(s, Bimodule):
        return "bimodule"
    if isinstance(s, NagataStructure):
        return "nagata"
    if isinstance(s, TwistablePair):
        return "twistable-pair"
    if isinstance(s, Bimonoid):
        return "bimonoid"
    raise TypeError(f"cannot serialize {type(s).__name__}")


def to_document(s) -> dict:
    kind = kind_of(s)
    doc: dict = {"kind": kind}
    if kind == "poset":
        doc.update(_order_fields(s))
    elif kind == "posemigroup":
        doc.update(_posemigroup_fields(s))
    elif kind == "residuated-lattice":
        doc.update(_residuated_fields(s))
    elif kind == "brouwerian":
        doc.update(_posemigroup_fields(s.lattice))
        doc["imp"] = _rows(s.imp)
        if s.point is not None:
            doc["point"] = s.point
    elif kind == "bimodule":
        doc["scalars"] = _posemigroup_fields(s.scalars)
        doc["module"] = _order_fields(s.module)
        doc.update(mjoin=_rows(s.mjoin), lact=_rows(s.lact), ract=_rows(s.ract))
        if s.point is not None:
            doc["point"] = s.point
        if s.mmeet is not None:
            doc["mmeet"] = _rows(s.mmeet)
        if s.residuals is not None:
            r = s.residuals
            doc["residuals"] = {k: _rows(getattr(r, k)) for k in ("bslres", "slres", "bsrres", "srres")}
    elif kind == "nagata":
        doc.update(_posemigroup_fields(s.carrier))
        if s.sigma is not None:
            doc.update(sigma=list(s.sigma.table), gamma=list(s.gamma.table), point=s.point)
        doc["restricted"] = s.restricted
        if s.one is not None:
            doc["one"] = s.one
        if s.negation is not None:
            doc["negation"] = list(s.negation.table)
        for name in ("oplus", "otimes"):
            if getattr(s, name) is not None:
                doc[name] = _rows(getattr(s, name))
        if s.pairs:
            doc["pairs"] = [list(p) for p in s.pairs]
    elif kind == "twistable-pair":
        doc["plus"] = _posemigroup_fields(s.plus)
        doc["minus"] = _residuated_fields(s.minus)
        doc.update(lam=list(s.lam), rho=list(s.rho))
        if s.point is not None:
            doc["point"] = s.point
    elif kind == "bimonoid":
        doc.update(_order_fields(s.poset))
        doc.update(mul=_rows(s.mul), one=s.one, add=_rows(s.add), zero=s.zero)
    return doc


class _FlowRows(yaml.SafeDumper):
    """Block mappings, but matrix rows on one line each."""


def _represent_list(dumper, data):
    flow = all(not isinstance(x, (list, dict)) for x in data)
    return dumper.represent_sequence("tag:yaml.org,2002:seq", data, flow_style=flow)


_FlowRows.add_representer(list, _represent_list)


def dumps(s) -> str:
    return yaml.dump(to_document(s), Dumper=_FlowRows, sort_keys=False, allow_unicode=True)


def save(s, path) -> None:
    Path(path).write_text(dumps(s), encoding="utf-8")


__all__ = ["KINDS", "load", "loads", "save", "dumps", "to_document", "kind_of", "base_check"]
