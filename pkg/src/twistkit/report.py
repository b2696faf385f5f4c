"""Check reports and the exhaustive law scanner shared by every checker.

A check either passes, or fails naming a dotted axiom identifier together
with a concrete witness tuple.  Laws are evaluated by brute force over
finite domains; the first violation found (in lexicographic order of the
domains) becomes the witness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    axiom: str
    witness: tuple | None = None
    names: tuple[str, ...] = ()
    labels: tuple[str, ...] = ()
    detail: str = ""

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a report passes exactly when it has no witness")

    def __bool__(self):
        return self.passed

    def witness_text(self) -> str:
        if self.witness is None:
            return ""
        labels = self.labels or tuple(str(w) for w in self.witness)
        if self.names:
            return ", ".join(f"{n}={v}" for n, v in zip(self.names, labels))
        return ", ".join(labels)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.axiom}"
        if not self.passed:
            out += f" [{self.witness_text()}]"
        if self.detail:
            out += f" {self.detail}"
        return out

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "axiom": self.axiom,
            "witness": None if self.witness is None else dict(zip(
                self.names or [str(i) for i in range(len(self.witness))],
                self.labels or [str(w) for w in self.witness])),
            "detail": self.detail,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def passed(axiom: str, detail: str = "") -> CheckReport:
    return CheckReport(True, axiom, detail=detail)


def failed(axiom: str, witness: Sequence, names: Sequence[str] = (),
           labels: Sequence[str] = (), detail: str = "") -> CheckReport:
    return CheckReport(False, axiom, tuple(witness), tuple(names),
                       tuple(labels), detail)


@dataclass(frozen=True)
class Sort:
    """A finite domain of element indices plus a way to print them."""

    elements: tuple[int, ...]
    label: Callable[[int], str] = field(default=str, compare=False)

    @classmethod
    def of(cls, structure, elements: Iterable[int] | None = None) -> "Sort":
        if elements is None:
            elements = range(structure.size)
        return cls(tuple(elements), structure.label)


def forall(axiom: str, variables: Sequence[tuple[str, Sort]],
           holds: Callable[..., bool], detail: str = "") -> CheckReport:
    """Scan every assignment of the variables; report the first violation."""
    names = tuple(name for name, _ in variables)
    sorts = [sort for _, sort in variables]
    for args in product(*(s.elements for s in sorts)):
        if not holds(*args):
            labels = tuple(s.label(a) for s, a in zip(sorts, args))
            return failed(axiom, args, names, labels, detail)
    return passed(axiom)


def first_failure(axiom: str, checks: Iterable[CheckReport]) -> CheckReport:
    """Return the first failing report from a lazy stream, else a pass."""
    for report in checks:
        if not report.passed:
            return report
    return passed(axiom)
