"""Per-kind check levels used by the command line and the corpus files."""

from __future__ import annotations

from .algebra import (check_boolean_pointed, check_brouwerian, check_posemigroup,
                      check_residuated, check_residuated_lattice)
from .bimodule import LEVELS as BIMODULE_LEVELS, check_bimodule
from .fractions import brouwerian_lemma_suite, check_bimonoid, check_term_equivalence
from .errors import NotComplemented
from .nagata import (check_bilattice_sesquilattice, check_decomposition, check_nagata_lattice,
                     check_nagata_posemigroup, check_unit_map, check_unit_surjectivity)
from .order import check_poset
from .report import CheckReport, failed
from .twist import LEVELS as TWIST_LEVELS, check_strong_negation, check_twistable_pair

NAGATA_LEVELS = ("posemigroup", "lattice", "adjunction", "equivalence", "strong-negation")

LEVELS = {
    "poset": ("poset",),
    "posemigroup": ("posemigroup",),
    "residuated-lattice": ("residuated", "residuated-lattice"),
    "brouwerian": ("brouwerian", "boolean-pointed"),
    "bimodule": BIMODULE_LEVELS,
    "nagata": NAGATA_LEVELS,
    "twistable-pair": TWIST_LEVELS,
    "bimonoid": ("bimonoid", "complemented"),
}

DEFAULT_LEVEL = {
    "poset": "poset",
    "posemigroup": "posemigroup",
    "residuated-lattice": "residuated-lattice",
    "brouwerian": "brouwerian",
    "bimodule": "bimodule",
    "nagata": "posemigroup",
    "twistable-pair": "posemigroup",
    "bimonoid": "bimonoid",
}


def _nagata(n, level: str) -> list[CheckReport]:
    rank = NAGATA_LEVELS.index(level)
    if n.sigma is None and rank == 0:
        # a bare product without σ and γ: only the multiplication is checkable
        return [check_posemigroup(n.carrier)]
    out = [check_nagata_posemigroup(n)]
    lattice = n.carrier.meet is not None and n.carrier.join is not None and n.lres is not None
    if rank >= 1 and lattice:
        out.append(check_nagata_lattice(n))
    if rank >= 2:
        out.append(check_unit_map(n))
    if rank >= 3:
        out.append(check_unit_surjectivity(n))
        if n.oplus is not None:
            out.append(check_decomposition(n))
            out.append(check_bilattice_sesquilattice(n, "sesquilattice"))
    if rank >= 4:
        out.append(check_strong_negation(n))
    return out


def check_structure(kind: str, s, level: str | None = None) -> list[CheckReport]:
    """Reports for ``s`` at ``level``; stops adding stages after a failure."""
    if level is None:
        level = DEFAULT_LEVEL[kind]
    if level not in LEVELS[kind]:
        raise ValueError(f"level {level!r} is not one of {', '.join(LEVELS[kind])} for {kind}")
    if kind == "poset":
        reports = [check_poset(s)]
    elif kind == "posemigroup":
        reports = [check_posemigroup(s)]
    elif kind == "residuated-lattice":
        reports = [check_residuated(s) if level == "residuated" else check_residuated_lattice(s)]
    elif kind == "brouwerian":
        reports = [check_brouwerian(s)]
        if level == "boolean-pointed":
            reports += [check_boolean_pointed(s), brouwerian_lemma_suite(s)]
    elif kind == "bimodule":
        reports = [check_bimodule(s, level)]
    elif kind == "nagata":
        reports = _nagata(s, level)
    elif kind == "twistable-pair":
        reports = [check_twistable_pair(s, level)]
    elif kind == "bimonoid":
        reports = [check_bimonoid(s)]
        if level == "complemented" and reports[0]:
            try:
                reports.append(check_term_equivalence(s))
            except NotComplemented as e:
                reports.append(failed("bimonoid.complemented", (), detail=str(e)))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return reports


__all__ = ["LEVELS", "DEFAULT_LEVEL", "NAGATA_LEVELS", "check_structure"]
