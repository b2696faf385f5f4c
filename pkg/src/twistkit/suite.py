"""The acceptance battery: nine criteria, each a list of subject reports."""

from __future__ import annotations

import contextlib
import io
from dataclasses import dataclass, field

from . import corpus
from .algebra import (check_residuated, check_residuated_lattice,
                      check_residuated_semilattice_ordered, compute_residuals)
from .bimodule import division_bimodule
from .enumeration import check_poset_counts, commutative_residuated_chains, enumerate_brouwerian
from .errors import WorkbenchError
from .fractions import (brouwerian_lemma_suite, check_fractions, check_mu, check_nu, complement_of,
                        complements, fractions_algebra)
from .nagata import (check_action_recovery, check_bilattice_sesquilattice, check_counit,
                     check_decomposition, check_embeddings, check_nagata_lattice,
                     check_nagata_posemigroup, check_triangles, check_unit_map,
                     check_unit_surjectivity, double_division_image, nagata_product,
                     restricted_nagata_product, restricted_universe)
from .order import check_operator
from .report import CheckReport, Sort, failed, forall, passed
from .twist import (check_involutive_collapse, check_roundtrip, check_strong_negation,
                    restricted_twist_product)

EXPECTED_POSET_COUNTS = {1: 1, 2: 2, 3: 5, 4: 16}


@dataclass
class CriterionResult:
    number: int
    title: str
    reports: list[tuple[str, CheckReport]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for _, r in self.reports)

    def failures(self) -> list[tuple[str, CheckReport]]:
        return [(s, r) for s, r in self.reports if not r.passed]

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"criterion {self.number} {status} {self.title} ({len(self.reports)} checks)"
        bad = self.failures()
        if bad:
            subject, r = bad[0]
            out += f": {subject}: {r.line()}"
        return out


def _guard(subject, fn) -> tuple[str, CheckReport]:
    """Run one check; a raised workbench error counts as a failure."""
    try:
        return subject, fn()
    except WorkbenchError as e:
        return subject, failed(f"error.{type(e).__name__}", (), detail=str(e))


def criterion_1() -> CriterionResult:
    res = CriterionResult(1, "Nagata products of division bimodules are residuated l-semigroups")
    lattices = dict(corpus.residuated_lattices())
    for n in range(1, 5):
        for i, L in enumerate(commutative_residuated_chains(n)):
            lattices[f"chain{n}-{i}"] = L
    for name, L in lattices.items():
        def run(L=L):
            n = nagata_product(division_bimodule(L), residuals=True)
            return check_residuated_semilattice_ordered(n.residuated())
        res.reports.append(_guard(name, run))
    return res


def criterion_2() -> CriterionResult:
    res = CriterionResult(2, "restricted products are residuated lattices on the double-division image")
    for name, m in corpus.bimodules().items():
        def lattice(m=m):
            return check_residuated_lattice(restricted_nagata_product(m).residuated())

        def universe(m=m):
            full = nagata_product(m, residuals=True)
            p = full.index[(m.scalars.unit, m.point)]
            image = {full.pairs[e] for e in double_division_image(full.residuated(), p)}
            restricted = set(restricted_universe(m))
            if image != restricted:
                diff = sorted(image ^ restricted)[0]
                return failed("nagata.restricted.double-division", diff, ("a", "x"))
            return passed("nagata.restricted.double-division")

        res.reports.append(_guard(name, lattice))
        res.reports.append(_guard(name, universe))
    return res


def _restricted(m):
    return restricted_nagata_product(m, require_maps=True)


def criterion_3() -> CriterionResult:
    res = CriterionResult(3, "recovering the bimodule from sigma and gamma")
    for name, m in corpus.bimodules().items():
        def sigma(m=m):
            n = _restricted(m)
            N, mul, s = Sort.of(n), n.carrier.mul, n.sigma.table
            r = check_operator(n.sigma, "interior", "nagata.sigma")
            if not r:
                return r
            return forall("nagata.sigma.mul", [("x", N), ("y", N)],
                          lambda x, y: s[mul[x][y]] == mul[s[x]][s[y]])

        res.reports.append(_guard(name, sigma))
        res.reports.append(_guard(name, lambda m=m: check_operator(_restricted(m).gamma, "closure",
                                                                   "nagata.gamma")))
        res.reports.append(_guard(name, lambda m=m: check_embeddings(m, _restricted(m))))
        res.reports.append(_guard(name, lambda m=m: check_action_recovery(m, _restricted(m))))
        res.reports.append(_guard(name, lambda m=m: check_counit(m)))
    return res


def criterion_4() -> CriterionResult:
    res = CriterionResult(4, "the adjunction between bimodules and Nagata posemigroups")
    for name, m in corpus.bimodules().items():
        res.reports.append(_guard(name, lambda m=m: check_nagata_posemigroup(_restricted(m))))
        res.reports.append(_guard(name, lambda m=m: check_nagata_lattice(_restricted(m))))
        res.reports.append(_guard(name, lambda m=m: check_unit_map(_restricted(m))))
        res.reports.append(_guard(name, lambda m=m: check_triangles(m)))
    return res


def criterion_5() -> CriterionResult:
    res = CriterionResult(5, "the equivalence with Nagata sesquilattices")
    for name, m in corpus.bimodules().items():
        res.reports.append(_guard(name, lambda m=m: check_bilattice_sesquilattice(
            _restricted(m), "sesquilattice")))
        res.reports.append(_guard(name, lambda m=m: check_decomposition(_restricted(m))))
        res.reports.append(_guard(name, lambda m=m: check_unit_surjectivity(_restricted(m))))
    return res


def criterion_6() -> CriterionResult:
    res = CriterionResult(6, "twist products, strong negation and untwisting")
    for name, t in corpus.twistable_pairs().items():
        res.reports.append(_guard(name, lambda t=t: check_strong_negation(
            restricted_twist_product(t), lattice=True)))
        res.reports.append(_guard(name, lambda t=t: check_roundtrip(t)))
        res.reports.append(_guard(name, lambda t=t: check_involutive_collapse(t)))
    return res


def fractions_subjects() -> dict:
    """Boolean-pointed Brouwerian algebras of size <= 5 up to iso, plus b8."""
    out = {}
    for n in range(1, 6):
        for i, b in enumerate(enumerate_brouwerian(n, boolean_pointed=True)):
            out[f"bp{n}-{i}"] = b
    out["b8-bottom"] = corpus.brouwerian_algebras()["b8-bottom"]
    return out


def criterion_7() -> CriterionResult:
    res = CriterionResult(7, "bimonoids of fractions of Boolean-pointed Brouwerian algebras")
    for name, b in fractions_subjects().items():
        res.reports.append(_guard(name, lambda b=b: brouwerian_lemma_suite(b)))
        try:
            f = fractions_algebra(b, verify=False)
        except WorkbenchError as e:
            res.reports.append((name, failed(f"error.{type(e).__name__}", (), detail=str(e))))
            continue
        res.reports.append(_guard(name, lambda f=f, b=b: check_mu(f.twist, b, f.mu)))
        res.reports.append(_guard(name, lambda f=f, b=b: check_nu(
            f.twist, b, f.mu_elements, f.mu_algebra, f.nu)))

        def complemented(f=f):
            complements(f.bimonoid)
            return passed("fractions.complemented")

        res.reports.append(_guard(name, complemented))
        res.reports.append(_guard(name, lambda f=f: check_fractions(f)))
    return res


def criterion_8() -> CriterionResult:
    res = CriterionResult(8, "independent oracle cross-checks")
    structures = dict(corpus.residuated_lattices())
    for name, m in corpus.bimodules().items():
        structures[f"restricted-{name}"] = restricted_nagata_product(m).residuated()
    for name, r in structures.items():
        def roundtrip(r=r):
            c = compute_residuals(r.base)
            if c is None or (c.lres, c.rres) != (r.lres, r.rres):
                return failed("oracle.residuals", (), detail="recomputed residuals differ")
            return check_residuated(c)
        res.reports.append(_guard(name, roundtrip))
    for name, b in corpus.brouwerian_algebras().items():
        def agree(b=b):
            f = fractions_algebra(b, verify=False)
            bm = f.bimonoid
            return forall("oracle.complement", [("m", Sort.of(bm))],
                          lambda m: complement_of(bm, m) == f.complement[m])
        res.reports.append(_guard(name, agree))
    counts = check_poset_counts(4)
    for n, (canonical, search) in counts.items():
        ok = canonical == search == EXPECTED_POSET_COUNTS[n]
        res.reports.append((f"posets-{n}", passed("oracle.poset-count", f"{canonical}") if ok else
                            failed("oracle.poset-count", (canonical, search), ("canonical", "search"))))
    return res


def criterion_9() -> CriterionResult:
    from .cli import main

    res = CriterionResult(9, "corrupted fixtures fail with the intended axiom")
    for c in corpus.corruptions():
        r = c.check(c.structure)
        if r.passed or not r.axiom.startswith(c.axiom) or not r.witness:
            res.reports.append((c.name, failed("negative.report", (r.axiom,), ("got",),
                                               detail=f"expected a witness against {c.axiom}")))
            continue
        argv = ["check", f"broken/{c.name}"] + (["--level", c.level] if c.level else [])
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            code = main(argv)
        if code != 1 or c.axiom not in out.getvalue():
            res.reports.append((c.name, failed("negative.cli", (code,), ("exit",),
                                               detail=out.getvalue().strip())))
            continue
        res.reports.append((c.name, passed("negative", r.line())))
    return res


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9)


def run_all() -> list[CriterionResult]:
    return [c() for c in CRITERIA]


__all__ = ["CriterionResult", "CRITERIA", "run_all", "fractions_subjects"] + [
    f"criterion_{i}" for i in range(1, 10)]
