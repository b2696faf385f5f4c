from pathlib import Path

import pytest

from twistkit import corpus
from twistkit.checking import check_structure
from twistkit.fileio import dumps, kind_of, load

ROOT = Path(__file__).resolve().parent.parent / "corpus"
FIXTURES = corpus.fixtures()
CORRUPTIONS = corpus.corruptions()


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_passes_its_declared_level(name):
    s = FIXTURES[name]
    reports = check_structure(kind_of(s), s, corpus.declared_level(name))
    assert all(reports), [r.line() for r in reports if not r]


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_corpus_file_matches_fixture(name):
    path = ROOT / f"{name}.alg"
    assert path.read_text(encoding="utf-8") == dumps(FIXTURES[name])
    kind, s = load(path)
    assert kind == kind_of(FIXTURES[name])


def test_no_stray_corpus_files():
    on_disk = {p.stem for p in ROOT.glob("*.alg")}
    broken = {p.stem for p in (ROOT / "broken").glob("*.alg")}
    assert on_disk == set(FIXTURES)
    assert broken == {c.name for c in CORRUPTIONS}


@pytest.mark.parametrize("c", CORRUPTIONS, ids=lambda c: c.name)
def test_corruption_fails_with_intended_axiom(c):
    r = c.check(c.structure)
    assert not r and r.axiom.startswith(c.axiom) and r.witness is not None


@pytest.mark.parametrize("c", CORRUPTIONS, ids=lambda c: c.name)
def test_corrupted_file_matches(c):
    path = ROOT / "broken" / f"{c.name}.alg"
    assert path.read_text(encoding="utf-8") == dumps(c.structure)


def test_one_corruption_per_family():
    families = [c.family for c in CORRUPTIONS]
    assert len(families) == len(set(families)) + 1  # nagata has two, sigma and the unit
    assert {"poset", "posemigroup", "residuated-lattice", "brouwerian", "bimodule", "nagata",
            "twistable-pair", "bimonoid"} == set(families)


def test_pointed_fixtures_are_boolean_pointed_where_declared():
    assert set(corpus.brouwerian_algebras()) == set(corpus.BOOLEAN_POINTED)
