import textwrap

import pytest
from hypothesis import given, strategies as st

from twistkit import corpus
from twistkit.enumeration import random_structure
from twistkit.errors import ParseError, ValidationError
from twistkit.fileio import dumps, kind_of, load, loads, save

FIXTURES = corpus.fixtures()


def test_save_then_load_the_two_chain(tmp_path):
    L = corpus.residuated_lattices()["c2"]
    path = tmp_path / "c2.alg"
    save(L, path)
    kind, again = load(path)
    assert kind == "residuated-lattice" and again == L


@given(st.sampled_from(sorted(FIXTURES)))
def test_fixture_round_trip(name):
    s = FIXTURES[name]
    kind, again = loads(dumps(s))
    assert kind == kind_of(s)
    assert dumps(again) == dumps(s)


@given(st.sampled_from(["poset", "posemigroup", "brouwerian"]), st.integers(0, 50))
def test_random_structure_round_trip(kind, seed):
    s = random_structure(kind, 3, seed)
    assert dumps(loads(dumps(s))[1]) == dumps(s)


def test_random_bimodule_round_trip():
    m = random_structure("bimodule", (2, 3), 5)
    assert loads(dumps(m))[1] == m


RAGGED = textwrap.dedent("""\
    kind: posemigroup
    size: 2
    leq:
    - [1, 1]
    - [0, 1]
    mul:
    - [0, 0]
    - [0]
""")


def test_ragged_table_is_a_parse_error():
    with pytest.raises(ParseError) as e:
        loads(RAGGED)
    assert e.value.field == "mul" and e.value.line == 6


def test_non_associative_posemigroup_is_rejected():
    text = textwrap.dedent("""\
        kind: posemigroup
        size: 2
        leq:
        - [1, 1]
        - [0, 1]
        mul:
        - [1, 0]
        - [0, 1]
    """)
    with pytest.raises(ValidationError) as e:
        loads(text)
    assert e.value.report.axiom.startswith("posemigroup.")
    kind, s = loads(text, validate=False)
    assert kind == "posemigroup" and s.mul == ((1, 0), (0, 1))


def test_associativity_named_when_that_is_what_breaks():
    broken = {c.name: c for c in corpus.corruptions()}["posemigroup-nonassociative"]
    with pytest.raises(ValidationError) as e:
        loads(dumps(broken.structure))
    assert e.value.report.axiom == "posemigroup.associativity"


@pytest.mark.parametrize("text, field", [
    ("kind: lattice-thing\n", "kind"),
    ("kind: poset\n", "size"),
    ("kind: poset\nsize: 0\n", "size"),
    ("kind: poset\nsize: 1\nleq: [[2]]\n", "leq"),
    ("kind: poset\nsize: 2\nleq: [[1, 0], [0, 1]]\nlabels: [a]\n", "labels"),
])
def test_bad_fields_are_named(text, field):
    with pytest.raises(ParseError) as e:
        loads(text)
    assert e.value.field == field


def test_malformed_yaml_reports_a_line():
    with pytest.raises(ParseError) as e:
        loads("kind: poset\nsize: [1\n")
    assert e.value.line is not None


def test_document_must_be_a_mapping():
    with pytest.raises(ParseError):
        loads("- 1\n- 2\n")
