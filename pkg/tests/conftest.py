"""Shared hypothesis strategies over small finite structures."""

from hypothesis import settings, strategies as st

from twistkit import corpus
from twistkit import enumeration as _enum
from twistkit.enumeration import enumerate_posets
from twistkit.order import EndoMap

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

POSETS = [p for n in range(1, 5) for p in enumerate_posets(n)]
LATTICES = corpus.residuated_lattices()
BIMODULES = corpus.bimodules()
PAIRS = corpus.twistable_pairs()
BROUWERIAN = corpus.brouwerian_algebras()

posets = st.sampled_from(POSETS)


@st.composite
def endomaps(draw, poset=None):
    p = draw(posets) if poset is None else poset
    table = draw(st.lists(st.integers(0, p.size - 1), min_size=p.size, max_size=p.size))
    return EndoMap(p, tuple(table))


@st.composite
def idempotent_maps(draw):
    """Pick a retract set, send each element to some point of it."""
    p = draw(posets)
    fixed = draw(st.sets(st.integers(0, p.size - 1), min_size=1))
    targets = sorted(fixed)
    table = [i if i in fixed else draw(st.sampled_from(targets)) for i in range(p.size)]
    return EndoMap(p, tuple(table))


POSEMIGROUPS = [s for n in (1, 2, 3) for s in _enum.enumerate_posemigroups(n)]
BOOLEAN_POINTED = [b for n in range(1, 6) for b in _enum.enumerate_brouwerian(n, boolean_pointed=True)]
BROUWERIAN_ALL = [b for n in range(1, 6) for b in _enum.enumerate_brouwerian(n)]
posemigroups = st.sampled_from(POSEMIGROUPS)
boolean_pointed = st.sampled_from(BOOLEAN_POINTED)
