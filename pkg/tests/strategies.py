"""Hypothesis strategies for rings, ideals, complexes and modules."""
from hypothesis import strategies as st

from seqcm.invariants import ModuleExpr
from seqcm.monomial import MonomialIdeal, PolyRing
from seqcm.simplicial import SimplicialComplex


def rings(min_vars=1, max_vars=4):
    return st.integers(min_vars, max_vars).map(PolyRing.standard)


def monomials(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


@st.composite
def ideals(draw, ring=None, max_vars=4, max_exp=3, max_gens=4, proper=True, squarefree=False):
    ring = ring if ring is not None else draw(rings(1, max_vars))
    top = 1 if squarefree else max_exp
    gens = draw(st.lists(monomials(ring.num_vars, top), max_size=max_gens))
    if proper:
        gens = [m for m in gens if any(m)]
    return MonomialIdeal(ring, gens)


@st.composite
def ideal_tuples(draw, k, max_vars=4, **kw):
    ring = draw(rings(1, max_vars))
    return tuple(draw(ideals(ring, **kw)) for _ in range(k))


@st.composite
def complexes(draw, min_vertices=1, max_vertices=6, allow_void=False):
    n = draw(st.integers(min_vertices, max_vertices))
    full = (1 << n) - 1
    facets = draw(st.lists(st.integers(0 if allow_void else 1, full), max_size=6))
    if not facets and not allow_void:
        facets = [full]
    return SimplicialComplex(n, tuple(facets))


@st.composite
def modules(draw, ring=None, max_vars=3, max_summands=2, **kw):
    ring = ring if ring is not None else draw(rings(1, max_vars))
    k = draw(st.integers(1, max_summands))
    return ModuleExpr(ring, tuple(draw(ideals(ring, **kw)) for _ in range(k)))
