"""Finite simplicial complexes, the Stanley-Reisner correspondence, links,
skeleta and reduced homology over Q or F_p.

Faces are bitsets over the vertices ``0 .. vertex_count - 1`` (vertex ``i``
is printed as ``i + 1``). The void complex has no faces at all, while the
irrelevant complex ``{emptyset}`` has exactly one; both are representable.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import PreconditionError
from .fields import QQ, Field
from .linalg import rank
from .monomial import MonomialIdeal, PolyRing

NEG_INF = float("-inf")


def bits(mask: int) -> list[int]:
    """Vertices of a face, increasing."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def submasks(mask: int) -> Iterator[int]:
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda m: -m.bit_count()):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lambda m: (m.bit_count(), bits(m))))


@dataclass(frozen=True)
class HomologyProfile:
    """``ranks[i + 1]`` is the rank of reduced homology in degree ``i``,
    for ``i = -1 .. dim``."""

    ranks: tuple[int, ...]
    field: Field = QQ

    def __getitem__(self, degree: int) -> int:
        if degree < -1 or degree + 1 >= len(self.ranks):
            return 0
        return self.ranks[degree + 1]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** (i - 1) * r for i, r in enumerate(self.ranks))

    def is_acyclic(self) -> bool:
        return not any(self.ranks)


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    facets: tuple[int, ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise PreconditionError("a complex needs a positive vertex count")
        facets = _maximal(self.facets)
        if facets and max(facets).bit_length() > self.vertex_count:
            raise PreconditionError("facet uses a vertex outside the vertex set")
        object.__setattr__(self, "facets", facets)

    @classmethod
    def from_facets(cls, vertex_count: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Facets given as collections of 0-based vertices."""
        return cls(vertex_count, tuple(mask_of(f) for f in facets))

    @classmethod
    def simplex(cls, vertex_count: int) -> "SimplicialComplex":
        return cls(vertex_count, ((1 << vertex_count) - 1,))

    @classmethod
    def boundary_of_simplex(cls, vertex_count: int) -> "SimplicialComplex":
        full = (1 << vertex_count) - 1
        return cls(vertex_count, tuple(full ^ (1 << v) for v in range(vertex_count)))

    @classmethod
    def void(cls, vertex_count: int) -> "SimplicialComplex":
        return cls(vertex_count, ())

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self):
        if self.is_void:
            return NEG_INF
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            out.update(submasks(f))
        return frozenset(out)

    def faces_of_size(self, size: int) -> list[int]:
        return sorted((f for f in self.faces if f.bit_count() == size), key=bits)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by dimension, starting at dimension -1."""
        counts = defaultdict(int)
        for f in self.faces:
            counts[f.bit_count()] += 1
        top = max(counts, default=-1)
        return tuple(counts[s] for s in range(top + 1))

    def __contains__(self, face) -> bool:
        if not isinstance(face, int):
            face = mask_of(face)
        return any(face & f == face for f in self.facets)

    def vertices(self) -> list[int]:
        return bits(mask_of(v for f in self.facets for v in bits(f)))

    def facet_lists(self) -> list[list[int]]:
        """Facets as 1-based vertex lists, in canonical order."""
        return [[v + 1 for v in bits(f)] for f in self.facets]

    def generated_by(self, facets: Iterable[int]) -> "SimplicialComplex":
        return SimplicialComplex(self.vertex_count, tuple(facets))

    def facets_of_size_above(self, size: int) -> "SimplicialComplex":
        """Subcomplex generated by the facets with more than ``size`` vertices."""
        return self.generated_by(f for f in self.facets if f.bit_count() > size)

    def __str__(self):
        body = ", ".join(" ".join(map(str, f)) or "{}" for f in self.facet_lists())
        return f"vertices {self.vertex_count}; facets {body};"


# --- operations ----------------------------------------------------------

def from_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex: faces are the squarefree monomials outside I."""
    if not I.is_squarefree:
        raise PreconditionError(f"{I} is not squarefree")
    if I.is_unit:
        raise PreconditionError("the unit ideal has no Stanley-Reisner complex")
    n = I.ring.num_vars
    nonfaces = [mask_of(j for j, e in enumerate(m) if e) for m in I.gens]

    def is_face(s: int) -> bool:
        return all(g & s != g for g in nonfaces)

    facets = []
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        maximal = True
        for v in range(n):
            if face >> v & 1:
                continue
            bigger = face | 1 << v
            if is_face(bigger):
                maximal = False
                if v >= start:
                    stack.append((bigger, v + 1))
        if maximal:
            facets.append(face)
    return SimplicialComplex(n, tuple(facets))


def to_ideal(delta: SimplicialComplex, ring: PolyRing | None = None) -> MonomialIdeal:
    """Stanley-Reisner ideal generated by the minimal non-faces.

    The void complex gives the unit ideal.
    """
    n = delta.vertex_count
    if ring is None:
        ring = PolyRing.standard(n)
    if ring.num_vars != n:
        raise PreconditionError("ring and complex disagree on the number of vertices")
    if delta.is_void:
        return MonomialIdeal.unit(ring)
    faces = delta.faces
    minimal_nonfaces = set()
    for f in faces:
        for v in range(n):
            if f >> v & 1:
                continue
            s = f | 1 << v
            if s in faces:
                continue
            if all(s ^ (1 << u) in faces for u in bits(s)):
                minimal_nonfaces.add(s)
    gens = [tuple((s >> j) & 1 for j in range(n)) for s in minimal_nonfaces]
    return MonomialIdeal(ring, gens)


def link(delta: SimplicialComplex, face) -> SimplicialComplex:
    """lk(F) = {G : G and F disjoint, G u F in the complex}."""
    if not isinstance(face, int):
        face = mask_of(face)
    containing = [f ^ face for f in delta.facets if f & face == face]
    if not containing:
        raise PreconditionError(f"{bits(face)} is not a face")
    return SimplicialComplex(delta.vertex_count, tuple(containing))


def pure_skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by the i-dimensional faces."""
    if delta.is_void or not -1 <= i <= delta.dim:
        raise PreconditionError(f"skeleton dimension {i} out of range for dim {delta.dim}")
    return delta.generated_by(delta.faces_of_size(i + 1))


def skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """All faces of dimension at most i."""
    if delta.is_void or not -1 <= i <= delta.dim:
        raise PreconditionError(f"skeleton dimension {i} out of range for dim {delta.dim}")
    keep = [f for f in delta.facets if f.bit_count() <= i + 1]
    return delta.generated_by(keep + delta.faces_of_size(i + 1))


# --- homology ------------------------------------------------------------

def chain_homology(faces: Iterable[int], characteristic: int = 0) -> dict[int, int]:
    """Homology ranks of the chain complex spanned by ``faces``.

    ``faces`` must be a difference A \\ B of a complex and a subcomplex, so
    this covers reduced homology (B void) and relative homology alike. The
    empty face sits in degree -1. Returns ``{degree: rank}`` for the
    degrees that occur.
    """
    by_size: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_size[f.bit_count()].append(f)
    if not by_size:
        return {}
    index: dict[int, dict[int, int]] = {}
    for s, fs in by_size.items():
        fs.sort(key=bits)
        index[s] = {f: k for k, f in enumerate(fs)}
    ranks = {}
    for s, fs in by_size.items():
        below = index.get(s - 1)
        if not below:
            ranks[s] = 0
            continue
        rows = []
        for f in fs:
            row = {}
            for k, v in enumerate(bits(f)):
                col = below.get(f ^ (1 << v))
                if col is not None:
                    row[col] = -1 if k & 1 else 1
            rows.append(row)
        ranks[s] = rank(rows, characteristic)
    out = {}
    for s, fs in by_size.items():
        out[s - 1] = len(fs) - ranks[s] - ranks.get(s + 1, 0)
    return out


@lru_cache(maxsize=200_000)
def _homology_of_facets(facets: tuple[int, ...], characteristic: int) -> tuple[int, ...]:
    faces: set[int] = set()
    for f in facets:
        faces.update(submasks(f))
    top = max(f.bit_count() for f in facets) - 1
    h = chain_homology(faces, characteristic)
    return tuple(h.get(i, 0) for i in range(-1, top + 1))


def reduced_homology(delta: SimplicialComplex, field: Field = QQ) -> HomologyProfile:
    if delta.is_void:
        raise PreconditionError("reduced homology of the void complex is undefined here")
    return HomologyProfile(_homology_of_facets(delta.facets, field.characteristic), field)


def relative_homology(delta: SimplicialComplex, gamma: SimplicialComplex,
                      field: Field = QQ) -> dict[int, int]:
    """Ranks of H~_i(delta, gamma) for a subcomplex gamma (possibly void)."""
    return chain_homology(delta.faces - gamma.faces, field.characteristic)
