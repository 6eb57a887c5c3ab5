"""Krull dimension, depth and Cohen-Macaulayness of monomial quotients.

Every cyclic module R/I is handled through the Stanley-Reisner complex of
the polarization of I; polarizing adds variables that form a regular
sequence, so depth and dimension both shift by the number of added
variables and the Cohen-Macaulay property is unchanged.

Three independent reductions live here:

* Reisner's criterion (links have no homology below their top degree)
  decides Cohen-Macaulayness;
* the skeleton rule (depth k[D] = 1 + max{i : the i-skeleton is CM})
  computes depth;
* Hochster's formula for local cohomology, in its relative form, gives
  depth and dimension of subquotients J/J' of R.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .decomposition import minimal_primes
from .errors import PreconditionError, RingMismatchError
from .fields import Field
from .monomial import MonomialIdeal, PolyRing, Polarization, polarization_for
from .simplicial import (
    NEG_INF,
    SimplicialComplex,
    chain_homology,
    from_ideal,
    link,
    reduced_homology,
    skeleton,
)


@dataclass(frozen=True)
class ModuleExpr:
    """The module R/I_1 (+) ... (+) R/I_k, summands in canonical order."""

    ring: PolyRing
    summands: tuple[MonomialIdeal, ...]

    def __post_init__(self):
        summands = tuple(self.summands)
        if not summands:
            raise PreconditionError("a module needs at least one summand")
        for I in summands:
            if I.ring != self.ring:
                raise RingMismatchError(f"summand {I} is not in the ring {self.ring}")
            if I.is_unit:
                raise PreconditionError("summands must be proper ideals")
        object.__setattr__(self, "summands", tuple(sorted(summands, key=MonomialIdeal.sort_key)))

    @classmethod
    def cyclic(cls, I: MonomialIdeal) -> "ModuleExpr":
        return cls(I.ring, (I,))

    @property
    def is_cyclic(self) -> bool:
        return len(self.summands) == 1

    def __add__(self, other: "ModuleExpr") -> "ModuleExpr":
        if other.ring != self.ring:
            raise RingMismatchError("direct sum of modules over different rings")
        return ModuleExpr(self.ring, self.summands + other.summands)

    def __str__(self):
        return " (+) ".join(f"R/{I}" for I in self.summands)


def _field(ring: PolyRing, field: Field | None) -> Field:
    return ring.field if field is None else field


# --- cyclic building blocks ----------------------------------------------

def cyclic_dim(I: MonomialIdeal):
    """dim R/I from the minimal primes; -inf for the unit ideal."""
    if I.is_unit:
        return NEG_INF
    n = I.ring.num_vars
    return n - min(len(p.gens) for p in minimal_primes(I))


def complex_of(I: MonomialIdeal) -> tuple[SimplicialComplex, Polarization]:
    pol = polarization_for(I.ring, [I])
    return from_ideal(pol.apply_ideal(I)), pol


def reisner_is_cm(delta: SimplicialComplex, field: Field) -> bool:
    """Reisner's criterion, checked at every face (the empty face included)."""
    if delta.is_void:
        return True
    for face in sorted(delta.faces, key=lambda f: -f.bit_count()):
        lk = link(delta, face)
        h = reduced_homology(lk, field)
        if any(h[i] for i in range(-1, lk.dim)):
            return False
    return True


def skeleton_depth(delta: SimplicialComplex, field: Field) -> int:
    """depth k[delta] = 1 + max{i : i-skeleton is Cohen-Macaulay}.

    Skeleta of a CM complex are CM, so the scan stops at the first failure.
    """
    if delta.is_void:
        raise PreconditionError("depth of the zero module is undefined")
    for i in range(0, int(delta.dim) + 1):
        if not reisner_is_cm(skeleton(delta, i), field):
            return i
    return int(delta.dim) + 1


def local_cohomology_degrees(delta: SimplicialComplex, gamma: SimplicialComplex | None,
                             field: Field) -> dict[int, int]:
    """Hochster's formula for k[delta, gamma] = I_gamma / I_delta.

    Returns ``{i: dim_k of H^i_m in squarefree-negative degrees}`` for the
    degrees i that occur. The face F contributes H~_{i-|F|-1}(lk F, lk_gamma F).
    """
    if gamma is None:
        gamma = SimplicialComplex.void(delta.vertex_count)
    out: dict[int, int] = {}
    gamma_faces = gamma.faces
    for face in delta.faces:
        lk_faces = link(delta, face).faces
        if face in gamma_faces:
            lk_faces = lk_faces - link(gamma, face).faces
        size = face.bit_count()
        for j, r in chain_homology(lk_faces, field.characteristic).items():
            if r:
                out[j + size + 1] = out.get(j + size + 1, 0) + r
    return out


def subquotient_depth_dim(smaller: MonomialIdeal, larger: MonomialIdeal,
                          field: Field | None = None) -> tuple[int, int]:
    """(depth, dim) of larger/smaller for monomial ideals smaller < larger."""
    if not smaller.issubset(larger) or smaller == larger:
        raise PreconditionError(f"{larger}/{smaller} is not a nonzero subquotient")
    field = _field(smaller.ring, field)
    pol = polarization_for(smaller.ring, [smaller, larger])
    delta = from_ideal(pol.apply_ideal(smaller))
    big = pol.apply_ideal(larger)
    gamma = None if big.is_unit else from_ideal(big)
    degrees = local_cohomology_degrees(delta, gamma, field)
    return min(degrees) - pol.added, max(degrees) - pol.added


# --- modules -------------------------------------------------------------

def krull_dim(M: ModuleExpr):
    return max(cyclic_dim(I) for I in M.summands)


def is_cohen_macaulay(M: ModuleExpr, field: Field | None = None) -> bool:
    """A direct sum is CM iff every summand is CM of the common dimension."""
    field = _field(M.ring, field)
    if len({cyclic_dim(I) for I in M.summands}) > 1:
        return False
    return all(reisner_is_cm(complex_of(I)[0], field) for I in M.summands)


def depth(M: ModuleExpr, field: Field | None = None) -> int:
    field = _field(M.ring, field)
    out = []
    for I in M.summands:
        delta, pol = complex_of(I)
        out.append(skeleton_depth(delta, field) - pol.added)
    return min(out)


def hochster_depth(I: MonomialIdeal, field: Field | None = None) -> int:
    """depth R/I straight from local cohomology; an independent third route."""
    if I.is_unit:
        raise PreconditionError("depth of the zero module is undefined")
    delta, pol = complex_of(I)
    return min(local_cohomology_degrees(delta, None, _field(I.ring, field))) - pol.added


def direct_sum(modules: Iterable[ModuleExpr]) -> ModuleExpr:
    modules = list(modules)
    return ModuleExpr(modules[0].ring, tuple(I for M in modules for I in M.summands))


def summands_of(M: ModuleExpr) -> Sequence[ModuleExpr]:
    return [ModuleExpr.cyclic(I) for I in M.summands]

