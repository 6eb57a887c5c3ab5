"""Largest submodules M_n, the dimension filtration and sequential
Cohen-Macaulayness of finite direct sums of cyclic monomial quotients.

A submodule of M = (+)_k R/I_k is described by ideals J_k containing I_k
and stands for (+)_k J_k/I_k.

Two evaluation modes exist. ``SHORTCUT`` splits direct sums into their
summands (M_n componentwise, and M sequentially CM iff every summand is).
``DIRECT`` never does: M_n comes from a primary decomposition of (0) in the
whole module, and sequential CM-ness is decided from the definition, by
checking that every quotient D_i/D_{i-1} is Cohen-Macaulay. The theorem
verifiers use ``DIRECT`` on the side that must not assume the result.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

from .decomposition import associated_primes, dimension_set, primary_decomposition
from .errors import InvariantViolation, PreconditionError
from .fields import Field
from .invariants import ModuleExpr, complex_of, cyclic_dim, reisner_is_cm, subquotient_depth_dim
from .monomial import MonomialIdeal, ideal_colon, intersect_all
from .simplicial import NEG_INF, pure_skeleton


class EvalMode(enum.Enum):
    SHORTCUT = "shortcut"
    DIRECT = "direct"


@dataclass(frozen=True)
class Submodule:
    module: ModuleExpr
    ideals: tuple[MonomialIdeal, ...]

    def __post_init__(self):
        if len(self.ideals) != len(self.module.summands):
            raise PreconditionError("one ideal per summand is required")
        for I, J in zip(self.module.summands, self.ideals):
            if not I.issubset(J):
                raise PreconditionError(f"{J} does not contain {I}")

    @property
    def is_zero(self) -> bool:
        return self.ideals == self.module.summands

    @property
    def is_whole(self) -> bool:
        return all(J.is_unit for J in self.ideals)

    def annihilator(self) -> MonomialIdeal:
        return intersect_all(self.module.ring, (
            ideal_colon(I, J) for I, J in zip(self.module.summands, self.ideals)))

    def dim(self):
        return max((cyclic_dim(ideal_colon(I, J))
                    for I, J in zip(self.module.summands, self.ideals) if I != J),
                   default=NEG_INF)

    def issubset(self, other: "Submodule") -> bool:
        return all(a.issubset(b) for a, b in zip(self.ideals, other.ideals))


def cyclic_largest_submodule(I: MonomialIdeal, n) -> MonomialIdeal:
    """The ideal J with J/I the largest submodule of R/I of dimension <= n:
    the intersection of the primary components whose prime has dim R/p > n."""
    return intersect_all(I.ring, (c.component for c in primary_decomposition(I) if c.dim > n))


def _componentwise(M: ModuleExpr, n) -> Submodule:
    return Submodule(M, tuple(cyclic_largest_submodule(I, n) for I in M.summands))


def _direct(M: ModuleExpr, n) -> Submodule:
    # (0) = meet of L(p) over p in Ass M, with L(p) = (+)_k Q_k(p)/I_k where
    # Q_k(p) is the p-primary component of I_k, or R when p is not
    # associated to I_k. Each M/L(p) is p-coprimary.
    ring = M.ring
    unit = MonomialIdeal.unit(ring)
    ass = sorted({p for I in M.summands for p in associated_primes(I)}, key=MonomialIdeal.sort_key)
    table = [{c.prime: c.component for c in primary_decomposition(I)} for I in M.summands]
    pieces = []
    for comps in table:
        big = [comps.get(p, unit) for p in ass if ring.num_vars - len(p.gens) > n]
        pieces.append(intersect_all(ring, big))
    return Submodule(M, tuple(pieces))


def largest_submodule(M: ModuleExpr, n, mode: EvalMode = EvalMode.SHORTCUT) -> Submodule:
    """M_n, the largest submodule of M with dimension at most n."""
    if mode is EvalMode.DIRECT:
        return _direct(M, n)
    return _componentwise(M, n)


def dims_of(M: ModuleExpr) -> tuple[int, ...]:
    return tuple(sorted({d for I in M.summands for d in dimension_set(I)}))


@dataclass(frozen=True)
class QuotientReport:
    dim: int
    annihilator: MonomialIdeal


@dataclass(frozen=True)
class DimensionFiltration:
    module: ModuleExpr
    dims: tuple[int, ...]
    pieces: tuple[Submodule, ...]
    quotients: tuple[QuotientReport, ...]

    @property
    def length(self) -> int:
        return len(self.dims)

    def chain(self) -> list[tuple[MonomialIdeal, ...]]:
        return [p.ideals for p in self.pieces]


def _quotient_annihilator(lower: Submodule, upper: Submodule) -> MonomialIdeal:
    return intersect_all(lower.module.ring, (
        ideal_colon(a, b) for a, b in zip(lower.ideals, upper.ideals)))


def dimension_filtration(M: ModuleExpr, mode: EvalMode = EvalMode.SHORTCUT) -> DimensionFiltration:
    dims = dims_of(M)
    pieces = [Submodule(M, M.summands)]
    pieces += [largest_submodule(M, d, mode) for d in dims]
    quotients = []
    for i, d in enumerate(dims, start=1):
        lower, upper = pieces[i - 1], pieces[i]
        if not lower.issubset(upper) or lower == upper:
            raise InvariantViolation(f"filtration of {M} is not strict at level {i}")
        if upper.dim() != d:
            raise InvariantViolation(f"piece {i} of {M} has dim {upper.dim()}, expected {d}")
        ann = _quotient_annihilator(lower, upper)
        if cyclic_dim(ann) != d:
            raise InvariantViolation(f"quotient {i} of {M} has dim {cyclic_dim(ann)}, expected {d}")
        quotients.append(QuotientReport(d, ann))
    if not pieces[-1].is_whole:
        raise InvariantViolation(f"top piece of the filtration of {M} is not M")
    return DimensionFiltration(M, dims, tuple(pieces), tuple(quotients))


# --- sequential Cohen-Macaulayness ---------------------------------------

@dataclass(frozen=True)
class SkeletonVerdict:
    summand: int
    skeleton_dim: int
    ring_dim: int
    cm: bool


@dataclass(frozen=True)
class LevelCertificate:
    dim: int
    quotient_dim: int
    annihilator: MonomialIdeal
    skeletons: tuple[SkeletonVerdict, ...] = ()
    quotient_depth: int | None = None

    @property
    def cm(self) -> bool:
        if self.quotient_depth is not None:
            return self.quotient_depth == self.dim
        return all(s.cm for s in self.skeletons)


@dataclass(frozen=True)
class SeqCMVerdict:
    value: bool
    mode: EvalMode
    field: Field
    levels: tuple[LevelCertificate, ...] = dc_field(default=())

    def __bool__(self):
        return self.value


def _skeleton_verdicts(M: ModuleExpr, field: Field) -> list[SkeletonVerdict]:
    """Pure i-skeleta of every summand's polarized complex, all i >= 0."""
    out = []
    for k, I in enumerate(M.summands):
        delta, pol = complex_of(I)
        for i in range(0, int(delta.dim) + 1):
            cm = reisner_is_cm(pure_skeleton(delta, i), field)
            out.append(SkeletonVerdict(k, i, i + 1 - pol.added, cm))
    return out


def _level_of(ring_dim: int, dims: tuple[int, ...]) -> int:
    for i, d in enumerate(dims):
        if ring_dim <= d:
            return i
    return len(dims) - 1


def is_sequentially_cm(M: ModuleExpr, field: Field | None = None,
                       mode: EvalMode = EvalMode.SHORTCUT) -> SeqCMVerdict:
    """Decide sequential Cohen-Macaulayness and return a per-level certificate.

    ``SHORTCUT``: a complex is sequentially CM iff each pure i-skeleton is CM
    (Duval); non-squarefree summands go through polarization and direct sums
    are split summand by summand.

    ``DIRECT``: the filtration is built without splitting and each quotient
    D_i/D_{i-1} = (+)_k J_k,i / J_k,i-1 is tested for depth = d_i by
    Hochster's formula on the relative Stanley-Reisner pair.
    """
    field = M.ring.field if field is None else field
    filt = dimension_filtration(M, mode)
    levels = []
    if mode is EvalMode.SHORTCUT:
        verdicts = _skeleton_verdicts(M, field)
        buckets: list[list[SkeletonVerdict]] = [[] for _ in filt.dims]
        for v in verdicts:
            buckets[_level_of(v.ring_dim, filt.dims)].append(v)
        for q, bucket in zip(filt.quotients, buckets):
            levels.append(LevelCertificate(q.dim, q.dim, q.annihilator, tuple(bucket)))
        value = all(v.cm for v in verdicts)
    else:
        for i, q in enumerate(filt.quotients, start=1):
            lower, upper = filt.pieces[i - 1], filt.pieces[i]
            depths = []
            for a, b in zip(lower.ideals, upper.ideals):
                if a != b:
                    t, d = subquotient_depth_dim(a, b, field)
                    if d > q.dim:
                        raise InvariantViolation(f"quotient piece {b}/{a} exceeds dim {q.dim}")
                    depths.append(t)
            levels.append(LevelCertificate(q.dim, q.dim, q.annihilator, (), min(depths)))
        value = all(lv.cm for lv in levels)
    return SeqCMVerdict(value, mode, field, tuple(levels))
