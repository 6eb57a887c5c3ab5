"""Irreducible and primary decomposition of monomial ideals."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .monomial import Monomial, MonomialIdeal, intersect_all, radical


@dataclass(frozen=True)
class PrimaryComponent:
    prime: MonomialIdeal
    component: MonomialIdeal

    @property
    def codim(self) -> int:
        return len(self.prime.gens)

    @property
    def dim(self) -> int:
        """dim R/p for the variable prime p."""
        return self.prime.ring.num_vars - self.codim


@dataclass(frozen=True)
class PrimaryDecomposition:
    ideal: MonomialIdeal
    components: tuple[PrimaryComponent, ...]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def primes(self) -> tuple[MonomialIdeal, ...]:
        return tuple(c.prime for c in self.components)

    def intersection(self) -> MonomialIdeal:
        return intersect_all(self.ideal.ring, (c.component for c in self.components))


def _is_pure_power(m: Monomial) -> bool:
    return sum(1 for e in m if e) <= 1


@lru_cache(maxsize=50_000)
def _split(I: MonomialIdeal) -> tuple[MonomialIdeal, ...]:
    # first mixed generator in canonical order, first variable it uses
    for m in I.gens:
        if not _is_pure_power(m):
            break
    else:
        return (I,)
    j = next(k for k, e in enumerate(m) if e)
    power = I.ring.var(j, m[j])
    rest = tuple(0 if k == j else e for k, e in enumerate(m))
    left = MonomialIdeal(I.ring, I.gens + (power,))
    right = MonomialIdeal(I.ring, I.gens + (rest,))
    return _split(left) + _split(right)


def _check_proper(I: MonomialIdeal) -> None:
    if I.is_unit:
        raise PreconditionError("the unit ideal has no decomposition")


@lru_cache(maxsize=50_000)
def irreducible_decomposition(I: MonomialIdeal) -> tuple[MonomialIdeal, ...]:
    """Irredundant irreducible components of ``I``, each generated by pure
    powers of variables. The zero ideal is its own (prime) component."""
    _check_proper(I)
    pieces = sorted(set(_split(I)), key=MonomialIdeal.sort_key)
    # irreducible monomial ideals are meet-prime, so pairwise containment
    # is all that redundancy can mean
    kept = [Q for Q in pieces if not any(P != Q and P.issubset(Q) for P in pieces)]
    return tuple(kept)


@lru_cache(maxsize=50_000)
def primary_decomposition(I: MonomialIdeal) -> PrimaryDecomposition:
    """Group the irreducible components by radical and intersect each group."""
    groups: dict[MonomialIdeal, list[MonomialIdeal]] = {}
    for Q in irreducible_decomposition(I):
        groups.setdefault(radical(Q), []).append(Q)
    comps = [
        PrimaryComponent(p, intersect_all(I.ring, qs))
        for p, qs in groups.items()
    ]
    comps.sort(key=lambda c: c.prime.sort_key())
    return PrimaryDecomposition(I, tuple(comps))


def associated_primes(I: MonomialIdeal) -> tuple[MonomialIdeal, ...]:
    return primary_decomposition(I).primes()


def minimal_primes(I: MonomialIdeal) -> tuple[MonomialIdeal, ...]:
    ass = associated_primes(I)
    return tuple(p for p in ass if not any(q != p and q.issubset(p) for q in ass))


def dimension_set(I: MonomialIdeal) -> tuple[int, ...]:
    """{dim R/p : p associated to I}, increasing."""
    n = I.ring.num_vars
    return tuple(sorted({n - len(p.gens) for p in associated_primes(I)}))
