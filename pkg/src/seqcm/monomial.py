"""Monomials and monomial ideals in a polynomial ring k[x_1, ..., x_n].

Monomials are dense exponent tuples. A :class:`MonomialIdeal` always stores
its unique minimal generating set in canonical (descending lex) order, so
ideals compare as values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import PreconditionError, RingMismatchError
from .fields import QQ, Field

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class PolyRing:
    var_names: tuple[str, ...]
    field: Field = field(default=QQ, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        if not self.var_names:
            raise PreconditionError("a polynomial ring needs at least one variable")
        if len(set(self.var_names)) != len(self.var_names):
            raise PreconditionError(f"variable names are not distinct: {self.var_names}")
        for name in self.var_names:
            if not name.isidentifier():
                raise PreconditionError(f"bad variable name {name!r}")

    @classmethod
    def standard(cls, n: int, prefix: str = "x", field: Field = QQ) -> "PolyRing":
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)), field)

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    def one(self) -> Monomial:
        return (0,) * self.num_vars

    def var(self, j: int, power: int = 1) -> Monomial:
        e = [0] * self.num_vars
        e[j] = power
        return tuple(e)

    def index(self, name: str) -> int:
        return self.var_names.index(name)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.var_names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return ",".join(self.var_names)


# --- monomial arithmetic -------------------------------------------------

def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def support(m: Monomial) -> Monomial:
    return tuple(1 if e else 0 for e in m)


def degree(m: Monomial) -> int:
    return sum(m)


def _canonical_key(m: Monomial):
    return tuple(-e for e in m)


def _minimal_gens(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for m in sorted(set(gens), key=lambda m: (sum(m), _canonical_key(m))):
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=_canonical_key))


# --- ideals --------------------------------------------------------------

@dataclass(frozen=True)
class MonomialIdeal:
    ring: PolyRing
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in m) for m in self.gens)
        n = self.ring.num_vars
        for m in gens:
            if len(m) != n:
                raise RingMismatchError(f"monomial {m} does not live in a ring with {n} variables")
            if min(m, default=0) < 0:
                raise PreconditionError(f"negative exponent in {m}")
        object.__setattr__(self, "gens", _minimal_gens(gens))

    @classmethod
    def zero(cls, ring: PolyRing) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: PolyRing) -> "MonomialIdeal":
        return cls(ring, (ring.one(),))

    @classmethod
    def generated_by_vars(cls, ring: PolyRing, indices: Iterable[int]) -> "MonomialIdeal":
        return cls(ring, tuple(ring.var(j) for j in indices))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.ring.one() in self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for m in self.gens for e in m)

    @property
    def is_prime(self) -> bool:
        """Monomial primes are exactly the ideals generated by variables."""
        return not self.is_unit and all(sum(m) == 1 for m in self.gens)

    def max_exponents(self) -> tuple[int, ...]:
        n = self.ring.num_vars
        return tuple(max((m[j] for m in self.gens), default=0) for j in range(n))

    def variables(self) -> tuple[int, ...]:
        """Indices of the variables generating a prime ideal."""
        return tuple(m.index(1) for m in self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return self.contains(m)

    def issubset(self, other: "MonomialIdeal") -> bool:
        _check_same_ring(self, other)
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "MonomialIdeal") -> bool:
        return self.issubset(other) and self != other

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_intersect(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _check_same_ring(self, other)
        return MonomialIdeal(self.ring, [mul(a, b) for a in self.gens for b in other.gens])

    def sort_key(self):
        return (len(self.gens), tuple(_canonical_key(m) for m in self.gens))

    def generator_strings(self) -> list[str]:
        if self.is_zero:
            return ["0"]
        return [self.ring.format_monomial(m) for m in self.gens]

    def __str__(self):
        return "(" + ", ".join(self.generator_strings()) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


def _check_same_ring(*ideals: MonomialIdeal) -> None:
    ring = ideals[0].ring
    for other in ideals[1:]:
        if other.ring != ring:
            raise RingMismatchError(f"ring mismatch: {ring} vs {other.ring}")


def minimalize(ring: PolyRing, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """The ideal generated by ``gens``, with its minimal generating set."""
    return MonomialIdeal(ring, tuple(tuple(g) for g in gens))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return MonomialIdeal(I.ring, I.gens + J.gens)


def ideal_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return MonomialIdeal(I.ring, [lcm(a, b) for a in I.gens for b in J.gens])


def intersect_all(ring: PolyRing, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of a family; the empty intersection is the unit ideal."""
    return reduce(ideal_intersect, ideals, MonomialIdeal.unit(ring))


def colon_monomial(I: MonomialIdeal, g: Monomial) -> MonomialIdeal:
    return MonomialIdeal(I.ring, [quotient(lcm(f, g), g) for f in I.gens])


def ideal_colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) = {m : mJ in I}. By convention (I : 0) is the unit ideal."""
    _check_same_ring(I, J)
    return intersect_all(I.ring, (colon_monomial(I, g) for g in J.gens))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ring, [support(m) for m in I.gens])


# --- polarization --------------------------------------------------------

@dataclass(frozen=True)
class Polarization:
    """Record of a polarization: variable j of the source ring became
    ``copies[j]`` consecutive variables of the target ring."""

    source: PolyRing
    target: PolyRing
    copies: tuple[int, ...]

    @property
    def added(self) -> int:
        """Number of new variables; dimension and depth shift by this much."""
        return sum(self.copies) - len(self.copies)

    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for c in self.copies:
            out.append(acc)
            acc += c
        return tuple(out)

    def apply(self, m: Monomial) -> Monomial:
        e = [0] * self.target.num_vars
        for off, c, a in zip(self.offsets(), self.copies, m):
            if a > c:
                raise PreconditionError(f"exponent {a} exceeds {c} polarization copies")
            for k in range(a):
                e[off + k] = 1
        return tuple(e)

    def apply_ideal(self, I: MonomialIdeal) -> MonomialIdeal:
        if I.ring != self.source:
            raise RingMismatchError("ideal is not in the polarization's source ring")
        return MonomialIdeal(self.target, [self.apply(m) for m in I.gens])


def polarization_for(ring: PolyRing, ideals: Iterable[MonomialIdeal]) -> Polarization:
    """A common polarization for several ideals of ``ring``.

    Each variable gets as many copies as its largest exponent among the
    generators, and at least one so the free variables survive.
    """
    copies = [1] * ring.num_vars
    for I in ideals:
        if I.ring != ring:
            raise RingMismatchError("ideals must share the ring being polarized")
        copies = [max(c, e) for c, e in zip(copies, I.max_exponents())]
    names: list[str] = []
    taken = set(ring.var_names)
    for name, c in zip(ring.var_names, copies):
        if c == 1:
            names.append(name)
            continue
        for k in range(1, c + 1):
            new = f"{name}_{k}"
            while new in taken:
                new += "_"
            taken.add(new)
            names.append(new)
    return Polarization(ring, PolyRing(tuple(names), ring.field), tuple(copies))


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, Polarization]:
    """Standard polarization x_j^e -> x_{j,1} ... x_{j,e}; the identity on
    squarefree ideals."""
    if I.is_unit:
        raise PreconditionError("cannot polarize the unit ideal")
    pol = polarization_for(I.ring, [I])
    return pol.apply_ideal(I), pol
