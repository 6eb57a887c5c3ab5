"""Coefficient fields: the rationals or a prime field."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, order=True)
class Field:
    """Characteristic 0 means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise PreconditionError(f"characteristic {self.characteristic} is not prime")

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accepts ``q``/``Q``/``0`` and ``f2``, ``F3``, ``5`` ..."""
        t = text.strip().lower()
        if t in ("q", "qq", "0"):
            return cls(0)
        if t.startswith("f"):
            t = t[1:]
        try:
            return cls(int(t))
        except ValueError:
            raise PreconditionError(f"unknown field {text!r}") from None

    def __str__(self):
        return self.name


QQ = Field(0)
GF2 = Field(2)
