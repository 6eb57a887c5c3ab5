"""Exact ranks of sparse integer matrices.

Matrices are given as a list of sparse rows ``{column: value}``. Over the
rationals the elimination is fraction-free: rows stay integral and are
divided by their content after every step. Over F_p it is ordinary
elimination modulo p, with F_2 rows packed into Python ints.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable

Row = dict[int, int]


def _content(row: Row) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def rank_rational(rows: Iterable[Row]) -> int:
    pivots: dict[int, Row] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = max(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            a, b = p[c], r[c]
            # r <- a*r - b*p kills column c and stays integral
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            g = _content(new)
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            r = new
    return len(pivots)


def rank_mod_p(rows: Iterable[Row], p: int) -> int:
    if p == 2:
        return rank_gf2(sum(1 << c for c, v in row.items() if v % 2) for row in rows)
    pivots: dict[int, Row] = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = max(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                w = (r.get(k, 0) - f * v) % p
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
    return len(pivots)


def rank_gf2(rows: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = r
                break
            r ^= piv
    return len(pivots)


def rank(rows: Iterable[Row], characteristic: int = 0) -> int:
    if characteristic == 0:
        return rank_rational(rows)
    return rank_mod_p(rows, characteristic)
