"""Text formats for ideals, complexes and modules.

::

    ring x,y,z; ideal x*z, y*z;
    vertices 5; facets 1 2 3, 1 4 5;
    ring x,y; module [x] (+) [x,y];

``#`` starts a comment. ``ideal ;`` (or ``ideal 0;``) is the zero ideal. ``facets ;`` is the void
complex and ``facets {};`` the complex whose only face is the empty one.
"""
from __future__ import annotations

import re
from typing import Union

from .errors import ParseError, PreconditionError
from .invariants import ModuleExpr
from .monomial import MonomialIdeal, PolyRing
from .simplicial import SimplicialComplex

Parsed = Union[MonomialIdeal, SimplicialComplex, ModuleExpr]

_KEYWORDS = ("ring", "ideal", "module", "vertices", "facets")
_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?\s*$")


class _Source:
    def __init__(self, text: str):
        self.text = text

    def where(self, offset: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, offset) + 1
        col = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        return line, col

    def error(self, message: str, offset: int) -> ParseError:
        return ParseError(message, *self.where(offset))


def _statements(src: _Source):
    """Yield (keyword, body, body_offset) for each ';'-terminated statement."""
    text = src.text
    pos = 0
    while True:
        m = re.compile(r"\s*").match(text, pos)
        pos = m.end()
        if pos >= len(text):
            return
        end = text.find(";", pos)
        if end < 0:
            raise src.error("missing ';'", pos)
        kw = re.compile(r"[A-Za-z]+").match(text, pos)
        if not kw or kw.group(0) not in _KEYWORDS:
            raise src.error(f"expected one of {', '.join(_KEYWORDS)}", pos)
        yield kw.group(0), text[kw.end():end], kw.end()
        pos = end + 1


def _split(body: str, sep: str, offset: int):
    """Split on ``sep`` keeping the absolute offset of each piece."""
    out, start = [], 0
    while True:
        k = body.find(sep, start)
        if k < 0:
            out.append((body[start:], offset + start))
            return out
        out.append((body[start:k], offset + start))
        start = k + len(sep)


def _parse_term(src: _Source, ring: PolyRing, term: str, offset: int):
    stripped = term.strip()
    lead = offset + (len(term) - len(term.lstrip()))
    if not stripped:
        raise src.error("empty term", lead)
    if any(ch in stripped for ch in "+-/"):
        raise src.error(f"non-monomial term {stripped!r}", lead)
    if stripped == "1":
        return ring.one()
    e = [0] * ring.num_vars
    for factor, foff in _split(term, "*", offset):
        m = _FACTOR.match(factor)
        if not m:
            raise src.error(f"non-monomial term {stripped!r}", foff)
        name, power = m.group(1), int(m.group(2) or 1)
        if name not in ring.var_names:
            raise src.error(f"unknown variable {name!r}", foff + factor.index(name))
        e[ring.index(name)] += power
    return tuple(e)


def _parse_ideal_body(src: _Source, ring: PolyRing, body: str, offset: int) -> MonomialIdeal:
    if not body.strip() or body.strip() == "0":
        return MonomialIdeal.zero(ring)
    return MonomialIdeal(ring, [_parse_term(src, ring, t, o) for t, o in _split(body, ",", offset)])


def _parse_ring(src: _Source, body: str, offset: int) -> PolyRing:
    names = []
    for name, o in _split(body, ",", offset):
        if not name.strip().isidentifier():
            raise src.error(f"bad variable name {name.strip()!r}", o)
        names.append(name.strip())
    try:
        return PolyRing(tuple(names))
    except PreconditionError as exc:
        raise src.error(str(exc), offset) from None


def _parse_module_body(src: _Source, ring: PolyRing, body: str, offset: int) -> ModuleExpr:
    summands = []
    for piece, o in _split(body, "(+)", offset):
        inner = piece.strip()
        lead = o + len(piece) - len(piece.lstrip())
        if not (inner.startswith("[") and inner.endswith("]")):
            raise src.error("module summands are written [generators]", lead)
        I = _parse_ideal_body(src, ring, inner[1:-1], lead + 1)
        if I.is_unit:
            raise src.error("summand ideals must be proper", lead)
        summands.append(I)
    return ModuleExpr(ring, tuple(summands))


def _parse_facets(src: _Source, n: int, body: str, offset: int) -> SimplicialComplex:
    facets = []
    if body.strip():
        for group, o in _split(body, ",", offset):
            if group.strip() == "{}":
                facets.append(())
                continue
            verts = []
            for m in re.finditer(r"\S+", group):
                tok = m.group(0)
                if not tok.isdigit() or not 1 <= int(tok) <= n:
                    raise src.error(f"bad vertex {tok!r} (vertices are 1..{n})", o + m.start())
                verts.append(int(tok) - 1)
            if not verts:
                raise src.error("empty facet; write {} for the empty face", o)
            facets.append(verts)
    return SimplicialComplex.from_facets(n, facets)


def parse_input(text: str) -> Parsed:
    # comments run from '#' to end of line; blank them so offsets survive
    text = re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)
    src = _Source(text)
    ring = None
    vertices = None
    result = None
    for kw, body, off in _statements(src):
        if result is not None:
            raise src.error("unexpected statement after the input value", off)
        if kw == "ring":
            ring = _parse_ring(src, body, off)
        elif kw == "vertices":
            if not body.strip().isdigit() or int(body) < 1:
                raise src.error("vertices takes a positive integer", off)
            vertices = int(body)
        elif kw in ("ideal", "module"):
            if ring is None:
                raise src.error(f"'{kw}' needs a preceding 'ring' statement", off)
            result = (_parse_ideal_body if kw == "ideal" else _parse_module_body)(src, ring, body, off)
        elif kw == "facets":
            if vertices is None:
                raise src.error("'facets' needs a preceding 'vertices' statement", off)
            result = _parse_facets(src, vertices, body, off)
    if result is None:
        raise src.error("no ideal, module or facets statement", len(text))
    return result


def format_input(value: Parsed) -> str:
    """Canonical text; ``parse_input(format_input(v)) == v``."""
    if isinstance(value, SimplicialComplex):
        return str(value)
    if isinstance(value, MonomialIdeal):
        gens = "" if value.is_zero else ", ".join(value.generator_strings())
        return f"ring {value.ring}; ideal {gens};"
    if isinstance(value, ModuleExpr):
        body = " (+) ".join("[" + ",".join(I.generator_strings()) + "]" for I in value.summands)
        return f"ring {value.ring}; module {body};"
    raise TypeError(f"cannot format {type(value).__name__}")
