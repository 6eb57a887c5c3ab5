"""JSON documents for every command. Keys come out in a fixed order and
every document carries ``"schema": 1``; chain pieces equal to the whole
ring are written ``["1"]``."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import singledispatch
from typing import Any

from .decomposition import PrimaryDecomposition
from .fields import Field
from .filtration import DimensionFiltration, LevelCertificate, SeqCMVerdict
from .invariants import ModuleExpr, depth, is_cohen_macaulay, krull_dim
from .monomial import MonomialIdeal
from .theorems import TheoremReport

SCHEMA = 1


@dataclass(frozen=True)
class InvariantSummary:
    dim: int
    depth: int
    cm: bool
    field: Field

    @classmethod
    def of(cls, M: ModuleExpr, field: Field | None = None) -> "InvariantSummary":
        field = M.ring.field if field is None else field
        return cls(krull_dim(M), depth(M, field), is_cohen_macaulay(M, field), field)


@dataclass(frozen=True)
class FiltrationResult:
    filtration: DimensionFiltration
    verdict: SeqCMVerdict


def _gens(I: MonomialIdeal) -> list[str]:
    return I.generator_strings()


def _piece(ideals: tuple[MonomialIdeal, ...]):
    if len(ideals) == 1:
        return _gens(ideals[0])
    return [_gens(I) for I in ideals]


def _level(level: LevelCertificate) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "dim": level.dim,
        "quotient_dim": level.quotient_dim,
        "annihilator": _gens(level.annihilator),
        "cm": level.cm,
    }
    if level.quotient_depth is not None:
        doc["quotient_depth"] = level.quotient_depth
    if level.skeletons:
        doc["skeletons"] = [
            {"summand": s.summand, "skeleton": s.skeleton_dim, "ring_dim": s.ring_dim, "cm": s.cm}
            for s in level.skeletons
        ]
    return doc


def certificate_doc(verdict: SeqCMVerdict) -> dict[str, Any]:
    return {"mode": verdict.mode.value, "levels": [_level(lv) for lv in verdict.levels]}


@singledispatch
def report_doc(result, **kw) -> dict[str, Any]:
    raise TypeError(f"no report format for {type(result).__name__}")


@report_doc.register
def _(result: PrimaryDecomposition, **kw):
    return {
        "schema": SCHEMA,
        "ideal": _gens(result.ideal),
        "primary": [{"prime": _gens(c.prime), "component": _gens(c.component)} for c in result],
    }


@report_doc.register
def _(result: InvariantSummary, **kw):
    return {"schema": SCHEMA, "dim": result.dim, "depth": result.depth,
            "cm": result.cm, "field": result.field.name}


@report_doc.register
def _(result: FiltrationResult, **kw):
    filt, verdict = result.filtration, result.verdict
    return {
        "schema": SCHEMA,
        "dims": list(filt.dims),
        "chain": [_piece(p.ideals) for p in filt.pieces],
        "seqcm": verdict.value,
        "field": verdict.field.name,
        "quotients": [{"dim": q.dim, "annihilator": _gens(q.annihilator)} for q in filt.quotients],
        "certificate": certificate_doc(verdict),
    }


@report_doc.register
def _(result: SeqCMVerdict, certificate: bool = False, **kw):
    doc = {"schema": SCHEMA, "seqcm": result.value, "field": result.field.name}
    if certificate:
        doc["certificate"] = certificate_doc(result)
    return doc


@report_doc.register
def _(result: TheoremReport, **kw):
    return {"schema": SCHEMA, **result.to_dict()}


def emit_report(result, **kw) -> str:
    """Serialize any result value as a compact, deterministic JSON document."""
    return json.dumps(report_doc(result, **kw), separators=(",", ":"))
