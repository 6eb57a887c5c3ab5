"""Acceptance gate. Each test checks one criterion at its stated scale and
time limit and records a PASS/FAIL line; the lines are printed at the end
of the pytest run (see conftest.py) or directly when run as a script."""
import json
import time

import pytest

import seqcm.invariants as inv
from seqcm.cli import main, read_fixture
from seqcm.fields import GF2, QQ, Field
from seqcm.filtration import EvalMode, dimension_filtration, is_sequentially_cm
from seqcm.invariants import ModuleExpr, depth, is_cohen_macaulay, krull_dim
from seqcm.monomial import MonomialIdeal, PolyRing
from seqcm.parsing import parse_input
from seqcm.report import emit_report
from seqcm.simplicial import reduced_homology, to_ideal
from seqcm.theorems import (
    random_complex,
    trial_rng,
    verify_direct_sum_filtration,
    verify_direct_sum_seqcm,
    verify_extension_filtration,
    verify_idealization,
    verify_localization_links,
    verify_two_route_chain,
)

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, elapsed: float, limit: float | None, detail: str = ""):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    budget = f" (limit {limit:.0f}s)" if limit is not None else ""
    line = f"[{status}] {number}. {title}: {elapsed:.2f}s{budget}"
    if detail:
        line += f" | {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, detail
    assert within, f"took {elapsed:.1f}s, limit {limit}s"


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def _worked_example():
    R = PolyRing(("x", "y", "z"))
    I = parse_input("ring x,y,z; ideal x*z, y*z;")
    M = ModuleExpr.cyclic(I)
    f = dimension_filtration(M)
    chain = [p.ideals[0] for p in f.pieces]
    expected = [I, MonomialIdeal(R, [(0, 0, 1)]), MonomialIdeal.unit(R)]
    strict = all(a < b for a, b in zip(chain, chain[1:]))
    checks = {
        "dims": f.dims == (1, 2),
        "chain": chain == expected and strict,
        "seqcm": bool(is_sequentially_cm(M)) and bool(is_sequentially_cm(M, mode=EvalMode.DIRECT)),
        "quotient dims": [q.dim for q in f.quotients] == [1, 2],
    }
    return checks


def test_1_worked_example():
    checks, t = timed(_worked_example)
    bad = [k for k, v in checks.items() if not v]
    record(1, "worked example (xz,yz): S={1,2}, chain, seq-CM, dim C_i", not bad, t, 1,
           "all checks hold" if not bad else f"failed: {bad}")


def _verifier_criterion(number, title, verifier, trials, limit):
    report, t = timed(lambda: verifier(trials=trials))
    detail = f"{report.trials} trials, seed {report.seed}, {len(report.failures)} failures"
    if report.diagnostics:
        detail += f", diagnostics {json.dumps(report.diagnostics, separators=(',', ':'))}"
    record(number, title, report.passed and report.trials >= trials, t, limit, detail)


def test_2_two_route_chains():
    _verifier_criterion(2, "two-route chain agreement, squarefree, <= 6 variables",
                        verify_two_route_chain, 300, 60)


def test_3_direct_sum_filtration():
    _verifier_criterion(3, "direct-sum filtration law, all n", verify_direct_sum_filtration, 200, 60)


def test_4_direct_sum_seqcm():
    _verifier_criterion(4, "direct-sum seq-CM equivalence, combined side unsplit",
                        verify_direct_sum_seqcm, 200, 120)


def test_5_idealization():
    _verifier_criterion(5, "idealization seq-CM equivalence, <= 4 variables",
                        verify_idealization, 100, 120)


def test_6_extension_filtration():
    _verifier_criterion(6, "idealization filtration over A equals over R",
                        verify_extension_filtration, 100, 120)


def test_7_links():
    _verifier_criterion(7, "links of seq-CM complexes on <= 7 vertices are seq-CM",
                        verify_localization_links, 100, 120)


class _HomologyAudit:
    """Wraps the homology call used by the CM test and checks every result."""

    def __init__(self, original):
        self.original = original
        self.calls = 0
        self.problems: list[str] = []

    def __call__(self, delta, field=QQ):
        h = self.original(delta, field)
        self.calls += 1
        faces = delta.f_vector()
        chi = sum((-1) ** (size - 1) * count for size, count in enumerate(faces))
        if h.euler_characteristic != chi:
            self.problems.append(f"euler {delta}")
        q = h if field.characteristic == 0 else self.original(delta, QQ)
        for p in (2, 3):
            fp = self.original(delta, Field(p))
            if any(a > b for a, b in zip(q.ranks, fp.ranks)):
                self.problems.append(f"ranks {delta} over F{p}")
        return h


def _homological(monkeypatch):
    audit = _HomologyAudit(inv.reduced_homology)
    monkeypatch.setattr(inv, "reduced_homology", audit)
    mismatches = 0
    complexes = 0
    for t in range(300):
        rng = trial_rng(17, t)
        v = int(rng.integers(2, 8))
        delta = random_complex(rng, v, float(rng.uniform(0.1, 0.9)))
        M = ModuleExpr.cyclic(to_ideal(delta))
        for field in (QQ, GF2):
            complexes += 1
            if is_cohen_macaulay(M, field) != (depth(M, field) == krull_dim(M)):
                mismatches += 1
    rp2 = ModuleExpr.cyclic(to_ideal(parse_input(read_fixture("rp2"))))
    flip = is_cohen_macaulay(rp2, QQ) and not is_cohen_macaulay(rp2, GF2)
    flip &= reduced_homology(parse_input(read_fixture("rp2")), GF2)[1] == 1
    return mismatches, complexes, audit, flip


def test_8_homological_cross_checks(monkeypatch):
    (mismatches, complexes, audit, flip), t = timed(lambda: _homological(monkeypatch))
    ok = mismatches == 0 and not audit.problems and flip and complexes >= 300
    detail = (f"{complexes} complex/field cases, {mismatches} CM-vs-depth mismatches, "
              f"{audit.calls} homology calls audited, {len(audit.problems)} identity failures, "
              f"projective plane flips: {flip}")
    record(8, "homological cross-checks", ok, t, 60, detail)


def _twice(capsys, argv):
    outs = []
    for _ in range(2):
        code = main(argv)
        outs.append((code, capsys.readouterr().out))
    return outs


def test_9_determinism(capsys):
    def run():
        cases = [
            ["verify", "lemma31", "--trials", "40", "--seed", "99"],
            ["verify", "thm11", "--trials", "20", "--seed", "8"],
            ["filtration", "--fixture", "two_triangles", "--mode", "direct"],
        ]
        same = True
        for argv in cases:
            (c1, a), (c2, b) = _twice(capsys, argv)
            same &= c1 == c2 == 0 and a == b and a.strip() != ""
        direct = emit_report(verify_idealization(trials=15, seed=21))
        same &= direct == emit_report(verify_idealization(trials=15, seed=21))
        return same
    same, t = timed(run)
    record(9, "identical seeds give byte-identical JSON", same, t, None,
           "two consecutive runs compared byte for byte")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
