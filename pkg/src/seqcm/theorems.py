"""Idealization, reproducible random instances and randomized verifiers for
the structural theorems about dimension filtrations.

Every verifier evaluates the "combined" side of its equivalence in
``EvalMode.DIRECT``, so the statement under test is never used to check
itself. Trials draw from independent generators spawned from the master
seed, so a failing trial can be replayed from ``(seed, trial)`` alone.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .errors import PreconditionError
from .fields import Field
from .filtration import (
    EvalMode,
    dimension_filtration,
    dims_of,
    cyclic_largest_submodule,
    is_sequentially_cm,
    largest_submodule,
)
from .invariants import ModuleExpr, cyclic_dim, krull_dim
from .monomial import (
    MonomialIdeal,
    PolyRing,
    colon_monomial,
    ideal_colon,
    intersect_all,
)
from .parsing import format_input
from .simplicial import SimplicialComplex, bits, from_ideal, link, mask_of, to_ideal


# --- idealization --------------------------------------------------------

@dataclass(frozen=True)
class IdealizationPresentation:
    """A = R x M for R = k[x]/I and M = R/J, presented as
    k[x, y]/(I + yJ + (y^2))."""

    base_ideal: MonomialIdeal
    module_ideal: MonomialIdeal
    total_ideal: MonomialIdeal

    @property
    def ring(self) -> PolyRing:
        return self.total_ideal.ring

    def lift(self, I: MonomialIdeal, times_y: bool = False) -> MonomialIdeal:
        extra = (1,) if times_y else (0,)
        return MonomialIdeal(self.ring, [m + extra for m in I.gens])

    def embed(self, base_piece: MonomialIdeal, module_piece: MonomialIdeal) -> MonomialIdeal:
        """The A-ideal of the R-submodule base_piece/I (+) y * module_piece/J."""
        y2 = MonomialIdeal(self.ring, [self.ring.var(self.ring.num_vars - 1, 2)])
        return self.lift(base_piece) + self.lift(module_piece, times_y=True) + y2

    def as_module(self) -> ModuleExpr:
        return ModuleExpr.cyclic(self.total_ideal)

    def as_base_module(self) -> ModuleExpr:
        """A read as an R-module: R/I (+) R/J."""
        return ModuleExpr(self.base_ideal.ring, (self.base_ideal, self.module_ideal))


def _fresh_name(names) -> str:
    for cand in itertools.chain(("y", "t"), (f"y{i}" for i in itertools.count())):
        if cand not in names:
            return cand
    raise AssertionError("unreachable")


def idealize(I: MonomialIdeal, J: MonomialIdeal) -> IdealizationPresentation:
    if I.ring != J.ring:
        raise PreconditionError("I and J must share a ring")
    if not I.issubset(J):
        raise PreconditionError(f"{I} is not contained in {J}")
    if J.is_unit:
        raise PreconditionError("M = R/J is zero: J must be proper")
    base = I.ring
    ring = PolyRing(base.var_names + (_fresh_name(base.var_names),), base.field)
    pres = IdealizationPresentation(I, J, MonomialIdeal.zero(ring))
    total = pres.embed(I, J)
    return IdealizationPresentation(I, J, total)


# --- random instances ----------------------------------------------------

LIMITS = {"vertices": 8, "variables": 5, "degree": 4}


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Generator of trial ``trial`` under master seed ``seed``; identical to
    the ``trial``-th child of ``SeedSequence(seed).spawn``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


def random_complex(rng: np.random.Generator, vertices: int, p: float,
                   max_face: int = 4) -> SimplicialComplex:
    """Every vertex, plus each subset of 2..max_face vertices with probability p."""
    faces = [1 << v for v in range(vertices)]
    for size in range(2, min(max_face, vertices) + 1):
        for combo in itertools.combinations(range(vertices), size):
            if rng.random() < p:
                faces.append(mask_of(combo))
    return SimplicialComplex(vertices, tuple(faces))


def random_ideal(rng: np.random.Generator, ring: PolyRing, max_gens: int = 3,
                 degree: int = 3, max_exp: int = 2, zero_prob: float = 0.0) -> MonomialIdeal:
    if rng.random() < zero_prob:
        return MonomialIdeal.zero(ring)
    n = ring.num_vars
    gens = []
    for _ in range(int(rng.integers(1, max_gens + 1))):
        e = [0] * n
        for _ in range(int(rng.integers(1, degree + 1))):
            room = [j for j in range(n) if e[j] < max_exp]
            if not room:
                break
            e[room[int(rng.integers(len(room)))]] += 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)


def random_components(rng: np.random.Generator, ring: PolyRing, max_components: int = 3,
                      max_exp: int = 2) -> MonomialIdeal:
    """Intersection of random irreducible ideals generated by variable powers."""
    n = ring.num_vars
    parts = []
    for _ in range(int(rng.integers(1, max_components + 1))):
        size = int(rng.integers(1, max(n - 1, 1) + 1))
        chosen = rng.choice(n, size=size, replace=False)
        parts.append(MonomialIdeal(ring, [ring.var(int(j), int(rng.integers(1, max_exp + 1)))
                                          for j in chosen]))
    return intersect_all(ring, parts)


def raise_powers(rng: np.random.Generator, I: MonomialIdeal, max_exp: int = 2) -> MonomialIdeal:
    """Replace every exponent 1 of every generator by a random power."""
    return MonomialIdeal(I.ring, [tuple(int(rng.integers(1, max_exp + 1)) if e else 0 for e in m)
                                  for m in I.gens])


def disconnected_complex(rng: np.random.Generator, vertices: int) -> SimplicialComplex:
    """Two disjoint faces with at least two vertices each, plus random
    smaller faces on the remaining vertices. Never sequentially CM when the
    two big faces have the same size, often not otherwise."""
    order = [int(v) for v in rng.permutation(vertices)]
    a = int(rng.integers(2, vertices - 1))
    b = int(rng.integers(2, vertices - a + 1))
    first, second, rest = order[:a], order[a:a + b], order[a + b:]
    facets = [mask_of(first), mask_of(second)] + [1 << v for v in rest]
    for v in rest:
        if rng.random() < 0.5:
            facets.append(1 << v | 1 << order[int(rng.integers(a + b))])
    return SimplicialComplex(vertices, tuple(facets))


def random_test_ideal(rng: np.random.Generator, ring: PolyRing, max_exp: int = 2) -> MonomialIdeal:
    """Mixture used by the verifiers: raw generators, intersections of
    irreducibles, and Stanley-Reisner ideals of random graphs, complexes
    and disconnected complexes, the last three optionally with raised
    powers. Small random ideals are almost always sequentially CM; the
    complex-based styles supply the counterexamples."""
    n = ring.num_vars
    style = int(rng.integers(5))
    if style == 0:
        return random_ideal(rng, ring, max_gens=4, degree=3, max_exp=max_exp, zero_prob=0.1)
    if style == 1:
        return random_components(rng, ring, max_exp=max_exp)
    if style == 4 and n >= 4:
        delta = disconnected_complex(rng, n)
    else:
        delta = random_complex(rng, n, float(rng.uniform(0.2, 0.6)), 2 if style == 2 else 3)
    I = to_ideal(delta, ring)
    if rng.random() < 0.4:
        I = raise_powers(rng, I, max_exp)
    return I


def random_squarefree(rng: np.random.Generator, ring: PolyRing, max_gens: int = 4) -> MonomialIdeal:
    n = ring.num_vars
    gens = []
    for _ in range(int(rng.integers(1, max_gens + 1))):
        size = int(rng.integers(1, min(n, 3) + 1))
        chosen = rng.choice(n, size=size, replace=False)
        gens.append(tuple(1 if j in chosen else 0 for j in range(n)))
    return MonomialIdeal(ring, gens)


def random_module(rng: np.random.Generator, ring: PolyRing, max_summands: int = 2) -> ModuleExpr:
    k = int(rng.integers(1, max_summands + 1))
    return ModuleExpr(ring, tuple(random_test_ideal(rng, ring) for _ in range(k)))


def random_pair(rng: np.random.Generator, ring: PolyRing) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Nested proper ideals I <= J."""
    roll = rng.random()
    if roll < 0.15:
        return MonomialIdeal.zero(ring), random_test_ideal(rng, ring)
    I = random_test_ideal(rng, ring)
    if roll < 0.25:
        return I, I
    J = I + random_ideal(rng, ring, max_gens=2, degree=2)
    return I, (I if J.is_unit else J)


def random_instance(kind: str, params: dict | None = None, seed: int = 0):
    """Reproducible instance of the named kind.

    kinds: ``complex`` (vertices, p, max_face), ``ideal`` (variables, degree,
    max_gens, max_exp), ``squarefree`` (variables, max_gens), ``module``
    (variables, degree, max_summands), ``pair`` (variables, degree).
    """
    params = dict(params or {})
    rng = np.random.default_rng(seed)
    if "vertices" in params and not 1 <= params["vertices"] <= LIMITS["vertices"]:
        raise PreconditionError(f"vertices must lie in 1..{LIMITS['vertices']}")
    if "variables" in params and not 1 <= params["variables"] <= LIMITS["variables"]:
        raise PreconditionError(f"variables must lie in 1..{LIMITS['variables']}")
    if "degree" in params and not 1 <= params["degree"] <= LIMITS["degree"]:
        raise PreconditionError(f"degree must lie in 1..{LIMITS['degree']}")
    if "p" in params and not 0 <= params["p"] <= 1:
        raise PreconditionError("p must lie in [0, 1]")
    if kind == "complex":
        return random_complex(rng, params.get("vertices", 5), params.get("p", 0.5),
                              params.get("max_face", 4))
    ring = PolyRing.standard(params.pop("variables", 3))
    degree = params.get("degree", 3)
    if kind == "ideal":
        return random_ideal(rng, ring, params.get("max_gens", 3), degree, params.get("max_exp", 2))
    if kind == "squarefree":
        return random_squarefree(rng, ring, params.get("max_gens", 4))
    if kind == "module":
        return random_module(rng, ring, params.get("max_summands", 2))
    if kind == "pair":
        return random_pair(rng, ring)
    raise PreconditionError(f"unknown instance kind {kind!r}")


# --- reports -------------------------------------------------------------

@dataclass
class TheoremReport:
    theorem: str
    trials: int
    seed: int
    failures: list[dict[str, Any]] = field(default_factory=list)
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "trials": self.trials,
            "seed": self.seed,
            "verdict": self.verdict,
            "failures": self.failures,
            "diagnostics": self.diagnostics,
        }


def _run(theorem: str, trials: int, seed: int, trial_fn: Callable[[np.random.Generator], dict | None],
         diagnostics: dict | None = None) -> TheoremReport:
    if trials < 1:
        raise PreconditionError("trials must be at least 1")
    report = TheoremReport(theorem, trials, seed, diagnostics=diagnostics if diagnostics is not None else {})
    for t in range(trials):
        failure = trial_fn(trial_rng(seed, t))
        if failure is not None:
            report.failures.append({"trial": t, **failure})
    return report


def _small_ring(rng: np.random.Generator, max_vars: int) -> PolyRing:
    return PolyRing.standard(int(rng.integers(1, max_vars + 1)))


# --- independent oracle for M_n ------------------------------------------

def _box(exponents):
    return itertools.product(*(range(e + 1) for e in exponents))


def is_largest_submodule(M: ModuleExpr, n, ideals) -> bool:
    """Check J_k/I_k is the largest submodule of dim <= n, summand by summand.

    Its dimension must be at most n, and every monomial m outside J_k must
    generate a submodule of dimension > n. (I : m) only depends on m
    clipped to the exponent box of I, so checking the box is exhaustive.
    """
    for I, J in zip(M.summands, ideals):
        if not I.issubset(J):
            return False
        if I != J and cyclic_dim(ideal_colon(I, J)) > n:
            return False
        for m in _box(I.max_exponents()):
            if not J.contains(m) and cyclic_dim(colon_monomial(I, m)) <= n:
                return False
    return True


# --- verifiers -----------------------------------------------------------

def _merge(parts: list[tuple[ModuleExpr, tuple[MonomialIdeal, ...]]]) -> tuple[MonomialIdeal, ...]:
    pairs = [(I, J) for M, ideals in parts for I, J in zip(M.summands, ideals)]
    pairs.sort(key=lambda p: p[0].sort_key())
    return tuple(J for _, J in pairs)


def check_direct_sum_filtration(M: ModuleExpr, N: ModuleExpr) -> dict | None:
    L = M + N
    top = krull_dim(L)
    for n in range(-1, int(top) + 2):
        combined = largest_submodule(L, n, EvalMode.DIRECT).ideals
        split = _merge([(M, largest_submodule(M, n).ideals), (N, largest_submodule(N, n).ideals)])
        if combined != split or not is_largest_submodule(L, n, combined):
            return {"M": format_input(M), "N": format_input(N), "n": n,
                    "combined": [str(J) for J in combined], "componentwise": [str(J) for J in split]}
    return None


def verify_direct_sum_filtration(trials: int = 200, seed: int = 1) -> TheoremReport:
    """[M (+) N]_n = M_n (+) N_n for every n."""
    def trial(rng):
        ring = _small_ring(rng, 4)
        M = random_module(rng, ring, 2)
        N = random_module(rng, ring, 2)
        return check_direct_sum_filtration(M, N)
    return _run("lemma31", trials, seed, trial)


def check_direct_sum_seqcm(M: ModuleExpr, N: ModuleExpr, field: Field | None = None) -> dict | None:
    combined = bool(is_sequentially_cm(M + N, field, EvalMode.DIRECT))
    m, n = bool(is_sequentially_cm(M, field)), bool(is_sequentially_cm(N, field))
    if combined != (m and n):
        return {"M": format_input(M), "N": format_input(N),
                "combined": combined, "M_seqcm": m, "N_seqcm": n}
    return None


def verify_direct_sum_seqcm(trials: int = 200, seed: int = 7) -> TheoremReport:
    """M (+) N is sequentially CM iff both M and N are."""
    counts = {"both": 0, "neither_or_one": 0}

    def trial(rng):
        ring = _small_ring(rng, 5)
        M = random_module(rng, ring, 1)
        N = random_module(rng, ring, 2)
        failure = check_direct_sum_seqcm(M, N)
        if failure is None:
            key = "both" if is_sequentially_cm(M) and is_sequentially_cm(N) else "neither_or_one"
            counts[key] += 1
        return failure
    return _run("prop32", trials, seed, trial, counts)


def check_idealization(I: MonomialIdeal, J: MonomialIdeal, field: Field | None = None) -> dict | None:
    A = idealize(I, J)
    ring_side = bool(is_sequentially_cm(A.as_module(), field))
    base = bool(is_sequentially_cm(ModuleExpr.cyclic(I), field))
    module = bool(is_sequentially_cm(ModuleExpr.cyclic(J), field))
    as_r_module = bool(is_sequentially_cm(A.as_base_module(), field, EvalMode.DIRECT))
    if ring_side != (base and module) or ring_side != as_r_module or (ring_side and not base):
        return {"I": format_input(I), "J": format_input(J), "A": format_input(A.total_ideal),
                "A_seqcm": ring_side, "A_as_R_module_seqcm": as_r_module,
                "R_seqcm": base, "M_seqcm": module}
    return None


def verify_idealization(trials: int = 100, seed: int = 11) -> TheoremReport:
    """R x M is a sequentially CM ring iff R and M are sequentially CM.

    Also spot-checks that A is sequentially CM over itself iff over R, and
    that A sequentially CM forces R sequentially CM (R is a direct summand
    of A as an R-module).
    """
    sizes: dict[str, int] = {}
    seqcm = {"true": 0, "false": 0}

    def trial(rng):
        ring = _small_ring(rng, 4)
        I, J = random_pair(rng, ring)
        A = idealize(I, J)
        key = str(len(dims_of(A.as_module())))
        sizes[key] = sizes.get(key, 0) + 1
        failure = check_idealization(I, J)
        if failure is None:
            seqcm[str(bool(is_sequentially_cm(A.as_module()))).lower()] += 1
        return failure
    report = _run("cor38", trials, seed, trial)
    report.diagnostics = {"dimension_set_sizes": dict(sorted(sizes.items())), "A_seqcm": seqcm}
    return report


def check_extension_filtration(I: MonomialIdeal, J: MonomialIdeal) -> dict | None:
    A = idealize(I, J)
    over_a = dimension_filtration(A.as_module())
    dims = tuple(sorted(set(dims_of(ModuleExpr.cyclic(I))) | set(dims_of(ModuleExpr.cyclic(J)))))
    embedded = [A.total_ideal]
    nested = True
    for d in dims:
        base_piece, module_piece = cyclic_largest_submodule(I, d), cyclic_largest_submodule(J, d)
        # the largest R-submodule must already be an A-submodule: y * R_d lands in M_d
        nested &= base_piece.issubset(module_piece)
        embedded.append(A.embed(base_piece, module_piece))
    chain_a = [p.ideals[0] for p in over_a.pieces]
    if over_a.dims != dims or chain_a != embedded or not nested:
        return {"I": format_input(I), "J": format_input(J),
                "dims_A": list(over_a.dims), "dims_R": list(dims),
                "chain_A": [str(x) for x in chain_a], "chain_R": [str(x) for x in embedded]}
    return None


def verify_extension_filtration(trials: int = 100, seed: int = 3) -> TheoremReport:
    """The filtration of A = R x M over A equals its filtration over R."""
    def trial(rng):
        ring = _small_ring(rng, 4)
        return check_extension_filtration(*random_pair(rng, ring))
    return _run("thm33", trials, seed, trial)


def check_links(delta: SimplicialComplex, field: Field | None = None) -> dict | None:
    ring = PolyRing.standard(delta.vertex_count)
    for face in sorted(delta.faces, key=lambda f: (f.bit_count(), bits(f))):
        lk = link(delta, face)
        if not is_sequentially_cm(ModuleExpr.cyclic(to_ideal(lk, ring)), field):
            return {"complex": str(delta), "face": [v + 1 for v in bits(face)]}
    return None


def some_proper_link_fails(delta: SimplicialComplex, field: Field | None = None) -> bool:
    ring = PolyRing.standard(delta.vertex_count)
    return any(
        not is_sequentially_cm(ModuleExpr.cyclic(to_ideal(link(delta, f), ring)), field)
        for f in delta.faces if f
    )


def verify_localization_links(trials: int = 100, seed: int = 5, max_vertices: int = 7,
                              attempts: int = 60) -> TheoremReport:
    """Links of sequentially CM complexes are sequentially CM.

    Each trial draws complexes until one is sequentially CM and asserts
    the claim at every face. Non-sequentially-CM draws are recorded, with
    whether some proper link also fails, as data on the converse.
    """
    diag = {"kept": 0, "rejected": 0, "rejected_with_failing_link": 0, "exhausted": 0}

    def trial(rng):
        for _ in range(attempts):
            v = int(rng.integers(2, max_vertices + 1))
            delta = random_complex(rng, v, float(rng.uniform(0.1, 0.9)))
            ring = PolyRing.standard(v)
            if is_sequentially_cm(ModuleExpr.cyclic(to_ideal(delta, ring))):
                diag["kept"] += 1
                return check_links(delta)
            diag["rejected"] += 1
            diag["rejected_with_failing_link"] += some_proper_link_fails(delta)
        diag["exhausted"] += 1
        return None
    return _run("thm11", trials, seed, trial, diag)


def stratified_chain(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Filtration chain of a squarefree R/I read off the facets: D_i is the
    Stanley-Reisner ideal of the subcomplex generated by facets with more
    than d_i vertices."""
    delta = from_ideal(I)
    dims = sorted({f.bit_count() for f in delta.facets})
    return [I] + [to_ideal(delta.facets_of_size_above(d), I.ring) for d in dims]


def check_two_route_chain(I: MonomialIdeal) -> dict | None:
    algebraic = [p.ideals[0] for p in dimension_filtration(ModuleExpr.cyclic(I)).pieces]
    combinatorial = stratified_chain(I)
    if algebraic != combinatorial:
        return {"I": format_input(I), "decomposition_chain": [str(x) for x in algebraic],
                "facet_chain": [str(x) for x in combinatorial]}
    return None


def verify_two_route_chain(trials: int = 300, seed: int = 13, max_vars: int = 6) -> TheoremReport:
    """Primary-decomposition chain = facet-stratified chain, squarefree case."""
    def trial(rng):
        n = int(rng.integers(1, max_vars + 1))
        ring = PolyRing.standard(n)
        if rng.random() < 0.5:
            I = random_squarefree(rng, ring)
        else:
            I = to_ideal(random_complex(rng, n, float(rng.uniform(0.1, 0.9))), ring)
        return check_two_route_chain(I)
    return _run("chains", trials, seed, trial)


VERIFIERS: dict[str, Callable[..., TheoremReport]] = {
    "lemma31": verify_direct_sum_filtration,
    "prop32": verify_direct_sum_seqcm,
    "cor38": verify_idealization,
    "thm33": verify_extension_filtration,
    "thm11": verify_localization_links,
    "chains": verify_two_route_chain,
}
