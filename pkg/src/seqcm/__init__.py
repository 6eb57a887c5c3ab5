"""Exact toolkit for dimension filtrations and sequential Cohen-Macaulayness
of monomial quotients k[x_1..x_n]/I and finite direct sums of them."""
from .decomposition import associated_primes, irreducible_decomposition, primary_decomposition
from .errors import InvariantViolation, ParseError, PreconditionError, RingMismatchError, SeqCMError
from .fields import GF2, QQ, Field
from .filtration import EvalMode, dimension_filtration, is_sequentially_cm, largest_submodule
from .invariants import ModuleExpr, depth, is_cohen_macaulay, krull_dim
from .monomial import MonomialIdeal, PolyRing, polarize
from .parsing import format_input, parse_input
from .report import emit_report
from .simplicial import SimplicialComplex, from_ideal, link, reduced_homology, to_ideal
from .theorems import VERIFIERS, idealize

__version__ = "0.1.0"

__all__ = [
    "EvalMode", "Field", "GF2", "InvariantViolation", "ModuleExpr", "MonomialIdeal",
    "ParseError", "PolyRing", "PreconditionError", "QQ", "RingMismatchError", "SeqCMError",
    "SimplicialComplex", "VERIFIERS", "associated_primes", "depth", "dimension_filtration",
    "emit_report", "format_input", "from_ideal", "idealize", "irreducible_decomposition",
    "is_cohen_macaulay", "is_sequentially_cm", "krull_dim", "largest_submodule", "link",
    "parse_input", "polarize", "primary_decomposition", "reduced_homology", "to_ideal",
]
