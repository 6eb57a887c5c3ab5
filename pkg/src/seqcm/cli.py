"""Command-line front end.

    seqcm decompose  -e "ring x,y,z; ideal x*z, y*z;"
    seqcm invariants --fixture rp2 --field f2
    seqcm filtration input.txt --mode direct
    seqcm seqcm --fixture disjoint_edges --certificate
    seqcm verify lemma31 --trials 200 --seed 1

Exit status is 0 on success or a passing verification, 1 on a usage or
parse error and 2 when a verifier finds a counterexample.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .decomposition import primary_decomposition
from .errors import ParseError, SeqCMError
from .fields import Field
from .filtration import EvalMode, dimension_filtration, is_sequentially_cm
from .invariants import ModuleExpr
from .monomial import MonomialIdeal
from .parsing import parse_input
from .report import FiltrationResult, InvariantSummary, emit_report
from .simplicial import SimplicialComplex, to_ideal
from .theorems import VERIFIERS

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2
COMMANDS = ("decompose", "invariants", "filtration", "seqcm", "verify")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    path: str | None = None
    text: str | None = None
    fixture: str | None = None
    field: Field | None = None
    mode: EvalMode = EvalMode.SHORTCUT
    certificate: bool = False
    theorem: str | None = None
    trials: int | None = None
    seed: int | None = None
    output: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command == "verify":
            if self.theorem not in VERIFIERS:
                raise UsageError(f"unknown theorem {self.theorem!r}; choose from {', '.join(VERIFIERS)}")
            if self.trials is not None and self.trials < 1:
                raise UsageError("--trials must be at least 1")
        else:
            given = [s for s in (self.path, self.text, self.fixture) if s is not None]
            if len(given) != 1:
                raise UsageError("give exactly one of a path, -e/--expr or --fixture")

    def read_input(self) -> str:
        if self.text is not None:
            return self.text
        if self.fixture is not None:
            return read_fixture(self.fixture)
        try:
            return Path(self.path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {self.path}: {exc.strerror}") from None


def fixture_names() -> list[str]:
    folder = resources.files("seqcm") / "fixtures"
    return sorted(p.name[:-4] for p in folder.iterdir() if p.name.endswith(".txt"))


def read_fixture(name: str) -> str:
    path = resources.files("seqcm") / "fixtures" / f"{name}.txt"
    if not path.is_file():
        raise UsageError(f"unknown fixture {name!r}; available: {', '.join(fixture_names())}")
    return path.read_text()


def as_module(value) -> ModuleExpr:
    """Complexes go through their Stanley-Reisner ideal, ideals become R/I."""
    if isinstance(value, SimplicialComplex):
        value = to_ideal(value)
    if isinstance(value, MonomialIdeal):
        return ModuleExpr.cyclic(value)
    return value


def _with_field(M: ModuleExpr, field: Field | None) -> Field:
    return M.ring.field if field is None else field


def run(cfg: RunConfig):
    """Compute the result value for a configuration. Returns (result, emit kwargs)."""
    if cfg.command == "verify":
        verifier = VERIFIERS[cfg.theorem]
        kwargs = {}
        if cfg.trials is not None:
            kwargs["trials"] = cfg.trials
        if cfg.seed is not None:
            kwargs["seed"] = cfg.seed
        return verifier(**kwargs), {}

    value = parse_input(cfg.read_input())
    if cfg.command == "decompose":
        if isinstance(value, ModuleExpr):
            if not value.is_cyclic:
                raise UsageError("decompose takes a single ideal, not a direct sum")
            value = value.summands[0]
        if isinstance(value, SimplicialComplex):
            value = to_ideal(value)
        return primary_decomposition(value), {}

    M = as_module(value)
    field = _with_field(M, cfg.field)
    if cfg.command == "invariants":
        return InvariantSummary.of(M, field), {}
    if cfg.command == "filtration":
        return FiltrationResult(dimension_filtration(M, cfg.mode),
                                is_sequentially_cm(M, field, cfg.mode)), {}
    return is_sequentially_cm(M, field, cfg.mode), {"certificate": cfg.certificate}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _field_arg(text: str) -> Field:
    try:
        return Field.parse(text)
    except SeqCMError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="seqcm", description="Dimension filtrations and sequential "
                     "Cohen-Macaulayness of monomial quotients.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--json", metavar="OUT", dest="output", help="also write the report to OUT")

    for name, help_text in (("decompose", "irredundant primary decomposition"),
                            ("invariants", "dimension, depth and Cohen-Macaulayness"),
                            ("filtration", "dimension filtration with certificate"),
                            ("seqcm", "sequential Cohen-Macaulay test")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("path", nargs="?", help="input file")
        p.add_argument("-e", "--expr", dest="text", help="inline input text")
        p.add_argument("--fixture", help="bundled example by name")
        if name != "decompose":
            p.add_argument("--field", type=_field_arg, help="q, f2, f3, ... (default q)")
        if name in ("filtration", "seqcm"):
            p.add_argument("--mode", choices=[m.value for m in EvalMode], default="shortcut")
        if name == "seqcm":
            p.add_argument("--certificate", action="store_true", help="include per-level certificate")

    v = sub.add_parser("verify", parents=[common], help="run a randomized theorem check")
    v.add_argument("theorem", choices=sorted(VERIFIERS))
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int)

    sub.add_parser("fixtures", help="list bundled examples")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    get = lambda key, default=None: getattr(ns, key, default)
    return RunConfig(
        command=ns.command,
        path=get("path"),
        text=get("text"),
        fixture=get("fixture"),
        field=get("field"),
        mode=EvalMode(get("mode", "shortcut")),
        certificate=get("certificate", False),
        theorem=get("theorem"),
        trials=get("trials"),
        seed=get("seed"),
        output=get("output"),
    )


def main(argv: list[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        if ns.command == "fixtures":
            print("\n".join(fixture_names()))
            return EXIT_OK
        cfg = config_from_args(ns)
        result, emit_kw = run(cfg)
    except ParseError as exc:
        print(f"seqcm: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, SeqCMError) as exc:
        print(f"seqcm: {exc}", file=sys.stderr)
        return EXIT_USAGE

    text = emit_report(result, **emit_kw)
    print(text)
    if cfg.output:
        Path(cfg.output).write_text(text + "\n")
    if cfg.command == "verify" and not result.passed:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK
