"""Command-line front end.

Subcommands::

    hilb       Poincare polynomial of Hilb^N(P^2)
    stable     stable Betti numbers b_{2s} for s <= S
    gens       generator degree multiset and monomial counts a_{2i}
    betti      the corrected Betti table of the moduli space
    relations  relation counts among the generators, degrees 0 .. d
    verify     replay the congruence chain; exit code reflects the outcome

Exit codes: 0 on success, 1 on verification failure (or I/O trouble),
2 on usage errors.  All integers in the output are decimal strings, so CI
consumers never hit a width limit.  The Hilbert-row cache defaults to
``./.hilb-cache``; override with ``--cache-dir`` or the
``MOTIVIC_BETTI_CACHE`` environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .betti import emit, m_betti_table
from .hilb import GENERATOR_TAG, HilbCache, hilb_poincare, stable_betti
from .motivic import DEFAULT_CONSTANTS, verify_congruence_chain
from .tautgen import a_coeff, generator_system, relation_count

DEFAULT_CACHE_DIR = ".hilb-cache"
CACHE_ENV_VAR = "MOTIVIC_BETTI_CACHE"

MUTATION_FLAGS = {
    "multiplier": "multiplier",
    "double-coeff": "double_coeff",
    "top": "expected_top",
    "subtop": "expected_subtop",
}


@dataclass(frozen=True)
class HilbOutput:
    n: int
    coeffs: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "n": str(self.n),
            "coeffs": [str(c) for c in self.coeffs],
            "generator": GENERATOR_TAG,
            "version": "1",
        }

    def csv_header(self) -> list[str]:
        return ["k", "b2k"]

    def csv_rows(self) -> list[list[str]]:
        return [
            [str(k), str(self.coeffs[2 * k] if 2 * k < len(self.coeffs) else 0)]
            for k in range(2 * self.n + 1)
        ]


@dataclass(frozen=True)
class StableOutput:
    smax: int
    values: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "smax": str(self.smax),
            "rows": [
                {"s": str(s), "b2s": str(v)} for s, v in enumerate(self.values)
            ],
        }

    def csv_header(self) -> list[str]:
        return ["s", "b2s"]

    def csv_rows(self) -> list[list[str]]:
        return [[str(s), str(v)] for s, v in enumerate(self.values)]


@dataclass(frozen=True)
class GensOutput:
    d: int
    degrees: dict[int, int]
    counts: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "d": str(self.d),
            "generator_count": str(sum(self.degrees.values())),
            "degrees": {str(k): str(v) for k, v in sorted(self.degrees.items())},
            "rows": [
                {"i": str(i), "a2i": str(v)} for i, v in enumerate(self.counts)
            ],
        }

    def csv_header(self) -> list[str]:
        return ["i", "a2i"]

    def csv_rows(self) -> list[list[str]]:
        return [[str(i), str(v)] for i, v in enumerate(self.counts)]


@dataclass(frozen=True)
class RelationsOutput:
    d: int
    chi: int
    counts: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "d": str(self.d),
            "chi": str(self.chi),
            "rows": [
                {"i": str(i), "relations": str(v)}
                for i, v in enumerate(self.counts)
            ],
        }

    def csv_header(self) -> list[str]:
        return ["i", "relations"]

    def csv_rows(self) -> list[list[str]]:
        return [[str(i), str(v)] for i, v in enumerate(self.counts)]


def _resolve_cache(args) -> HilbCache:
    directory = (
        getattr(args, "cache_dir", None)
        or os.environ.get(CACHE_ENV_VAR)
        or DEFAULT_CACHE_DIR
    )
    return HilbCache(directory)


def _emit(args, obj) -> None:
    destination = args.output if args.output is not None else sys.stdout
    emit(obj, args.format, destination)


def _cmd_hilb(args) -> int:
    hp = hilb_poincare(args.n, _resolve_cache(args))
    coeffs = tuple(hp.poly[i] for i in range(4 * args.n + 1))
    _emit(args, HilbOutput(args.n, coeffs))
    return 0


def _cmd_stable(args) -> int:
    values = tuple(stable_betti(s) for s in range(args.smax + 1))
    _emit(args, StableOutput(args.smax, values))
    return 0


def _cmd_gens(args) -> int:
    system = generator_system(args.d)
    counts = tuple(a_coeff(args.d, i) for i in range(args.d + 1))
    _emit(args, GensOutput(args.d, dict(system.degrees), counts))
    return 0


def _cmd_betti(args) -> int:
    table = m_betti_table(args.d, args.chi, _resolve_cache(args))
    _emit(args, table)
    return 0


def _cmd_relations(args) -> int:
    cache = _resolve_cache(args)
    counts = tuple(
        relation_count(args.d, args.chi, i, cache) for i in range(args.d + 1)
    )
    _emit(args, RelationsOutput(args.d, args.chi, counts))
    return 0


def _cmd_verify(args) -> int:
    constants = DEFAULT_CONSTANTS
    if args.mutate is not None:
        constants = constants.mutated(MUTATION_FLAGS[args.mutate])
    report = verify_congruence_chain(args.d, _resolve_cache(args), constants)
    _emit(args, report)
    return 0 if report.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motivic-betti",
        description=(
            "Exact Betti tables for moduli of one-dimensional plane sheaves, "
            "with the Hilbert-scheme series and congruence checks behind them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cache=True):
        p.add_argument(
            "--format", choices=["json", "csv"], default="json",
            help="output format (default: json)",
        )
        p.add_argument(
            "--output", "-o", default=None, metavar="PATH",
            help="write to PATH instead of stdout",
        )
        if cache:
            p.add_argument(
                "--cache-dir", default=None, metavar="PATH",
                help=f"Hilbert-row cache directory (default: ./{DEFAULT_CACHE_DIR}, "
                     f"or ${CACHE_ENV_VAR})",
            )

    p = sub.add_parser("hilb", help="Poincare polynomial of Hilb^N(P^2)")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_hilb)

    p = sub.add_parser("stable", help="stable Betti numbers b_{2s}, s <= S")
    p.add_argument("--smax", type=int, required=True)
    common(p, cache=False)
    p.set_defaults(handler=_cmd_stable)

    p = sub.add_parser("gens", help="generator degrees and monomial counts")
    p.add_argument("--d", type=int, required=True)
    common(p, cache=False)
    p.set_defaults(handler=_cmd_gens)

    p = sub.add_parser("betti", help="corrected Betti table of the moduli space")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_betti)

    p = sub.add_parser("relations", help="relation counts in degrees 0 .. d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_relations)

    p = sub.add_parser("verify", help="replay the congruence chain for degree d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument(
        "--mutate", choices=sorted(MUTATION_FLAGS), default=None,
        help="knock one chain constant off its true value (self-test; "
             "the run must then fail)",
    )
    common(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        parser.exit(2, f"error: {exc}\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
