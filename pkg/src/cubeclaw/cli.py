"""Command-line entry point.

Subcommands map one-to-one onto the library operations:

  verify-theorem      exhaustive witness check over Q_4 subsets
  verify-proposition  exhaustive check over six-vertex Q_3 subsets
  verify-cases        machine-check the dimension-4 case-analysis claims
  witness             extract a witness from a given vertex set
  extremal            maximum structure-free subset by branch and bound
  random-test         seeded random cross-validation of the extractor

Exit status: 0 when every requested check passes (or a witness is
produced), 1 when a check fails or no witness exists, 2 on usage or
parse errors.

Set input formats: one vertex per line as an n-character binary string
(coordinate 1 first, so label 1 in Q_4 is "1000"), or a single
hexadecimal mask of exactly ceil(2^n / 4) digits where bit v represents
vertex v (the mask for {0, 1} in Q_4 is 0003).  When every line of a
file parses as a binary vertex string the binary reading wins; a lone
4-digit token of 0s and 1s in Q_4 is therefore read as one vertex, not
as a mask.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .detect import check_witness, find_theorem_witness, witness_to_text
from .errors import InsufficientCardinalityError, SetParseError, TheoremViolationError
from .hypercube import VertexSet, check_dim, hex_width, set_from_hex, vertex_from_text
from .verify import (
    VerificationReport,
    extremal_search,
    random_agreement_test,
    verify_case_claims,
    verify_proposition_exhaustive,
    verify_theorem_exhaustive,
)
from .witness import base_case_solve_structured, find_witness_inductive


@dataclass
class RunConfig:
    command: str
    n: int = 4
    size: int = 9
    set_source: Optional[tuple[str, str]] = None  # (kind, value); kind: hex|file|inline
    method: str = "inductive"
    cycle: int = 8
    case: object = "all"
    trials: int = 100
    seed: int = 0
    workers: int = 1
    output: Optional[str] = None
    format: str = "table"
    symmetry_reduced: bool = False


def parse_set(text: str, n: int) -> VertexSet:
    """Parse a vertex set from text: binary lines or a single hex mask.

    Rejects wrong-length strings, bad characters, duplicate vertices and
    empty input, each with its own diagnostic (with line/column where
    applicable).
    """
    check_dim(n)
    entries = [
        (lineno + 1, line.strip())
        for lineno, line in enumerate(text.splitlines())
        if line.strip()
    ]
    if not entries:
        raise SetParseError("empty input where a vertex set is required")

    if all(len(tok) == n and not set(tok) - {"0", "1"} for _, tok in entries):
        mask = 0
        for lineno, tok in entries:
            v = vertex_from_text(tok, n)
            if (mask >> v) & 1:
                raise SetParseError(f"duplicate vertex {tok!r}", line=lineno)
            mask |= 1 << v
        return VertexSet(n, mask)

    if len(entries) == 1:
        lineno, tok = entries[0]
        stripped = tok[2:] if tok.lower().startswith("0x") else tok
        if len(stripped) == hex_width(n):
            try:
                return set_from_hex(tok, n)
            except SetParseError as exc:
                raise SetParseError(exc.message, line=lineno, column=exc.column) from None

    for lineno, tok in entries:
        if len(tok) != n:
            raise SetParseError(
                f"vertex string {tok!r} has length {len(tok)}, expected {n}"
                f" (or pass a single {hex_width(n)}-digit hex mask)",
                line=lineno,
            )
        for col, ch in enumerate(tok):
            if ch not in "01":
                raise SetParseError(
                    f"bad character {ch!r} in vertex string {tok!r}", line=lineno, column=col + 1
                )
    raise SetParseError("unrecognized vertex set format")


def _load_set(config: RunConfig) -> VertexSet:
    if config.set_source is None:
        raise SetParseError("no vertex set given: use --hex, --set-file or --vertices")
    kind, value = config.set_source
    if kind == "hex":
        return set_from_hex(value, config.n)
    if kind == "file":
        try:
            with open(value, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SetParseError(f"cannot read set file {value!r}: {exc}") from None
        return parse_set(text, config.n)
    return parse_set("\n".join(value.replace(",", " ").split()), config.n)


# ---------------------------------------------------------------------------
# output formatting
# ---------------------------------------------------------------------------


def _report_table(reports: list[VerificationReport]) -> str:
    lines = [
        f"{'check':<34} {'universe':>9} {'passed':>9} {'failed':>7} {'time(s)':>8}  digest"
    ]
    for r in reports:
        lines.append(
            f"{r.check_name:<34} {r.universe_size:>9} {r.passed:>9} {r.failed:>7}"
            f" {r.wall_time:>8.3f}  {r.deterministic_digest[:16]}"
        )
        if r.counterexamples:
            lines.append(f"  counterexamples: {', '.join(r.counterexamples)}")
        if r.details:
            lines.append(f"  details: {json.dumps(r.details, sort_keys=True)}")
    return "\n".join(lines)


def _emit(config: RunConfig, document: dict, table: str) -> None:
    if config.format == "json":
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        print(table)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            json.dump(document, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _finish_reports(config: RunConfig, reports: list[VerificationReport]) -> int:
    document = {"reports": [r.to_dict() for r in reports]}
    _emit(config, document, _report_table(reports))
    return 0 if all(r.failed == 0 for r in reports) else 1


# ---------------------------------------------------------------------------
# command dispatch
# ---------------------------------------------------------------------------


def run(config: RunConfig) -> int:
    """Execute one parsed command; returns the process exit status."""
    if config.workers < 1:
        raise ValueError(f"workers must be >= 1, got {config.workers}")

    if config.command == "verify-theorem":
        report = verify_theorem_exhaustive(
            config.n, config.size, config.workers, config.symmetry_reduced
        )
        return _finish_reports(config, [report])

    if config.command == "verify-proposition":
        return _finish_reports(config, [verify_proposition_exhaustive(config.workers)])

    if config.command == "verify-cases":
        case = config.case
        if isinstance(case, str) and case != "all":
            case = int(case)
        return _finish_reports(config, verify_case_claims(case, config.workers))

    if config.command == "witness":
        s = _load_set(config)
        case = None
        trace = None
        if config.method == "inductive":
            w, trace = find_witness_inductive(s)
        elif config.method == "structured":
            w, case = base_case_solve_structured(s)
        else:
            w = find_theorem_witness(s)
            if w is None:
                print("no witness: the set contains neither a claw nor an induced 8-cycle")
                return 1
        if not check_witness(w, s):
            raise TheoremViolationError("extracted witness failed validation", s.dim, s.mask)
        text = witness_to_text(w, s.dim)
        document: dict = {"witness": text, "method": config.method, "set": s.to_hex()}
        lines = [text]
        if case is not None:
            document["case"] = case
            lines.append(f"case {case}")
        if trace is not None:
            document["trace"] = trace.to_dict()
            for st in trace.steps:
                lines.append(
                    f"dim {st.dim}: split coordinate {st.split_coord},"
                    f" side sizes {st.side_cardinalities}, chose side {st.chosen_side}"
                )
            lines.append(f"base case: {trace.base}")
        _emit(config, document, "\n".join(lines))
        return 0

    if config.command == "extremal":
        forbidden = ("claw", f"C{config.cycle}")
        result = extremal_search(config.n, forbidden)
        document = {"extremal": result.to_dict()}
        table = (
            f"max structure-free size in Q_{result.dim} avoiding {'/'.join(result.forbidden)}:"
            f" {result.max_size}\ncertificate (hex mask): {result.certificate.to_hex()}\n"
            f"nodes explored: {result.nodes_explored}"
        )
        _emit(config, document, table)
        return 0

    if config.command == "random-test":
        report = random_agreement_test(config.n, config.trials, config.seed, config.workers)
        return _finish_reports(config, [report])

    raise ValueError(f"unknown command {config.command!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubeclaw",
        description=(
            "Verify and constructively realize the half-plus-one density bound: any"
            " subset of more than half the vertices of Q_n (n >= 4) contains four"
            " vertices inducing a claw or eight inducing a cycle."
        ),
        epilog=(
            "Conventions: vertex text form lists coordinate 1 first and coordinate 1"
            " is the least significant label bit, so in Q_4 the label-1 vertex prints"
            ' as "1000"; hex masks have bit v for vertex v, most significant digit'
            " first, so vertices {4,5,6,7} of Q_4 are 00F0."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--workers", type=int, default=1, help="parallel workers (default 1)")
        sp.add_argument("--output", help="write the JSON report document to this path")
        sp.add_argument(
            "--format", choices=("table", "json"), default="table", help="stdout format"
        )

    sp = sub.add_parser("verify-theorem", help="exhaustive subset check in Q_4")
    sp.add_argument("--n", type=int, default=4, help="cube dimension (only 4 supported)")
    sp.add_argument("--size", type=int, default=9, help="subset size, >= 9")
    sp.add_argument(
        "--symmetry-reduced",
        action="store_true",
        help="evaluate one representative per automorphism class (cross-check mode)",
    )
    common(sp)

    sp = sub.add_parser("verify-proposition", help="exhaustive six-subset check in Q_3")
    common(sp)

    sp = sub.add_parser("verify-cases", help="machine-check the case-analysis claims")
    sp.add_argument("--case", default="all", help="1..4 or 'all' (default)")
    common(sp)

    sp = sub.add_parser("witness", help="extract a claw or cycle witness from a set")
    sp.add_argument("--n", type=int, required=True, help="cube dimension")
    src = sp.add_mutually_exclusive_group()
    src.add_argument("--hex", dest="hex_mask", help="set as a hex mask")
    src.add_argument("--set-file", help="file of binary vertex lines or one hex mask")
    src.add_argument("--vertices", help="inline comma/space-separated binary vertices")
    sp.add_argument(
        "--method",
        choices=("inductive", "bruteforce", "structured"),
        default="inductive",
        help="inductive descent (default), direct search, or case dispatch",
    )
    common(sp)

    sp = sub.add_parser("extremal", help="largest structure-free subset")
    sp.add_argument("--n", type=int, required=True, help="cube dimension")
    sp.add_argument(
        "--cycle", type=int, default=8, choices=(6, 8), help="forbidden cycle length"
    )
    common(sp)

    sp = sub.add_parser("random-test", help="seeded random extractor validation")
    sp.add_argument("--n", type=int, required=True, help="cube dimension, 4..12")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command)
    for name in (
        "n",
        "size",
        "case",
        "trials",
        "seed",
        "workers",
        "output",
        "format",
        "cycle",
        "method",
    ):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(config, name, getattr(args, name))
    if getattr(args, "symmetry_reduced", False):
        config.symmetry_reduced = True
    if getattr(args, "hex_mask", None):
        config.set_source = ("hex", args.hex_mask)
    elif getattr(args, "set_file", None):
        config.set_source = ("file", args.set_file)
    elif getattr(args, "vertices", None):
        config.set_source = ("inline", args.vertices)
    return config


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args)
    try:
        return run(config)
    except TheoremViolationError as exc:
        print(f"THEOREM VIOLATION (this is a bug, please report): {exc}", file=sys.stderr)
        return 1
    except (SetParseError, InsufficientCardinalityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
