"""``flop-verify`` command line.

Reports go to stdout (or ``--output``); logs go to stderr. Exit status is
0 when every requested claim is verified, 1 on a failure or a failed internal
consistency check, 2 when something stayed indeterminate and 3 on a usage
error.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from src.core.config import settings
from src.core.exceptions import FlopVerifyError, InternalCheckError
from src.core.utils import logger
from src.total_space.hom import Side
from src.verifier.compare import compare_end_algebras
from src.verifier.lemmas import verify_lemma
from src.verifier.models import LEMMA_IDS, Verdict, VerificationReport
from src.verifier.report import EXIT_CODES, USAGE_EXIT_CODE, emit, emit_schema, emit_suite, exit_code, parse_format
from src.verifier.tilting import verify_tilting


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; 2 means indeterminate here"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", default="json", choices=["json", "md", "markdown"], help="report format")
    parser.add_argument("--output", type=Path, help="write the report to this file instead of stdout")
    parser.add_argument("--no-timing", action="store_true", help="zero the wall-clock field")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads (defaults to FLOP_VERIFY_THREADS)")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="flop-verify", description="Verify the cohomology behind the X+ / X- flop.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    lemma = commands.add_parser("lemma", help="check one lemma")
    lemma.add_argument("--id", dest="lemma_id", required=True, choices=[c.value for c in LEMMA_IDS])
    lemma.add_argument("--k-max", type=int)
    lemma.add_argument("--m-max", type=int)
    lemma.add_argument("--degree-max", type=int)
    _common(lemma)

    tilting = commands.add_parser("tilting", help="higher self-Ext vanishing of T+ or T-")
    tilting.add_argument("--side", required=True, choices=[s.value for s in Side])
    tilting.add_argument("--degree-max", type=int, default=settings.VANISHING_DEGREE_MAX)
    _common(tilting)

    compare = commands.add_parser("compare", help="graded comparison of End(T+) and End(T-)")
    compare.add_argument("--degree-max", type=int, default=settings.COMPARE_DEGREE_MAX)
    _common(compare)

    everything = commands.add_parser("all", help="every lemma, both tilting checks and the comparison")
    _common(everything)

    schema = commands.add_parser("schema", help="print the JSON schema of report documents")
    schema.add_argument("--output", type=Path, help="write the schema to this file instead of stdout")
    return parser


def run_all(threads: Optional[int] = None) -> List[VerificationReport]:
    reports = [verify_lemma(claim, workers=threads) for claim in LEMMA_IDS]
    reports += [verify_tilting(side, workers=threads) for side in Side]
    reports.append(compare_end_algebras(workers=threads))
    return reports


def run(args: argparse.Namespace) -> List[VerificationReport]:
    if args.command == "lemma":
        return [verify_lemma(args.lemma_id, k_max=args.k_max, m_max=args.m_max,
                             degree_max=args.degree_max, workers=args.threads)]
    if args.command == "tilting":
        return [verify_tilting(args.side, degree_max=args.degree_max, workers=args.threads)]
    if args.command == "compare":
        return [compare_end_algebras(degree_max=args.degree_max, workers=args.threads)]
    return run_all(args.threads)


def write(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        output.write_text(text, encoding="utf-8")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "schema":
            write(emit_schema(), args.output)
            return 0
        fmt = parse_format(args.format)
        reports = run(args)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return USAGE_EXIT_CODE
    except InternalCheckError as e:
        logger.error("Internal consistency check failed", error=str(e))
        sys.stderr.write(f"flop-verify: internal error: {e}\n")
        return EXIT_CODES[Verdict.FAILED]
    except FlopVerifyError as e:
        logger.error("Invalid request", error=str(e))
        sys.stderr.write(f"flop-verify: error: {e}\n")
        return USAGE_EXIT_CODE

    timing = not args.no_timing
    if args.command == "all":
        text = emit_suite(reports, fmt, timing=timing)
    else:
        text = emit(reports[0], fmt, timing=timing)
    write(text, args.output)
    return exit_code(reports)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
