"""
Entry point for abaplus.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .cli.actions import OutputFormat, RunConfig, Scope, Subcommand
from .cli.runner import run
from .constants import EXIT_OK, EXIT_USAGE

if os.environ.get('ABAPLUS_DEBUG'):
    logging.basicConfig(
        level=logging.DEBUG,
        format='[%(levelname)s] %(name)s: %(message)s'
    )


class _UsageExit(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors instead of exiting with 2."""

    def error(self, message):
        raise _UsageExit(f"{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="abaplus", description="Reasoning engine for ABA with preferences.")
    parser.add_argument("--version", action="version", version=f"abaplus {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    common.add_argument("--output", help="write the report to this path instead of stdout")
    common.add_argument("--config", help="engine config TOML (default ~/.config/abaplus/config.toml)")
    common.add_argument("--assumption-cap", type=_positive_int)
    common.add_argument("--support-cap", type=_positive_int)
    common.add_argument("--verbose", action="store_true", help="enable debug logging")

    semantic = _Parser(add_help=False)
    semantic.add_argument(
        "--semantics", action="append",
        help="admissible, preferred, complete, stable, well_founded (grounded), ideal or all; repeatable",
    )
    semantic.add_argument("--mode", default="plus", help="plain or plus (default plus)")

    graph = _Parser(add_help=False)
    graph.add_argument("--scope", choices=[s.value for s in Scope], default=Scope.SUPPORTS.value)
    graph.add_argument("--include-trivial", action="store_true", help="also show the empty and the full set")

    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    sub.add_parser("check", parents=[common], help="parse and summarize a framework").add_argument("input")
    sub.add_parser("semantics", parents=[common, semantic], help="enumerate extensions").add_argument("input")
    sub.add_parser("attacks", parents=[common, graph], help="list attacks between assumption sets").add_argument("input")
    sub.add_parser("axioms", parents=[common], help="check the axioms").add_argument("input")
    principles = sub.add_parser("principles", parents=[common, semantic], help="check the principles")
    principles.add_argument("input")
    principles.add_argument("--principle", default="all", help="1-5, a principle name, or all")
    sub.add_parser("translate-paf", parents=[common], help="translate a PAF file").add_argument("input")
    sub.add_parser("compare", parents=[common, semantic], help="compare related formalisms").add_argument("input")
    sub.add_parser("dot", parents=[common, graph], help="export the attack graph as DOT").add_argument("input")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    subcommand = Subcommand(args.subcommand)
    semantics = tuple(getattr(args, "semantics", None) or ())
    if not semantics and subcommand is not Subcommand.COMPARE:
        semantics = ("all",)
    output_format = OutputFormat(args.format)
    if subcommand is Subcommand.DOT:
        output_format = OutputFormat.DOT
    return RunConfig(
        subcommand=subcommand,
        inputs=(args.input,),
        semantics=semantics,
        mode=getattr(args, "mode", "plus"),
        assumption_cap=args.assumption_cap,
        support_cap=args.support_cap,
        output_format=output_format,
        output_path=args.output,
        config_path=args.config,
        principle=getattr(args, "principle", "all"),
        scope=Scope(getattr(args, "scope", Scope.SUPPORTS.value)),
        include_trivial=getattr(args, "include_trivial", False),
    )


def main(argv: list[str] | None = None) -> int:
    """Parse ``argv``, run the subcommand, emit the report; return the exit code."""
    try:
        args = build_parser().parse_args(argv)
    except _UsageExit as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format='[%(levelname)s] %(name)s: %(message)s')
    result = run(config_from_args(args))
    if result.exit_code != EXIT_OK:
        print(result.error, file=sys.stderr)
        return result.exit_code
    if args.output:
        try:
            Path(args.output).write_text(result.output, encoding="utf-8", newline="\n")
        except OSError as exc:
            print(f"cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(result.output)
    return result.exit_code


def main_cli():
    """Console script entrypoint."""
    return main()

if __name__ == '__main__':
    raise SystemExit(main_cli())
