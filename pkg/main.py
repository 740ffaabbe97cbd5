"""
Command-line entry point for the simple-games toolkit
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from config.settings import settings
from simplegames.commands import register_all
from simplegames.commands.output import CommandContext, Output
from simplegames.errors import GameError
from simplegames.services.search_engine import SearchEngine

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplegames",
        description="Algebra, decomposition and search for ipsodual simple games",
    )
    parser.add_argument("--json", action="store_true", help="Emit JSON records instead of text")
    parser.add_argument("--budget", type=int, default=None, help="Budget for every bounded search")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads for closures")
    parser.add_argument("--verbose", action="store_true", help="Log progress (INFO)")
    parser.add_argument("--debug", action="store_true", help="Log search internals (DEBUG)")
    parser.add_argument("--version", action="version", version=f"{settings.APP_NAME} {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    register_all(subparsers)
    return parser


def configure_logging(args: argparse.Namespace) -> None:
    level = settings.LOG_LEVEL
    if args.verbose:
        level = "INFO"
    if args.debug:
        level = "DEBUG"
    # Configure logging
    logging.basicConfig(
        level=getattr(logging, level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    configure_logging(args)
    budget = args.budget
    settings.apply_overrides(
        THREADS=args.threads,
        POOL_PAIR_BUDGET=budget,
        PLACEMENT_BUDGET=budget,
        MAP_SEARCH_BUDGET=budget,
    )
    logger.info(f"Starting {settings.APP_NAME} v{settings.APP_VERSION}: {args.command}")

    output = Output(as_json=args.json)
    context = CommandContext(output=output, engine=SearchEngine(threads=settings.THREADS))
    try:
        return args.handler(args, context)
    except (GameError, ValueError) as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        output.error(e)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
