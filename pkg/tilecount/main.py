# Standard Library Imports
import argparse
import logging
import sys

# Third Party Imports
from pydantic import ValidationError

# Local App Imports
from tilecount.commands import cache, count, dump, render, table, verify
from tilecount.models.exceptions import (
    CacheMismatch,
    IdentityMismatch,
    ParameterError,
    ProvenanceError,
    ResourceBudgetExceeded,
    ShapeError,
    SyntaxParseError,
)
from tilecount.services import environment

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

USAGE_ERRORS = (SyntaxParseError, ParameterError, ShapeError, ProvenanceError, ValidationError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilecount",
        description="Exact counts of plane partitions and lozenge tilings with free boundaries.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    parser.add_argument("--triangle-budget", type=int, default=environment.TRIANGLE_BUDGET)
    parser.add_argument("--enum-cap", type=int, default=environment.ENUM_CAP)
    parser.add_argument("--workers", type=int, default=environment.WORKERS)
    parser.add_argument("--cache-dir", default=environment.CACHE_DIR)
    parser.add_argument("--no-cache", action="store_true")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (count, verify, table, render, dump, cache):
        command.register(subparsers)
    return parser


def configure_logging(verbosity: int) -> None:
    levels = {0: environment.LOG_LEVEL, 1: "INFO"}
    logging.basicConfig(
        level=levels.get(verbosity, "DEBUG"),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: list[str] | None = None) -> int:
    """
    Command-line entry point.
    :return: 0 on success, 1 when a verification fails, 2 on usage errors, 3 when a budget is exceeded.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    logger = logging.getLogger("tilecount")
    try:
        return args.handler(args)
    except USAGE_ERRORS as error:
        parser.print_usage(sys.stderr)
        print(f"tilecount: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBudgetExceeded as error:
        logger.error("%s", error)
        return EXIT_RESOURCE
    except (CacheMismatch, IdentityMismatch) as error:
        logger.error("%s", error)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
