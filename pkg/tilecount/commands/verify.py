# Standard Library Imports
import argparse
import logging

# Third Party Imports

# Local App Imports
from tilecount.services.cache import CountCache
from tilecount.services.suites import SUITES, Grid, SuiteContext, run_suite

logger = logging.getLogger(__name__)

GRID_FLAGS = ("xmax", "ymax", "zmax", "tmax", "nmax", "mmax")


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="run a verification suite and emit a JSON report")
    parser.add_argument("suite", choices=tuple(SUITES) + ("all",))
    for flag in GRID_FLAGS:
        parser.add_argument(f"--{flag}", type=int, help=f"cap on the {flag[0]} range")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument(
        "--strict", action="store_true", help="experimental mismatches count as failures"
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """
    Exit 0 when the suite passes, 1 when any counted instance fails.
    """
    grid = Grid(**{flag: getattr(args, flag) for flag in GRID_FLAGS})
    cache = None if args.no_cache else CountCache(args.cache_dir)
    ctx = SuiteContext(grid=grid, cache=cache, budget=args.triangle_budget, enum_cap=args.enum_cap)
    report = run_suite(args.suite, ctx, args.workers)
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        logger.info("report written to %s", args.out)
    else:
        print(text)
    failures = report.failures(args.strict)
    for failure in failures:
        logger.error("%s failed: %s", failure.params, failure.values)
    return 1 if failures else 0
