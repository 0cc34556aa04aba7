# Standard Library Imports
import argparse
import csv
import json
import logging
import sys
from typing import Callable

# Third Party Imports

# Local App Imports
from tilecount.models.exceptions import NonIntegralResult, ParameterError, SyntaxParseError
from tilecount.models.flashlight import flashlight
from tilecount.services.formulas import (
    count_arith_progression,
    count_flashlight_formula,
    count_rectangle,
    count_sds,
    count_shifted_staircase,
    count_shifted_trapezoid,
    count_staircase,
)

logger = logging.getLogger(__name__)

# Parameter names in iteration order and the formula they feed.
FAMILIES: dict[str, tuple[tuple[str, ...], Callable[..., int]]] = {
    "rect": (("a", "b", "m"), count_rectangle),
    "stair": (("a", "b", "m"), count_staircase),
    "sstair": (("n", "m"), count_shifted_staircase),
    "trap": (("n", "k", "m"), count_shifted_trapezoid),
    "sds": (("n", "k", "m"), count_sds),
    "ap": (("M", "d", "l", "m"), count_arith_progression),
    "flashlight": (("x", "y", "z", "t"), lambda *p: count_flashlight_formula(flashlight(*p))),
}
PARAMETERS = sorted({name for names, _ in FAMILIES.values() for name in names})


def register(subparsers) -> None:
    parser = subparsers.add_parser("table", help="tabulate a product formula over parameter ranges")
    parser.add_argument("--family", required=True, choices=tuple(FAMILIES))
    for name in PARAMETERS:
        parser.add_argument(f"--{name}", help="range lo..hi; bounds may name earlier parameters")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", help="write the table here instead of stdout")
    parser.set_defaults(handler=run)


def _bound(text: str, known: dict[str, int], expr: str) -> int:
    text = text.strip()
    if text in known:
        return known[text]
    try:
        return int(text)
    except ValueError as error:
        raise SyntaxParseError("range", expr, "bounds are integers or earlier parameter names") from error


def parse_range(expr: str, known: dict[str, int]) -> range:
    """
    Parse "lo..hi" (inclusive) or a single value; either bound may name a parameter already fixed.
    :raises SyntaxParseError: If the range does not parse.
    """
    low, sep, high = expr.partition("..")
    start = _bound(low, known, expr)
    stop = _bound(high, known, expr) if sep else start
    return range(start, stop + 1)


def table_rows(family: str, ranges: dict[str, str]) -> list[dict[str, int]]:
    """
    Every parameter point of the grid with its count. Points outside a family's constraints are skipped.
    :raises SyntaxParseError: If a parameter range is missing.
    """
    names, formula = FAMILIES[family]
    missing = [name for name in names if ranges.get(name) is None]
    if missing:
        raise SyntaxParseError("table", family, f"missing ranges for {', '.join(missing)}")
    rows = []

    def walk(position: int, known: dict[str, int]):
        if position == len(names):
            try:
                count = formula(*(known[name] for name in names))
            except (ParameterError, NonIntegralResult) as error:
                logger.info("skipping %s %s: %s", family, known, error)
                return
            rows.append(known | {"count": count})
            return
        name = names[position]
        for value in parse_range(ranges[name], known):
            walk(position + 1, known | {name: value})

    walk(0, {})
    return rows


def run(args: argparse.Namespace) -> int:
    names, _ = FAMILIES[args.family]
    rows = table_rows(args.family, {name: getattr(args, name) for name in names})
    out = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        if args.format == "json":
            json.dump({"family": args.family, "rows": rows}, out, indent=2)
            out.write("\n")
        else:
            writer = csv.DictWriter(out, fieldnames=list(names) + ["count"], lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0
