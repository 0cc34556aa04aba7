# Standard Library Imports
import argparse
import logging
from itertools import islice

# Third Party Imports

# Local App Imports
from tilecount.models.exceptions import ParameterError
from tilecount.services.lattice.matching import enumerate_tilings
from tilecount.services.lattice.regions import parse_region
from tilecount.services.lattice.render import render_svg

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("render", help="draw a region and one of its tilings as SVG")
    parser.add_argument("--region", required=True)
    parser.add_argument("--tiling", type=int, help="index of the tiling in enumeration order")
    parser.add_argument("-o", "--out", required=True, help="SVG file to write")
    parser.add_argument("--rotate", type=int, default=0, help="rotation in degrees")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """
    Render the region, with the tiling at the requested index if one is given.
    :raises ParameterError: If the index is negative or past the last tiling.
    """
    region = parse_region(args.region)
    tiling = None
    if args.tiling is not None:
        if args.tiling < 0:
            raise ParameterError("tiling", "a nonnegative index", args.tiling)
        tilings = enumerate_tilings(region, args.enum_cap, args.triangle_budget)
        tiling = next(islice(tilings, args.tiling, None), None)
        if tiling is None:
            raise ParameterError("tiling", f"an index below the tiling count of {region.label}", args.tiling)
    render_svg(region, tiling, args.out, args.rotate)
    print(args.out)
    return 0
