# Standard Library Imports
import argparse

# Third Party Imports

# Local App Imports
from tilecount.services.lattice.regions import parse_region
from tilecount.services.lattice.render import region_dump


def register(subparsers) -> None:
    parser = subparsers.add_parser("dump", help="print the triangles of a region")
    parser.add_argument("--region", required=True)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    for line in region_dump(parse_region(args.region)):
        print(line)
    return 0
