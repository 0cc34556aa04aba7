# Standard Library Imports
import argparse
import json

# Third Party Imports

# Local App Imports
from tilecount.services.cache import CountCache


def register(subparsers) -> None:
    parser = subparsers.add_parser("cache", help="inspect or clear the count cache")
    parser.add_argument("action", choices=("stats", "clear"))
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    cache = CountCache(args.cache_dir)
    if args.action == "clear":
        print(f"removed {cache.clear()} entries from {cache.path}")
    else:
        print(json.dumps(cache.stats(), indent=2))
    return 0
