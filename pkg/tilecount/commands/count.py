# Standard Library Imports
import argparse
import logging
import sys

# Third Party Imports
from sympy import Poly

# Local App Imports
from tilecount.models.exceptions import ParameterError, SyntaxParseError
from tilecount.models.flashlight import flashlight
from tilecount.models.region import Region
from tilecount.models.shape import Partition, ShapeFamily
from tilecount.services.exactlinalg import count_pp_det, count_spp_pf
from tilecount.services.exactnum import qpoly_coeffs
from tilecount.services.formulas import (
    count_arith_progression,
    count_flashlight_formula,
    count_quartered_hexagon,
    count_rectangle,
    count_sds,
    count_shifted_staircase,
    count_shifted_trapezoid,
    count_staircase,
    flashlight_status,
)
from tilecount.services.lattice.matching import count_region
from tilecount.services.lattice.regions import parse_region
from tilecount.services.ppcore import (
    count_pp_brute,
    count_spp_brute,
    enumerate_pp,
    enumerate_spp,
    gen_function,
)
from tilecount.services.shapes import as_strict, parse_shape

logger = logging.getLogger(__name__)

METHODS = ("formula", "det", "pfaffian", "brute")

PP_FORMULAS = {
    "rectangle": lambda p, m: count_rectangle(p[0], p[1], m),
    "staircase": lambda p, m: count_staircase(p[0], p[1], m),
    "arithmetic_progression": lambda p, m: count_arith_progression(*p, m),
}
SPP_FORMULAS = {
    "shifted_staircase": lambda p, m: count_shifted_staircase(p[0], m),
    "shifted_trapezoid": lambda p, m: count_shifted_trapezoid(p[0], p[1], m),
    "shifted_double_staircase": lambda p, m: count_sds(p[0], p[1], m),
}


def register(subparsers) -> None:
    parser = subparsers.add_parser("count", help="count plane partitions or tilings")
    parser.add_argument("kind", choices=("pp", "spp", "tilings"))
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--shape", help="shape syntax, e.g. sds:6,3 or rect:2,3")
    target.add_argument("--region", help="region syntax, e.g. flashlight:1,1,1,0")
    parser.add_argument("--max", dest="bound", type=int, help="entry bound m")
    parser.add_argument("--method", choices=METHODS, default="formula")
    parser.add_argument("--q", action="store_true", help="size generating polynomial instead of the count")
    parser.set_defaults(handler=run)


def _no_method(kind: str, method: str, what: str):
    raise ParameterError("method", f"a method available for {kind} of {what}", method)


def count_pp(family: ShapeFamily, shape: Partition, m: int, method: str, q_mode: bool):
    if method == "det":
        return count_pp_det(Partition(parts=shape.parts), m, q_mode)
    if method == "brute":
        plain = Partition(parts=shape.parts)
        return gen_function(enumerate_pp(plain, m)) if q_mode else count_pp_brute(plain, m)
    if method == "formula" and family.tag in PP_FORMULAS and not q_mode:
        return PP_FORMULAS[family.tag](family.params, m)
    return _no_method("pp", method, family.tag)


def count_spp(family: ShapeFamily, shape: Partition, m: int, method: str, q_mode: bool):
    strict = as_strict(shape)
    if method == "pfaffian" and not q_mode:
        return count_spp_pf(strict, m)
    if method == "brute":
        return gen_function(enumerate_spp(strict, m)) if q_mode else count_spp_brute(strict, m)
    if method == "formula" and family.tag in SPP_FORMULAS and not q_mode:
        return SPP_FORMULAS[family.tag](family.params, m)
    return _no_method("spp", method, family.tag)


def count_tilings(region: Region, method: str, budget: int | None):
    if method == "brute":
        return count_region(region, budget)
    provenance = region.provenance
    if method != "formula" or provenance is None:
        return _no_method("tilings", method, region.label)
    match provenance.kind:
        case "flashlight":
            return count_flashlight_formula(flashlight(*provenance.params))
        case "quartered":
            return count_quartered_hexagon(provenance.params[0], provenance.params[1:])
        case "hexagon":
            return count_rectangle(*provenance.params)
        case "shape":
            return count_pp_det(provenance.shape, provenance.bound)
        case "shifted":
            return count_spp_pf(as_strict(provenance.shape), provenance.bound)
    return _no_method("tilings", method, region.label)


def run(args: argparse.Namespace) -> int:
    """
    Print a count, or a q-polynomial as its ascending coefficient list, on stdout and the method on stderr.
    """
    if args.kind == "tilings":
        if not args.region:
            raise SyntaxParseError("count", "tilings", "tilings need --region")
        region = parse_region(args.region)
        value = count_tilings(region, args.method, args.triangle_budget)
        what = region.label
        if region.provenance is not None and region.provenance.kind == "flashlight":
            what += f" ({flashlight_status(flashlight(*region.provenance.params))})"
    else:
        if not args.shape or args.bound is None:
            raise SyntaxParseError("count", args.kind, f"{args.kind} needs --shape and --max")
        if args.bound < 0:
            raise ParameterError("m", "m >= 0", args.bound)
        family, shape = parse_shape(args.shape)
        counter = count_pp if args.kind == "pp" else count_spp
        value = counter(family, shape, args.bound, args.method, args.q)
        what = f"{shape}@{args.bound}"
    print(qpoly_coeffs(value) if isinstance(value, Poly) else value)
    print(f"{args.kind} of {what} by {args.method}", file=sys.stderr)
    return 0
