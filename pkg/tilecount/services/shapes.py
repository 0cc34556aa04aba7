# Standard Library Imports
import logging

# Third Party Imports
import pydash

# Local App Imports
from tilecount.models.exceptions import ParameterError, ShapeError, SyntaxParseError
from tilecount.models.shape import Partition, ShapeFamily, StrictPartition

logger = logging.getLogger(__name__)

Shape = Partition | StrictPartition

SHAPE_SYNTAX = {
    "rect": ("rectangle", 2),
    "stair": ("staircase", 2),
    "sstair": ("shifted_staircase", 1),
    "trap": ("shifted_trapezoid", 2),
    "sds": ("shifted_double_staircase", 2),
    "ap": ("arithmetic_progression", 3),
    "custom": ("custom", None),
}


def delta(n: int) -> tuple[int, ...]:
    """
    Parts of the staircase (n, n-1, ..., 1).
    """
    return tuple(range(n, 0, -1))


def _strip(parts) -> tuple[int, ...]:
    return tuple(p for p in parts if p > 0)


def make_shape(family: ShapeFamily) -> Shape:
    """
    Build the (strict) partition of a shape family.
    :param family: Family tag and its parameters.
    :return: StrictPartition for the shifted families, Partition otherwise.
    :raises ParameterError: If the parameters do not produce a valid shape.
    """
    p = family.params
    expected = {
        "rectangle": 2,
        "staircase": 2,
        "shifted_staircase": 1,
        "shifted_trapezoid": 2,
        "shifted_double_staircase": 2,
        "arithmetic_progression": 3,
    }.get(family.tag)
    if expected is not None and len(p) != expected:
        raise ParameterError(family.tag, f"exactly {expected} parameters", p)
    if any(value < 0 for value in p):
        raise ParameterError(family.tag, "nonnegative parameters", p)

    match family.tag:
        case "rectangle":
            a, b = p
            return Partition(parts=(b,) * a if b else ())
        case "staircase":
            a, b = p
            if not 1 <= a <= b:
                raise ParameterError("staircase", "1 <= a <= b", (a, b))
            return Partition(parts=tuple(range(b, b - a, -1)))
        case "shifted_staircase":
            return StrictPartition(parts=delta(p[0]))
        case "shifted_trapezoid":
            n, k = p
            if k > 0 and n - 2 * (k - 1) < 1:
                raise ParameterError("shifted_trapezoid", "n - 2(k-1) >= 1", (n, k))
            return StrictPartition(parts=tuple(n - 2 * i for i in range(k)))
        case "shifted_double_staircase":
            n, k = p
            if k > n:
                raise ParameterError("shifted_double_staircase", "0 <= k <= n", (n, k))
            inner = delta(k) + (0,) * (n - k)
            return StrictPartition(parts=tuple(a + b for a, b in zip(delta(n), inner)))
        case "arithmetic_progression":
            big_m, d, length = p
            if length > 0 and big_m - length * d < 1:
                raise ParameterError("arithmetic_progression", "M - l*d >= 1", p)
            return Partition(
                parts=tuple(big_m - i * d for i in range(1, length + 1))
            )
        case _:
            try:
                return Partition(parts=p)
            except ValueError as error:
                raise ParameterError("custom", "weakly decreasing positive parts", p) from error


def as_strict(shape: Partition) -> StrictPartition:
    """
    Reinterpret a partition as a strict partition.
    :raises ShapeError: If two parts are equal.
    """
    if isinstance(shape, StrictPartition):
        return shape
    try:
        return StrictPartition(parts=shape.parts)
    except ValueError as error:
        raise ShapeError("shifted diagram", shape) from error


def cells(shape: Partition) -> list[tuple[int, int]]:
    """
    1-based cells (i, j) of the diagram, row by row. For a strict partition row i starts in column i.
    """
    if shape.shifted:
        return [(i, j) for i, part in enumerate(shape.parts, 1) for j in range(i, i + part)]
    return [(i, j) for i, part in enumerate(shape.parts, 1) for j in range(1, part + 1)]


def shifted_cells(shape: StrictPartition) -> list[tuple[int, int]]:
    return cells(as_strict(shape))


def _from_cells(cell_list) -> Partition:
    rows = pydash.count_by(sorted(cell_list), lambda cell: cell[0])
    return Partition(parts=tuple(rows[i] for i in sorted(rows)))


def size(shape: Partition) -> int:
    return shape.size()


def conjugate(shape: Partition) -> Partition:
    """
    Transpose of an (unshifted) partition.
    """
    if not shape.parts:
        return Partition()
    return Partition(
        parts=tuple(sum(1 for part in shape.parts if part >= j) for j in range(1, shape.parts[0] + 1))
    )


def is_self_conjugate(shape: Partition) -> bool:
    return conjugate(shape).parts == shape.parts


def content(i: int, j: int) -> int:
    """
    Content j - i of the cell in row i and column j.
    """
    return j - i


def double_shape(shape: StrictPartition) -> Partition:
    """
    Glue the reflection of the shifted diagram along the main diagonal.
    :param shape: Strict partition.
    :return: The self-conjugate partition whose cells on or above the diagonal form the shifted diagram.
    """
    upper = cells(as_strict(shape))
    doubled = set(upper) | {(j, i) for i, j in upper}
    return _from_cells(doubled)


def halve_self_conjugate(shape: Partition) -> StrictPartition:
    """
    Inverse of double_shape: keep the cells on or above the diagonal.
    :raises ShapeError: If the shape is not self-conjugate.
    """
    if not is_self_conjugate(shape):
        raise ShapeError("halving", shape)
    return StrictPartition(
        parts=_strip(part - i for i, part in enumerate(shape.parts))
    )


def parse_shape(text: str) -> tuple[ShapeFamily, Shape]:
    """
    Parse the textual shape syntax, for example "sds:6,3", "rect:2,3" or "custom:3,1".
    :param text: Shape text.
    :return: The family tag and the shape it builds.
    :raises SyntaxParseError: If the prefix is unknown or the parameters are not integers.
    """
    prefix, sep, body = text.strip().partition(":")
    if not sep or prefix not in SHAPE_SYNTAX:
        raise SyntaxParseError("shape", text, f"expected one of {', '.join(SHAPE_SYNTAX)}")
    tag, arity = SHAPE_SYNTAX[prefix]
    try:
        params = tuple(int(piece) for piece in body.split(",") if piece.strip())
    except ValueError as error:
        raise SyntaxParseError("shape", text, "parameters must be integers") from error
    if arity is not None and len(params) != arity:
        raise SyntaxParseError("shape", text, f"{prefix} takes {arity} parameters")
    family = ShapeFamily(tag=tag, params=params)
    shape = make_shape(family)
    logger.debug("parsed shape %s as %s", text, shape)
    return family, shape
