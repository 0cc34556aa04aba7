# Standard Library Imports
import logging

# Third Party Imports

# Local App Imports
from tilecount.models.exceptions import ParameterError, ShapeError, SyntaxParseError
from tilecount.models.flashlight import FlashlightParams, flashlight
from tilecount.models.region import Provenance, Region
from tilecount.models.shape import Partition, StrictPartition
from tilecount.services.lattice.geometry import (
    Run,
    Word,
    cell_edges,
    on_positive_side,
    reflect_triangle,
    trace,
    triangles_inside,
)
from tilecount.services.shapes import as_strict, delta, double_shape, parse_shape

logger = logging.getLogger(__name__)

REGION_SYNTAX = ("hex", "flashlight", "qhex", "semihex", "shape", "shifted")


def region_from_word(word: Word, label: str, provenance: Provenance | None = None) -> Region:
    """
    Build a region from a clockwise boundary word starting at the origin.
    :param word: Runs of unit steps; runs marked free form the free boundary.
    :param label: Name carried by the region.
    :param provenance: What the region encodes, if anything.
    :return: Region of all triangles whose centroid lies inside the traced outline.
    :raises ParameterError: If the word does not close.
    """
    polygon, free_edges = trace(word)
    triangles = frozenset(triangles_inside(polygon))
    free = frozenset(
        cell for cell in triangles if any(edge in free_edges for edge in cell_edges(cell))
    )
    region = Region(
        triangles=triangles,
        free=free,
        label=label,
        provenance=provenance,
        boundary=tuple(polygon),
        free_edges=tuple(sorted(tuple(sorted(edge)) for edge in free_edges)),
    )
    logger.debug("built %s: %d triangles, %d free", label, len(triangles), len(free))
    return region


def build_hexagon(a: int, b: int, c: int) -> Region:
    """
    Hexagon with side lengths a, b, c, a, b, c; its tilings are the plane partitions in an a x b x c box.
    """
    if min(a, b, c) < 0:
        raise ParameterError("hexagon", "a, b, c >= 0", (a, b, c))
    word = [Run("E", b), Run("SE", c), Run("SW", a), Run("W", b), Run("NW", c), Run("NE", a)]
    shape = Partition(parts=(b,) * a) if a and b else None
    provenance = Provenance(kind="hexagon", shape=shape, bound=c, params=(a, b, c))
    return region_from_word(word, f"hex({a},{b},{c})", provenance)


def build_shape_region(shape: Partition, m: int) -> Region:
    """
    Hexagon whose lower boundary follows the diagram of shape; tilings encode plane partitions of shape bounded by m.
    :raises ParameterError: If the shape is empty or m is negative.
    """
    parts = shape.parts
    if not parts:
        raise ParameterError("shape", "a nonempty partition", str(shape))
    if m < 0:
        raise ParameterError("m", "m >= 0", m)
    word = [Run("E", parts[0]), Run("SE", m)]
    for i, part in enumerate(parts):
        following = parts[i + 1] if i + 1 < len(parts) else 0
        word += [Run("SW", 1), Run("W", part - following)]
    word += [Run("NW", m), Run("NE", len(parts))]
    plain = Partition(parts=parts)
    provenance = Provenance(kind="shape", shape=plain, bound=m)
    return region_from_word(word, f"shape({plain})@{m}", provenance)


def is_reflection_symmetric(region: Region) -> bool:
    return all(reflect_triangle(cell) in region.triangles for cell in region.triangles)


def build_shifted_region(shape: StrictPartition, m: int) -> Region:
    """
    Half of the shape region of the doubled diagram, cut along its mirror axis X + Y = 0.
    The down-triangles with an edge on the axis form the free boundary.
    :raises ShapeError: If the shape is not strict.
    """
    strict = as_strict(shape)
    full = build_shape_region(double_shape(strict), m)
    if not is_reflection_symmetric(full):
        raise ShapeError("shifted region", strict)
    kept = frozenset(cell for cell in full.triangles if on_positive_side(cell))
    free = frozenset(cell for cell in kept if cell[1] == cell[0] - 1)
    free_edges = tuple(sorted(((u - 1, 1 - u), (u, -u)) for u, _ in free))
    return Region(
        triangles=kept,
        free=free,
        label=f"shifted({strict})@{m}",
        provenance=Provenance(kind="shifted", shape=strict, bound=m),
        free_edges=free_edges,
    )


def build_semi_hexagon(y: int, m: int) -> Region:
    """
    Semi-hexagon with free boundary, the shifted region of the staircase delta_y.
    """
    if y < 1:
        raise ParameterError("y", "y >= 1", y)
    return build_shifted_region(StrictPartition(parts=delta(y)), m)


def flashlight_word(p: FlashlightParams) -> Word:
    """
    (y+2z) E, (x+t) SE, z times (SW, W), t NW, y SW, then the free side of x+y+z NW steps.
    """
    x, y, z, t = p.as_tuple()
    word = [Run("E", y + 2 * z), Run("SE", x + t)]
    word += [Run("SW", 1), Run("W", 1)] * z
    word += [Run("NW", t), Run("SW", y), Run("NW", x + y + z, free=True)]
    return word


def build_flashlight(p: FlashlightParams) -> Region:
    """
    The flashlight region F(x,y,z,t). For t = 0 its tilings encode shifted plane partitions of
    delta_{y+z} + delta_z with entries at most x.
    """
    x, y, z, t = p.as_tuple()
    shape = None
    if t == 0:
        shape = StrictPartition(
            parts=tuple(a + b for a, b in zip(delta(y + z), delta(z) + (0,) * y))
        )
    provenance = Provenance(kind="flashlight", shape=shape, bound=x, params=p.as_tuple())
    return region_from_word(flashlight_word(p), str(p), provenance)


def build_quartered_hexagon(x: int, s: list[int] | tuple[int, ...]) -> Region:
    """
    Quartered hexagon: trapezoid with sides x+k, 2k, x and a zigzag side of 2k steps, with k unit triangles
    removed along the long side at positions s.
    :param x: Length of the short side.
    :param s: Strictly increasing positions in [1, x+k].
    :raises ParameterError: If the positions are out of range or not strictly increasing.
    """
    s = tuple(s)
    k = len(s)
    if x < 0:
        raise ParameterError("x", "x >= 0", x)
    if any(a >= b for a, b in zip(s, s[1:])) or (s and not 1 <= s[0] <= s[-1] <= x + k):
        raise ParameterError("s", f"1 <= s1 < ... < sk <= {x + k}", s)
    word = [Run("E", x + k), Run("SW", 2 * k), Run("W", x)]
    word += [Run("NW", 1), Run("NE", 1)] * k
    label = f"Q{x}({','.join(map(str, s))})"
    base = region_from_word(word, label, Provenance(kind="quartered", params=(x,) + s))
    removed = frozenset((1, 2 * p - 2) for p in s)
    return base.model_copy(
        update={"triangles": base.triangles - removed, "free": base.free - removed}
    )


def _ints(kind: str, text: str, body: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in body.split(",") if piece.strip())
    except ValueError as error:
        raise SyntaxParseError(kind, text, "parameters must be integers") from error


def _shape_and_bound(text: str, body: str) -> tuple:
    shape_text, sep, bound = body.rpartition("@")
    if not sep:
        raise SyntaxParseError("region", text, "expected <shape>@<m>")
    _, shape = parse_shape(shape_text)
    values = _ints("region", text, bound)
    if len(values) != 1:
        raise SyntaxParseError("region", text, "expected a single bound after @")
    return shape, values[0]


def parse_region(text: str) -> Region:
    """
    Build a region from its textual syntax: hex:a,b,c | flashlight:x,y,z,t | qhex:x,s1,...,sk | semihex:y,m |
    shape:<shape>@m | shifted:<shape>@m.
    :raises SyntaxParseError: If the text does not follow the syntax.
    """
    kind, sep, body = text.strip().partition(":")
    if not sep or kind not in REGION_SYNTAX:
        raise SyntaxParseError("region", text, f"expected one of {', '.join(REGION_SYNTAX)}")
    if kind in ("shape", "shifted"):
        shape, m = _shape_and_bound(text, body)
        if kind == "shape":
            return build_shape_region(Partition(parts=shape.parts), m)
        return build_shifted_region(as_strict(shape), m)

    params = _ints("region", text, body)
    arity = {"hex": 3, "flashlight": 4, "semihex": 2}.get(kind)
    if arity is not None and len(params) != arity:
        raise SyntaxParseError("region", text, f"{kind} takes {arity} parameters")
    match kind:
        case "hex":
            return build_hexagon(*params)
        case "flashlight":
            if min(params) < 0:
                raise ParameterError("flashlight", "x, y, z, t >= 0", params)
            return build_flashlight(flashlight(*params))
        case "semihex":
            return build_semi_hexagon(*params)
        case _:
            if not params:
                raise SyntaxParseError("region", text, "qhex needs x")
            return build_quartered_hexagon(params[0], params[1:])
