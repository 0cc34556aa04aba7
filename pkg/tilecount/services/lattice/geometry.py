# Standard Library Imports
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, NamedTuple

# Third Party Imports

# Local App Imports
from tilecount.models.exceptions import ParameterError
from tilecount.models.region import Cell, Point, is_up

STEPS: dict[str, Point] = {
    "E": (2, 0),
    "W": (-2, 0),
    "NE": (1, 1),
    "NW": (-1, 1),
    "SE": (1, -1),
    "SW": (-1, -1),
}

# Counterclockwise angle of every unit step, in degrees.
STEP_ANGLES: dict[Point, int] = {
    (2, 0): 0,
    (1, 1): 60,
    (-1, 1): 120,
    (-2, 0): 180,
    (-1, -1): 240,
    (1, -1): 300,
}


class Run(NamedTuple):
    direction: str
    length: int
    free: bool = False


Word = list[Run]
Edge = frozenset[Point]


def corners(cell: Cell) -> tuple[Point, Point, Point]:
    """
    Corners in clockwise order. up(u, v): (v,-u), (v+1,-u+1), (v+2,-u). down(u, v): (v,-u+1), (v+2,-u+1), (v+1,-u).
    """
    u, v = cell
    if is_up(cell):
        return (v, -u), (v + 1, -u + 1), (v + 2, -u)
    return (v, -u + 1), (v + 2, -u + 1), (v + 1, -u)


def directed_edges(cell: Cell) -> list[tuple[Point, Point, Cell]]:
    """
    Clockwise directed edges of a triangle with the triangle across each edge. The triangle lies on the right.
    """
    u, v = cell
    a, b, c = corners(cell)
    if is_up(cell):
        return [(a, b, (u, v - 1)), (b, c, (u, v + 1)), (c, a, (u + 1, v))]
    return [(a, b, (u - 1, v)), (b, c, (u, v + 1)), (c, a, (u, v - 1))]


def neighbours(cell: Cell) -> list[Cell]:
    return [across for _, _, across in directed_edges(cell)]


def centroid3(cell: Cell) -> Point:
    """
    Centroid scaled by three, an integer point.
    """
    u, v = cell
    return 3 * (v + 1), -3 * u + (1 if is_up(cell) else 2)


def trace(word: Iterable[Run]) -> tuple[list[Point], set[Edge]]:
    """
    Follow a boundary word from the origin.
    :param word: Runs of unit steps, clockwise.
    :return: The visited lattice points (closing point excluded) and the unit edges on free runs.
    :raises ParameterError: If a direction is unknown or the word does not return to the origin.
    """
    point = (0, 0)
    points = [point]
    free_edges: set[Edge] = set()
    for run in word:
        if run.direction not in STEPS:
            raise ParameterError("direction", f"one of {sorted(STEPS)}", run.direction)
        dx, dy = STEPS[run.direction]
        for _ in range(run.length):
            following = (point[0] + dx, point[1] + dy)
            if run.free:
                free_edges.add(frozenset((point, following)))
            point = following
            points.append(point)
    if point != (0, 0):
        raise ParameterError("boundary word", "a closed boundary", point)
    return points[:-1], free_edges


def contains(polygon: list[Point], point3: Point) -> bool:
    """
    Crossing test for a point given at three times scale against a lattice polygon. Zero-area spikes cancel out.
    """
    px, py = point3
    inside = False
    count = len(polygon)
    for n in range(count):
        x1, y1 = polygon[n]
        x2, y2 = polygon[(n + 1) % count]
        x1, y1, x2, y2 = 3 * x1, 3 * y1, 3 * x2, 3 * y2
        if (y1 > py) != (y2 > py):
            crossing = x1 + Fraction((py - y1) * (x2 - x1), y2 - y1)
            if crossing > px:
                inside = not inside
    return inside


def triangles_inside(polygon: list[Point]) -> set[Cell]:
    """
    Every unit triangle whose centroid lies inside the polygon.
    """
    if not polygon:
        return set()
    xs = [p[0] for p in polygon]
    ys = [p[1] for p in polygon]
    found = set()
    for u in range(1 - max(ys), -min(ys) + 1):
        for v in range(min(xs), max(xs) - 1):
            if contains(polygon, centroid3((u, v))):
                found.add((u, v))
    return found


def cell_edges(cell: Cell) -> list[Edge]:
    return [frozenset((a, b)) for a, b, _ in directed_edges(cell)]


# --- Reflection across the line X + Y = 0 ---
def reflect_point(point: Point) -> Point:
    x, y = point
    return (-x - 3 * y) // 2, (-x + y) // 2


def reflect_triangle(cell: Cell) -> Cell:
    """
    Mirror image of a triangle across the line X + Y = 0. Orientation flips.
    """
    images = [reflect_point(p) for p in corners(cell)]
    ys = sorted(p[1] for p in images)
    if ys[0] == ys[1]:
        base = [p for p in images if p[1] == ys[0]]
        return -ys[0], min(p[0] for p in base)
    base = [p for p in images if p[1] == ys[2]]
    return 1 - ys[2], min(p[0] for p in base)


def on_positive_side(cell: Cell) -> bool:
    x3, y3 = centroid3(cell)
    return x3 + y3 > 0


# --- Outer boundary ---
def _angle(vector: Point) -> int:
    return STEP_ANGLES[vector]


def _incident(point: Point) -> list[tuple[int, Cell]]:
    """
    The six triangles around a lattice point keyed by the counterclockwise angle of their centroids.
    """
    x, y = point
    return [
        (30, (-y, x)),
        (90, (-y, x - 1)),
        (150, (-y, x - 2)),
        (210, (1 - y, x - 2)),
        (270, (1 - y, x - 1)),
        (330, (1 - y, x)),
    ]


def outer_boundary_order(triangles: frozenset[Cell] | set[Cell]) -> list[Cell]:
    """
    Triangles touching the outer boundary, in clockwise order of first appearance.
    Walks the boundary edges with the region on the right; at a pinch point the walk takes the edge closest
    clockwise to the way back, and at every corner it collects the region triangles of the inner wedge.
    """
    outgoing: dict[Point, list[Point]] = defaultdict(list)
    for cell in triangles:
        for start, end, across in directed_edges(cell):
            if across not in triangles:
                outgoing[start].append(end)
    if not outgoing:
        return []

    def turn(back: int, point: Point, end: Point) -> int:
        angle = _angle((end[0] - point[0], end[1] - point[1]))
        return (back - angle) % 360 or 360

    start = max(outgoing, key=lambda p: (p[1], -p[0]))
    first_end = min(outgoing[start], key=lambda end: turn(180, start, end))
    first = (start, first_end)
    used = {first}
    order: list[Cell] = []
    seen: set[Cell] = set()
    previous, point = first
    while True:
        back = _angle((previous[0] - point[0], previous[1] - point[1]))
        candidates = [end for end in outgoing[point] if (point, end) not in used or (point, end) == first]
        following = min(candidates, key=lambda end: turn(back, point, end))
        out = _angle((following[0] - point[0], following[1] - point[1]))
        wedge = (out - back) % 360 or 360
        for angle, cell in sorted(_incident(point), key=lambda item: (item[0] - back) % 360):
            if (angle - back) % 360 < wedge and cell in triangles and cell not in seen:
                seen.add(cell)
                order.append(cell)
        if (point, following) == first:
            break
        used.add((point, following))
        previous, point = point, following
    return order
