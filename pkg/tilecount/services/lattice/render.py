# Standard Library Imports
import logging
import math

# Third Party Imports
import svgwrite

# Local App Imports
from tilecount.models.region import Point, Region, Tiling, is_up
from tilecount.services.lattice.bijections import lozenge_type
from tilecount.services.lattice.geometry import corners, directed_edges

logger = logging.getLogger(__name__)

UNIT = 24
MARGIN = 12
LOZENGE_COLOURS = {"top": "#f2d16b", "left": "#e07a3f", "right": "#3a6ea5"}
FREE_FILL = "#d9f2d0"


class _Frame:
    """
    Screen coordinates of lattice points: optional rotation about the origin, shifted into the first quadrant.
    """

    def __init__(self, points: list[Point], rotate: int):
        self.cos = math.cos(math.radians(rotate))
        self.sin = math.sin(math.radians(rotate))
        raw = [self._raw(p) for p in points] or [(0.0, 0.0)]
        self.left = min(x for x, _ in raw) - MARGIN
        self.top = min(y for _, y in raw) - MARGIN
        self.width = round(max(x for x, _ in raw) - self.left + MARGIN, 3)
        self.height = round(max(y for _, y in raw) - self.top + MARGIN, 3)

    def _raw(self, point: Point) -> tuple[float, float]:
        x = point[0] * UNIT / 2
        y = point[1] * UNIT * math.sqrt(3) / 2
        return x * self.cos - y * self.sin, -(x * self.sin + y * self.cos)

    def __call__(self, point: Point) -> tuple[float, float]:
        x, y = self._raw(point)
        return round(x - self.left, 3), round(y - self.top, 3)


def _lozenge_outline(lozenge) -> list[Point]:
    up, down = lozenge
    shared = set(corners(up)) & set(corners(down))
    (apart_up,) = set(corners(up)) - shared
    (apart_down,) = set(corners(down)) - shared
    first, second = sorted(shared)
    return [apart_up, first, apart_down, second]


def render_svg(region: Region, tiling: Tiling | None = None, path: str | None = None, rotate: int = 0) -> str:
    """
    Draw a region, and optionally one of its tilings, as SVG.
    :param region: Region to draw; its free boundary is dashed.
    :param tiling: Tiling drawn on top, lozenges coloured by orientation.
    :param path: File to write; nothing is written when omitted.
    :param rotate: Counterclockwise rotation in degrees, e.g. -30 to stand a flashlight's free side upright.
    :return: The SVG document. Identical inputs give identical bytes.
    """
    points = sorted({p for cell in region.triangles for p in corners(cell)})
    frame = _Frame(points, rotate)
    drawing = svgwrite.Drawing(size=(frame.width, frame.height), profile="full")

    triangles = drawing.g(id="triangles", stroke="#999999", stroke_width=0.5)
    uncovered = tiling.uncovered if tiling else frozenset()
    for cell in sorted(region.triangles):
        fill = FREE_FILL if cell in uncovered else "none"
        triangles.add(drawing.polygon([frame(p) for p in corners(cell)], fill=fill))
    drawing.add(triangles)

    if tiling is not None:
        lozenges = drawing.g(id="lozenges", stroke="#333333", stroke_width=1)
        for lozenge in sorted(tiling.lozenges):
            outline = [frame(p) for p in _lozenge_outline(lozenge)]
            lozenges.add(drawing.polygon(outline, fill=LOZENGE_COLOURS[lozenge_type(lozenge)]))
        drawing.add(lozenges)

    free_edges = {frozenset(edge) for edge in region.free_edges}
    boundary = drawing.g(id="boundary", stroke="#000000", stroke_width=2)
    for cell in sorted(region.triangles):
        for start, end, across in directed_edges(cell):
            if across in region.triangles:
                continue
            line = drawing.line(frame(start), frame(end))
            if frozenset((start, end)) in free_edges:
                line.dasharray([4, 3])
            boundary.add(line)
    drawing.add(boundary)

    text = drawing.tostring()
    if path is not None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info("wrote %s to %s", region.label, path)
    return text


def region_dump(region: Region) -> list[str]:
    """
    One line per triangle, "u v orientation free-flag", sorted by (u, v).
    """
    return [
        f"{u} {v} {'up' if is_up((u, v)) else 'down'} {1 if (u, v) in region.free else 0}"
        for u, v in sorted(region.triangles)
    ]
