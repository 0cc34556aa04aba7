# Standard Library Imports
import logging
from typing import Iterable, Literal

# Third Party Imports
import pydash

# Local App Imports
from tilecount.models.exceptions import ProvenanceError
from tilecount.models.plane_partition import PlanePartition
from tilecount.models.region import Cell, Lozenge, Point, Region, Tiling, is_up
from tilecount.models.shape import Partition, StrictPartition
from tilecount.services.lattice.geometry import reflect_triangle
from tilecount.services.lattice.regions import build_shape_region
from tilecount.services.ppcore import spp_to_symmetric, symmetric_to_spp
from tilecount.services.shapes import cells, double_shape

logger = logging.getLogger(__name__)

LozengeType = Literal["top", "left", "right"]


def lozenge_type(lozenge: Lozenge) -> LozengeType:
    """
    Orientation of a lozenge: top faces are horizontal pairs sharing a slanted edge on the right of the up-triangle,
    left faces share the slanted edge on its left, right faces share its base.
    """
    (u, v), down = lozenge
    if down == (u, v + 1):
        return "top"
    if down == (u, v - 1):
        return "left"
    return "right"


def _ordered(a: Cell, b: Cell) -> Lozenge:
    return (a, b) if is_up(a) else (b, a)


def _project(i: int, j: int, k: int, m: int) -> Point:
    """
    Image of the corner (i, j, k) of the stacked-cube picture.
    """
    return 2 * j - i - k + m, k - i - m


def _shape_of(region: Region, kinds: Iterable[str], operation: str) -> tuple[Partition, int]:
    provenance = region.provenance
    if provenance is None or provenance.kind not in kinds or not provenance.shape or provenance.bound is None:
        raise ProvenanceError(operation, region.label)
    return provenance.shape, provenance.bound


# --- Plane partitions ---
def _lozenges_of(shape: Partition, m: int, entries) -> list[Lozenge]:
    parts = shape.parts
    lozenges = []
    for i, row in enumerate(entries, 1):
        for j, h in enumerate(row, 1):
            u = m + i - h
            v = 2 * j - i - h + m - 2
            lozenges.append(((u, v), (u, v + 1)))
    for j in range(1, parts[0] + 1):
        for k in range(1, m + 1):
            depth = sum(1 for row in entries if len(row) >= j and row[j - 1] >= k)
            x, y = _project(depth, j - 1, k - 1, m)
            lozenges.append(((-y, x), (-y, x - 1)))
    for i, row in enumerate(entries, 1):
        for k in range(1, m + 1):
            width = sum(1 for value in row if value >= k)
            x, y = _project(i - 1, width, k - 1, m)
            lozenges.append(((-y, x - 2), (-y + 1, x - 2)))
    return lozenges


def pp_to_tiling(region: Region, pp: PlanePartition) -> Tiling:
    """
    Tiling of a hexagon or shape region drawn as the stacked-cube picture of a plane partition.
    :raises ProvenanceError: If the region does not encode plane partitions of the shape of pp.
    """
    shape, m = _shape_of(region, ("shape", "hexagon"), "pp_to_tiling")
    if shape.parts != pp.shape.parts or m != pp.bound:
        raise ProvenanceError("pp_to_tiling", region.label)
    tiling = Tiling(lozenges=tuple(sorted(_lozenges_of(shape, m, pp.entries))))
    if tiling.covered() != region.triangles:
        raise ProvenanceError("pp_to_tiling", region.label)
    return tiling


def _entries_from_top_faces(shape: Partition, m: int, lozenges: Iterable[Lozenge], label: str):
    tops = [up for up, down in lozenges if lozenge_type((up, down)) == "top"]
    by_diagonal = pydash.group_by(tops, lambda cell: (cell[1] - cell[0] + 2) // 2)
    heights: dict[tuple[int, int], int] = {}
    for diagonal, diagonal_cells in pydash.group_by(cells(shape), lambda c: c[1] - c[0]).items():
        faces = pydash.sort_by(by_diagonal.get(diagonal, []), lambda cell: cell[0])
        if len(faces) != len(diagonal_cells):
            raise ProvenanceError("tiling_to_pp", label)
        for (i, j), (u, _) in zip(sorted(diagonal_cells), faces):
            heights[i, j] = m + i - u
    return tuple(
        tuple(heights[i, j] for j in range(1, part + 1)) for i, part in enumerate(shape.parts, 1)
    )


def tiling_to_pp(region: Region, tiling: Tiling) -> PlanePartition:
    """
    Read the plane partition off a tiling: row i lists the heights of the top faces along the i-th lattice path.
    :raises ProvenanceError: If the region carries no shape or the tiling does not belong to it.
    """
    shape, m = _shape_of(region, ("shape", "hexagon"), "tiling_to_pp")
    entries = _entries_from_top_faces(shape, m, tiling.lozenges, region.label)
    return PlanePartition(shape=shape, bound=m, entries=entries)


# --- Shifted plane partitions ---
def _full_region(region: Region, operation: str) -> tuple[StrictPartition, int, Region]:
    shape, m = _shape_of(region, ("shifted", "flashlight"), operation)
    strict = StrictPartition(parts=shape.parts)
    return strict, m, build_shape_region(double_shape(strict), m)


def spp_to_tiling(region: Region, spp: PlanePartition) -> Tiling:
    """
    Tiling of a shifted region (or a flashlight with t = 0) for a shifted plane partition: the symmetric tiling of
    the doubled region cut along the axis. Lozenges crossing the axis leave their free half uncovered.
    :raises ProvenanceError: If the region has no shifted-shape interpretation.
    """
    strict, m, full = _full_region(region, "spp_to_tiling")
    if spp.shape.parts != strict.parts or spp.bound != m:
        raise ProvenanceError("spp_to_tiling", region.label)
    symmetric = pp_to_tiling(full, spp_to_symmetric(spp))
    kept, uncovered = [], set()
    for up, down in symmetric.lozenges:
        inside = (up in region.triangles, down in region.triangles)
        if all(inside):
            kept.append((up, down))
        elif any(inside):
            uncovered.add(down if inside[1] else up)
    tiling = Tiling(lozenges=tuple(kept), uncovered=frozenset(uncovered))
    if tiling.covered() | tiling.uncovered != region.triangles or not tiling.uncovered <= region.free:
        raise ProvenanceError("spp_to_tiling", region.label)
    return tiling


def tiling_to_spp(region: Region, tiling: Tiling) -> PlanePartition:
    """
    Inverse of spp_to_tiling: mirror the tiling across the axis, close every uncovered free triangle with its mirror
    image and fold the symmetric plane partition of the doubled region.
    :raises ProvenanceError: If the region has no shifted-shape interpretation, e.g. a flashlight with t > 0.
    """
    strict, m, full = _full_region(region, "tiling_to_spp")
    lozenges = list(tiling.lozenges)
    lozenges += [_ordered(reflect_triangle(a), reflect_triangle(b)) for a, b in tiling.lozenges]
    lozenges += [_ordered(reflect_triangle(cell), cell) for cell in tiling.uncovered]
    symmetric = tiling_to_pp(full, Tiling(lozenges=tuple(sorted(lozenges))))
    logger.debug("%s: folded %s", region.label, symmetric.entries)
    return symmetric_to_spp(symmetric)
