# Standard Library Imports
from typing import Iterable, Literal

# Third Party Imports
from pydantic import BaseModel, ConfigDict, model_validator

# Local App Imports
from tilecount.models.shape import Partition

Cell = tuple[int, int]
Point = tuple[int, int]

ProvenanceKind = Literal[
    "hexagon", "shape", "shifted", "flashlight", "quartered", "custom"
]


def is_up(cell: Cell) -> bool:
    return (cell[0] + cell[1]) % 2 == 0


class Provenance(BaseModel):
    """
    What a region was built from. shape and bound are set for regions whose tilings encode plane partitions.
    """

    model_config = ConfigDict(frozen=True)

    kind: ProvenanceKind
    shape: Partition | None = None
    bound: int | None = None
    params: tuple[int, ...] = ()


class Region(BaseModel):
    """
    Finite set of unit triangles (u, v) of the triangular lattice, up-pointing iff u+v is even, u growing downward.
    Triangles in free lie on the free boundary and may stay uncovered by a tiling.
    boundary holds the clockwise outline the region was traced from, if any, and free_edges the unit edges of
    its free boundary.
    """

    model_config = ConfigDict(frozen=True)

    triangles: frozenset[Cell]
    free: frozenset[Cell] = frozenset()
    label: str = "region"
    provenance: Provenance | None = None
    boundary: tuple[Point, ...] = ()
    free_edges: tuple[tuple[Point, Point], ...] = ()

    @model_validator(mode="after")
    def check_free(self):
        if not self.free <= self.triangles:
            raise ValueError(
                f"free triangles {sorted(self.free - self.triangles)} are not in region {self.label}"
            )
        return self

    def ups(self) -> list[Cell]:
        return sorted(c for c in self.triangles if is_up(c))

    def downs(self) -> list[Cell]:
        return sorted(c for c in self.triangles if not is_up(c))

    def without(self, cells: Iterable[Cell], label: str | None = None) -> "Region":
        """
        Region with the given triangles deleted; provenance does not survive a deletion.
        """
        removed = frozenset(cells)
        return Region(
            triangles=self.triangles - removed,
            free=self.free - removed,
            label=label or f"{self.label}-{len(removed)}",
            boundary=self.boundary,
            free_edges=self.free_edges,
        )

    def __len__(self):
        return len(self.triangles)


Lozenge = tuple[Cell, Cell]


class Tiling(BaseModel):
    """
    Set of lozenges, each an (up, down) pair of adjacent triangles, plus the free triangles left uncovered.
    """

    model_config = ConfigDict(frozen=True)

    lozenges: tuple[Lozenge, ...]
    uncovered: frozenset[Cell] = frozenset()

    @model_validator(mode="after")
    def check_disjoint(self):
        seen = set()
        for lozenge in self.lozenges:
            for cell in lozenge:
                if cell in seen or cell in self.uncovered:
                    raise ValueError(f"triangle {cell} is used twice")
                seen.add(cell)
        return self

    def covered(self) -> frozenset[Cell]:
        return frozenset(cell for lozenge in self.lozenges for cell in lozenge)


class KuoVertices(BaseModel):
    """
    Four boundary triangles for graphical condensation, in cyclic order u, v, w, s around the outer face.
    searched is set when the positions came from the fallback search instead of the closed-form placement.
    """

    model_config = ConfigDict(frozen=True)

    u: Cell
    v: Cell
    w: Cell
    s: Cell
    searched: bool = False

    def as_dict(self) -> dict[str, Cell]:
        return {"u": self.u, "v": self.v, "w": self.w, "s": self.s}
