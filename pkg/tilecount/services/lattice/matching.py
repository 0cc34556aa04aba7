# Standard Library Imports
import logging
from typing import Hashable, Iterable, Iterator

# Third Party Imports
import networkx as nx
from pydantic import BaseModel, ConfigDict

# Local App Imports
from tilecount.models.exceptions import ResourceBudgetExceeded
from tilecount.models.region import Region, Tiling, is_up
from tilecount.services import environment
from tilecount.services.exactnum import Count
from tilecount.services.lattice.geometry import neighbours, outer_boundary_order

logger = logging.getLogger(__name__)


class DualGraph(BaseModel):
    """
    Planar dual of a region: one vertex per triangle, one edge per pair of triangles sharing an edge.
    Vertices in free may stay unmatched. outer lists the triangles along the outer face in clockwise order.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: nx.Graph
    free: frozenset = frozenset()
    label: str = "graph"
    outer: tuple = ()

    def delete(self, vertices: Iterable[Hashable]) -> "DualGraph":
        """
        Copy of the graph with the given vertices removed.
        """
        removed = set(vertices)
        graph = self.graph.copy()
        graph.remove_nodes_from(removed)
        names = ",".join(str(vertex) for vertex in sorted(removed, key=str))
        return DualGraph(graph=graph, free=self.free - removed, label=f"{self.label}-{{{names}}}")

    def __len__(self):
        return self.graph.number_of_nodes()


def graph_from_edges(
    edges: Iterable[tuple[Hashable, Hashable]],
    free: Iterable[Hashable] = (),
    nodes: Iterable[Hashable] = (),
    label: str = "graph",
) -> DualGraph:
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    graph.add_nodes_from(free)
    graph.add_edges_from(edges)
    return DualGraph(graph=graph, free=frozenset(free), label=label)


def dual_graph(region: Region) -> DualGraph:
    """
    Dual graph of a region; it is bipartite between up- and down-pointing triangles.
    """
    graph = nx.Graph()
    for cell in region.triangles:
        graph.add_node(cell, up=is_up(cell))
    for cell in region.triangles:
        if is_up(cell):
            graph.add_edges_from((cell, other) for other in neighbours(cell) if other in region.triangles)
    return DualGraph(
        graph=graph,
        free=region.free,
        label=region.label,
        outer=tuple(outer_boundary_order(region.triangles)),
    )


def resolve_budget(budget: int | None) -> int:
    return environment.TRIANGLE_BUDGET if budget is None else budget


class _Bitmasks:
    """
    Vertices in sorted order as bit positions; the lowest set bit is always the next vertex to decide.
    With row-major cell order the remaining sets only differ near the current row, so the memo behaves like a
    profile table.
    """

    def __init__(self, dual: DualGraph):
        self.order = sorted(dual.graph.nodes)
        index = {node: position for position, node in enumerate(self.order)}
        self.adjacent = [0] * len(self.order)
        for a, b in dual.graph.edges:
            self.adjacent[index[a]] |= 1 << index[b]
            self.adjacent[index[b]] |= 1 << index[a]
        self.free_mask = sum(1 << index[node] for node in dual.free if node in index)
        self.full = (1 << len(self.order)) - 1
        self.memo: dict[int, int] = {}

    def count(self, mask: int) -> int:
        if mask == 0:
            return 1
        cached = self.memo.get(mask)
        if cached is not None:
            return cached
        low = mask & -mask
        rest = mask ^ low
        total = self.count(rest) if self.free_mask & low else 0
        partners = self.adjacent[low.bit_length() - 1] & rest
        while partners:
            bit = partners & -partners
            total += self.count(rest ^ bit)
            partners ^= bit
        self.memo[mask] = total
        return total


def count_matchings_free(dual: DualGraph, budget: int | None = None) -> Count:
    """
    Number of matchings covering every vertex outside dual.free; free vertices may stay unmatched.
    :param dual: Graph with its free vertex set.
    :param budget: Largest vertex count accepted, defaults to TILECOUNT_TRIANGLE_BUDGET.
    :return: Exact count.
    :raises ResourceBudgetExceeded: If the graph has more vertices than the budget.
    """
    limit = resolve_budget(budget)
    if len(dual) > limit:
        raise ResourceBudgetExceeded("triangle budget", limit, len(dual))
    masks = _Bitmasks(dual)
    total = masks.count(masks.full)
    logger.debug("%s: %d matchings over %d memo states", dual.label, total, len(masks.memo))
    return total


def count_region(region: Region, budget: int | None = None) -> Count:
    return count_matchings_free(dual_graph(region), budget)


def enumerate_tilings(
    region: Region, cap: int | None = None, budget: int | None = None
) -> Iterator[Tiling]:
    """
    Stream every tiling of a region exactly once. At each step the lowest undecided triangle is left uncovered
    (free triangles only) or paired with its neighbours in sorted order; dead branches are cut by the counter.
    :param region: Region to tile.
    :param cap: Largest number of tilings accepted, defaults to TILECOUNT_ENUM_CAP.
    :param budget: Triangle budget passed to the counter.
    :raises ResourceBudgetExceeded: If the region has more tilings than the cap.
    """
    dual = dual_graph(region)
    limit = environment.ENUM_CAP if cap is None else cap
    masks = _Bitmasks(dual)
    if len(dual) > resolve_budget(budget):
        raise ResourceBudgetExceeded("triangle budget", resolve_budget(budget), len(dual))
    total = masks.count(masks.full)
    if total > limit:
        raise ResourceBudgetExceeded("enumeration cap", limit, total)

    pairs: list = []
    skipped: list = []

    def walk(mask: int) -> Iterator[Tiling]:
        if mask == 0:
            lozenges = tuple(sorted((a, b) if is_up(a) else (b, a) for a, b in pairs))
            yield Tiling(lozenges=lozenges, uncovered=frozenset(skipped))
            return
        low = mask & -mask
        rest = mask ^ low
        node = masks.order[low.bit_length() - 1]
        if masks.free_mask & low and masks.count(rest):
            skipped.append(node)
            yield from walk(rest)
            skipped.pop()
        partners = masks.adjacent[low.bit_length() - 1] & rest
        while partners:
            bit = partners & -partners
            partners ^= bit
            if masks.count(rest ^ bit):
                pairs.append((node, masks.order[bit.bit_length() - 1]))
                yield from walk(rest ^ bit)
                pairs.pop()

    yield from walk(masks.full)


def forced_reduction(dual: DualGraph) -> tuple[DualGraph, int]:
    """
    Strip forced lozenges: a non-free vertex of degree one must be matched to its only neighbour, and an isolated
    free vertex stays unmatched. Repeats until nothing changes.
    :return: The reduced graph and the number of lozenges removed; the matching count is unchanged.
    """
    graph = dual.graph.copy()
    free = set(dual.free)
    forced = 0
    changed = True
    while changed:
        changed = False
        for node in sorted(graph.nodes):
            if node not in graph:
                continue
            degree = graph.degree(node)
            if node in free and degree == 0:
                graph.remove_node(node)
                free.discard(node)
                changed = True
            elif node not in free and degree == 1:
                (partner,) = graph.neighbors(node)
                graph.remove_nodes_from((node, partner))
                free.discard(partner)
                forced += 1
                changed = True
    logger.debug("%s: %d forced lozenges removed", dual.label, forced)
    return DualGraph(graph=graph, free=frozenset(free), label=f"{dual.label}/reduced"), forced
