# Standard Library Imports
import logging
from fractions import Fraction
from typing import Hashable, Literal

# Third Party Imports
import networkx as nx
from networkx.algorithms.connectivity import local_node_connectivity

# Local App Imports
from tilecount.models.exceptions import IdentityMismatch, ParameterError, ResourceBudgetExceeded
from tilecount.models.flashlight import FlashlightParams, flashlight
from tilecount.models.region import Cell, KuoVertices, is_up
from tilecount.services.exactnum import Count
from tilecount.services.formulas import (
    RECURRENCE_NAMES,
    flashlight_product,
    recurrence_holds,
    recurrence_terms,
)
from tilecount.services.lattice.matching import (
    DualGraph,
    count_matchings_free,
    count_region,
    dual_graph,
    resolve_budget,
)
from tilecount.services.lattice.regions import build_flashlight

logger = logging.getLogger(__name__)

PATH_CAP = 200_000
_SOURCE = "__source__"
_SINK = "__sink__"


def _regime(p: FlashlightParams) -> None:
    if p.x < 2 or p.z < 1:
        raise ParameterError("(x, z)", "x >= 2 and z >= 1", (p.x, p.z))


# --- Outer face ---
def outer_face_order(dual: DualGraph) -> list[Hashable]:
    """
    Vertices along the outer face of the dual of a traced region, clockwise. Empty for graphs built by hand.
    """
    return list(dual.outer)


def in_cyclic_order(order: list[Hashable], vertices: list[Hashable]) -> bool:
    """
    Whether the vertices appear around the cyclic sequence in the given order, in either direction.
    """
    if any(vertex not in order for vertex in vertices):
        return False
    count = len(order)
    positions = [order.index(vertex) for vertex in vertices]
    relative = [(position - positions[0]) % count for position in positions]
    return relative == sorted(relative) or relative[1:] == sorted(relative[1:], reverse=True)


# --- Deletion counts ---
def kuo_deletion_counts(dual: DualGraph, kuo: KuoVertices, budget: int | None = None) -> dict[str, Count]:
    """
    Matching counts of the graph and of the six deletions in the condensation identity, keyed as in
    RECURRENCE_NAMES ("g" for the graph itself, otherwise the deleted vertex names).
    """
    named = kuo.as_dict()
    return {
        name: count_matchings_free(
            dual if name == "g" else dual.delete(named[letter] for letter in name), budget
        )
        for name in RECURRENCE_NAMES
    }


def kuo_verify(
    dual: DualGraph, kuo: KuoVertices, budget: int | None = None, check_separation: bool = False
) -> bool:
    """
    Check M(G) M(G-uvws) + M(G-uw) M(G-vs) == M(G-us) M(G-vw) + M(G-uv) M(G-ws) by direct counting.
    The identity only applies when separation_check passes; callers that have not run it pass
    check_separation=True, and a failed separation returns False.
    """
    if check_separation and not all(separation_check(dual, kuo, budget=budget)):
        logger.warning("%s: vertices %s are not separated", dual.label, kuo.as_dict())
        return False
    values = kuo_deletion_counts(dual, kuo, budget)
    holds = recurrence_holds(values)
    logger.debug("%s: condensation %s with %s", dual.label, "holds" if holds else "fails", values)
    return holds


# --- Separation ---
def _separated_on_outer_face(order: list, a, b, c, d, free: frozenset) -> bool | None:
    """
    With a, b, c, d and every free vertex on the outer face, and c and d on opposite boundary arcs between a and
    b, a path from a to b cuts one of c, d off from the free vertices whenever all of them sit strictly inside
    one arc. None means the criterion does not apply.
    """
    if any(vertex not in order for vertex in (a, b, c, d, *free)):
        return None
    if any(vertex in (a, b) for vertex in (c, d, *free)):
        return None
    count = len(order)
    start, end = order.index(a), order.index(b)
    span = (end - start) % count

    def arc(vertex) -> bool:
        return 0 < (order.index(vertex) - start) % count < span

    if arc(c) == arc(d):
        return None
    return len({arc(vertex) for vertex in free}) == 1 or None


def _separated_by_search(graph: nx.Graph, a, b, c, d, free: frozenset, cap: int) -> bool:
    """
    No path from a to b leaves room for two vertex-disjoint paths from c and d into distinct free vertices.
    """
    for attempt, path in enumerate(nx.all_simple_paths(graph, a, b)):
        if attempt >= cap:
            raise ResourceBudgetExceeded("separation path cap", cap)
        blocked = set(path)
        if c in blocked or d in blocked:
            continue
        targets = [vertex for vertex in free if vertex not in blocked]
        if len(targets) < 2:
            continue
        rest = nx.Graph(graph.subgraph(set(graph) - blocked))
        rest.add_edges_from(((_SOURCE, c), (_SOURCE, d)))
        rest.add_edges_from((vertex, _SINK) for vertex in targets)
        if local_node_connectivity(rest, _SOURCE, _SINK) >= 2:
            return False
    return True


def separation_check(
    dual: DualGraph, kuo: KuoVertices, cap: int = PATH_CAP, budget: int | None = None
) -> tuple[bool, bool]:
    """
    Separation hypothesis of condensation with a free boundary.
    :return: (u, w separated, v, s separated); a pair is separated when no path between it can coexist with
        vertex-disjoint paths from the other two vertices into distinct free vertices.
    :raises ResourceBudgetExceeded: If the graph is over budget or the path search passes cap.
    """
    if not dual.free:
        return True, True
    if len(dual) > resolve_budget(budget):
        raise ResourceBudgetExceeded("triangle budget", resolve_budget(budget), len(dual))
    order = outer_face_order(dual)
    ordered = in_cyclic_order(order, [kuo.u, kuo.v, kuo.w, kuo.s])
    results = []
    for a, b, c, d in ((kuo.u, kuo.w, kuo.v, kuo.s), (kuo.v, kuo.s, kuo.u, kuo.w)):
        verdict = _separated_on_outer_face(order, a, b, c, d, dual.free) if ordered else None
        if verdict is None:
            verdict = _separated_by_search(dual.graph, a, b, c, d, dual.free, cap)
        results.append(verdict)
    return results[0], results[1]


# --- Flashlight condensation ---
def conversion_table(p: FlashlightParams) -> list[tuple[tuple[str, ...], FlashlightParams]]:
    """
    For each deletion in the condensation identity, the flashlight region with the same tiling number.
    """
    terms = recurrence_terms(p)
    return [(tuple(name), terms[name]) for name in RECURRENCE_NAMES if name != "g"]


def closed_form_vertices(p: FlashlightParams) -> KuoVertices:
    """
    u: down-triangle in the corner of the (x+t)-side and the zigzag; v: partner of the top free triangle;
    w: partner of the bottom free triangle; s: last up-triangle of the zigzag.
    """
    x, y, z, t = p.as_tuple()
    n = x + y + z
    return KuoVertices(
        u=(x + t + 1, 2 * y + 4 * z + x + t - 2),
        v=(1, 1),
        w=(n - 1, n - 1),
        s=(x + z + t, 2 * y + x + z + t),
    )


def _targets(p: FlashlightParams, budget: int | None) -> dict[str, Count]:
    return {
        "".join(names): count_region(build_flashlight(params), budget)
        for names, params in conversion_table(p)
    }


def _realises(dual: DualGraph, kuo: KuoVertices, targets: dict[str, Count], budget: int | None) -> bool:
    named = kuo.as_dict()
    if any(vertex not in dual.graph or vertex in dual.free for vertex in named.values()):
        return False
    for name, target in targets.items():
        if count_matchings_free(dual.delete(named[letter] for letter in name), budget) != target:
            return False
    return in_cyclic_order(outer_face_order(dual), [kuo.u, kuo.v, kuo.w, kuo.s])


def search_kuo_vertices(
    dual: DualGraph, targets: dict[str, Count], budget: int | None = None
) -> KuoVertices | None:
    """
    Look for outer-face triangles realising every conversion: u among the down-triangles, v, w, s among the
    up-triangles, none of them free. Pairs are pruned as soon as their deletion count misses its target.
    """
    order = outer_face_order(dual)
    downs = [cell for cell in order if not is_up(cell) and cell not in dual.free]
    ups = [cell for cell in order if is_up(cell) and cell not in dual.free]
    memo: dict[frozenset, Count] = {}

    def count_without(*cells: Cell) -> Count:
        key = frozenset(cells)
        if key not in memo:
            memo[key] = count_matchings_free(dual.delete(key), budget)
        return memo[key]

    for u in downs:
        for v in ups:
            if count_without(u, v) != targets["uv"]:
                continue
            for w in ups:
                if w == v or count_without(u, w) != targets["uw"] or count_without(v, w) != targets["vw"]:
                    continue
                for s in ups:
                    if s in (v, w):
                        continue
                    if (
                        count_without(u, s) == targets["us"]
                        and count_without(v, s) == targets["vs"]
                        and count_without(w, s) == targets["ws"]
                        and count_without(u, v, w, s) == targets["uvws"]
                        and in_cyclic_order(order, [u, v, w, s])
                    ):
                        return KuoVertices(u=u, v=v, w=w, s=s, searched=True)
    return None


def flashlight_kuo_vertices(
    p: FlashlightParams, validate: bool = True, budget: int | None = None
) -> KuoVertices:
    """
    Condensation vertices of a flashlight region. The closed-form placement is checked against the conversion
    table by brute force; if it fails, a search over the outer face replaces it and the result is marked searched.
    :raises ParameterError: Unless x >= 2 and z >= 1.
    :raises IdentityMismatch: If no placement realises the conversions.
    """
    _regime(p)
    kuo = closed_form_vertices(p)
    if not validate:
        return kuo
    dual = dual_graph(build_flashlight(p))
    targets = _targets(p, budget)
    if _realises(dual, kuo, targets, budget):
        return kuo
    logger.warning("closed-form condensation vertices fail for %s, searching the outer face", p)
    found = search_kuo_vertices(dual, targets, budget)
    if found is None:
        raise IdentityMismatch(f"conversions of {p}", "closed-form placement", "no outer-face placement")
    logger.info("condensation vertices for %s found by search: %s", p, found.as_dict())
    return found


def conversion_check(
    p: FlashlightParams, kuo: KuoVertices | None = None, budget: int | None = None
) -> dict[str, tuple[Count, Count]]:
    """
    Evaluate every conversion by brute force.
    :return: For each deletion name, (count after deleting the vertices, count of the target flashlight).
    """
    kuo = kuo or flashlight_kuo_vertices(p, validate=False)
    dual = dual_graph(build_flashlight(p))
    named = kuo.as_dict()
    return {
        "".join(names): (
            count_matchings_free(dual.delete(named[letter] for letter in names), budget),
            count_region(build_flashlight(params), budget),
        )
        for names, params in conversion_table(p)
    }


def recurrence_verify(
    p: FlashlightParams, mode: Literal["formula", "brute"] = "formula", budget: int | None = None
) -> bool:
    """
    Check the flashlight recurrence (with its z = 1 variant) on product values or on brute-force region counts.
    :raises ParameterError: Unless x >= 2 and z >= 1.
    :raises ResourceBudgetExceeded: In brute mode, if a region is over budget.
    """
    _regime(p)
    terms = recurrence_terms(p)
    if mode == "formula":
        values = {name: flashlight_product(*params.as_tuple()) for name, params in terms.items()}
    elif mode == "brute":
        values = {name: count_region(build_flashlight(params), budget) for name, params in terms.items()}
    else:
        raise ParameterError("mode", "formula or brute", mode)
    return recurrence_holds(values)


def conjecture_y0_check(x: int, z: int, t: int, budget: int | None = None) -> dict[str, Count | Fraction | bool]:
    """
    Compare the brute-force count of F(x,0,z,t) against the product formula, which is only conjectured at y = 0.
    :return: {"lhs": brute-force count, "rhs": product value, "equal": lhs == rhs}.
    """
    p = flashlight(x, 0, z, t)
    lhs = count_region(build_flashlight(p), budget)
    product = flashlight_product(x, 0, z, t)
    rhs = int(product) if product.denominator == 1 else product
    if lhs != rhs:
        logger.warning("y = 0 experiment: %s counts %d but the product gives %s", p, lhs, rhs)
    return {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs}
