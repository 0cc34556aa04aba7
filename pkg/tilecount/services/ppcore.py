# Standard Library Imports
import logging
from typing import Callable, Iterable, Iterator, Literal

# Third Party Imports
import pydash
from pydantic import ValidationError

# Local App Imports
from tilecount.models.exceptions import ParameterError, ShapeError
from tilecount.models.plane_partition import PlanePartition
from tilecount.models.shape import Partition, ShapeFamily, StrictPartition
from tilecount.services.exactnum import Count, QPoly, qpoly_from_coeffs
from tilecount.services.shapes import (
    as_strict,
    cells,
    double_shape,
    halve_self_conjugate,
    is_self_conjugate,
    make_shape,
)

logger = logging.getLogger(__name__)

Entries = tuple[tuple[int, ...], ...]
SymmetryClass = Literal[
    "all", "symmetric", "transpose_complementary", "symmetric_self_complementary"
]


# --- Enumeration ---
def _neighbour_indices(shape: Partition) -> list[tuple[int | None, int | None]]:
    """
    For every cell in row-major order, the flat indices of its left and upper neighbours.
    """
    flat = cells(shape)
    index = {cell: n for n, cell in enumerate(flat)}
    return [(index.get((i, j - 1)), index.get((i - 1, j))) for i, j in flat]


def _to_rows(shape: Partition, flat: list[int]) -> Entries:
    rows, start = [], 0
    for part in shape.parts:
        rows.append(tuple(flat[start : start + part]))
        start += part
    return tuple(rows)


def iter_fillings(shape: Partition, m: int) -> Iterator[Entries]:
    """
    Raw fillings of a (shifted) diagram with entries in [0, m], weakly decreasing along rows and down columns.
    Yields in lexicographic order of the row-major reading word.
    """
    if m < 0:
        raise ParameterError("m", "m >= 0", m)
    neighbours = _neighbour_indices(shape)
    total = len(neighbours)
    values = [0] * total

    def fill(n: int) -> Iterator[Entries]:
        if n == total:
            yield _to_rows(shape, values)
            return
        left, above = neighbours[n]
        upper = m
        if left is not None:
            upper = min(upper, values[left])
        if above is not None:
            upper = min(upper, values[above])
        for value in range(upper + 1):
            values[n] = value
            yield from fill(n + 1)

    yield from fill(0)


def enumerate_pp(shape: Partition, m: int) -> Iterator[PlanePartition]:
    """
    Stream every plane partition of shape with entries at most m, each exactly once.
    :param shape: Partition.
    :param m: Entry bound.
    :return: Generator of PlanePartition in lexicographic order of the reading word.
    """
    if shape.shifted:
        shape = Partition(parts=shape.parts)
    for entries in iter_fillings(shape, m):
        yield PlanePartition.model_construct(shape=shape, bound=m, entries=entries)


def enumerate_spp(shape: StrictPartition, m: int) -> Iterator[PlanePartition]:
    """
    Stream every shifted plane partition of the strict shape with entries at most m.
    """
    shape = as_strict(shape)
    for entries in iter_fillings(shape, m):
        yield PlanePartition.model_construct(shape=shape, bound=m, entries=entries)


def _rows_below(ceiling: list[int]) -> Iterator[tuple[int, ...]]:
    """
    Weakly decreasing rows r with r[k] <= ceiling[k].
    """
    length = len(ceiling)
    row = [0] * length

    def extend(k: int, cap: int) -> Iterator[tuple[int, ...]]:
        if k == length:
            yield tuple(row)
            return
        for value in range(min(cap, ceiling[k]) + 1):
            row[k] = value
            yield from extend(k + 1, value)

    yield from extend(0, ceiling[0] if ceiling else 0)


def _count_by_rows(shape: Partition, m: int) -> Count:
    if m < 0:
        raise ParameterError("m", "m >= 0", m)
    if not shape.parts:
        return 1
    offset = 1 if shape.shifted else 0
    counts = {row: 1 for row in _rows_below([m] * shape.parts[0])}
    for part in shape.parts[1:]:
        following: dict[tuple[int, ...], int] = {}
        for previous, ways in counts.items():
            for row in _rows_below([previous[k + offset] for k in range(part)]):
                following[row] = following.get(row, 0) + ways
        counts = following
    return sum(counts.values())


def count_pp_brute(shape: Partition, m: int) -> Count:
    """
    Count plane partitions by transfer over admissible rows, independent of the streaming enumerator.
    """
    if shape.shifted:
        shape = Partition(parts=shape.parts)
    return _count_by_rows(shape, m)


def count_spp_brute(shape: StrictPartition, m: int) -> Count:
    return _count_by_rows(as_strict(shape), m)


# --- Statistics ---
def _is_square(shape: Partition) -> bool:
    return not shape.shifted and all(part == shape.rows() for part in shape.parts)


def pp_statistics(pp: PlanePartition) -> tuple[int, int | None]:
    """
    Size and half size of a plane partition.
    :param pp: Plane partition.
    :return: (sum of entries, sum of entries on or above the diagonal); the half size is None unless the shape
        is an n x n square.
    """
    size = pp.size()
    if not _is_square(pp.shape):
        return size, None
    half = sum(value for i, row in enumerate(pp.entries) for j, value in enumerate(row) if j >= i)
    return size, half


def gen_function(
    stream: Iterable[PlanePartition], weight: Literal["size", "half_size"] = "size"
) -> QPoly:
    """
    Generating polynomial of a finite stream of plane partitions by size or half size.
    :raises ShapeError: If half size is requested for a plane partition without one.
    """

    def weigh(pp: PlanePartition) -> int:
        size, half = pp_statistics(pp)
        if weight == "size":
            return size
        if half is None:
            raise ShapeError("half size", pp.shape)
        return half

    by_weight = pydash.count_by(list(stream), weigh)
    if not by_weight:
        return qpoly_from_coeffs([])
    coeffs = [0] * (max(by_weight) + 1)
    for exponent, amount in by_weight.items():
        coeffs[exponent] = amount
    return qpoly_from_coeffs(coeffs)


# --- Symmetry operations ---
def _transpose_entries(entries: Entries) -> Entries:
    width = len(entries[0]) if entries else 0
    return tuple(
        tuple(row[j] for row in entries if len(row) > j) for j in range(width)
    )


def _complement_entries(entries: Entries, m: int) -> Entries:
    return tuple(tuple(m - value for value in reversed(row)) for row in reversed(entries))


def transpose(pp: PlanePartition) -> PlanePartition:
    """
    Reflect a plane partition across the main diagonal.
    :raises ShapeError: If the shape is shifted or not self-conjugate.
    """
    if pp.shape.shifted or not is_self_conjugate(pp.shape):
        raise ShapeError("transpose", pp.shape)
    return PlanePartition(shape=pp.shape, bound=pp.bound, entries=_transpose_entries(pp.entries))


def complement(pp: PlanePartition) -> PlanePartition:
    """
    Complementation m - pi(a+1-i, b+1-j) in the a x b box.
    :raises ShapeError: If the shape is not a rectangle.
    """
    parts = pp.shape.parts
    if pp.shape.shifted or len(set(parts)) > 1:
        raise ShapeError("complement", pp.shape)
    return PlanePartition(
        shape=pp.shape, bound=pp.bound, entries=_complement_entries(pp.entries, pp.bound)
    )


CLASS_FILTERS: dict[str, Callable[[Entries, int], bool]] = {
    "all": lambda e, m: True,
    "symmetric": lambda e, m: _transpose_entries(e) == e,
    "transpose_complementary": lambda e, m: _transpose_entries(e) == _complement_entries(e, m),
    "symmetric_self_complementary": lambda e, m: _transpose_entries(e) == e
    and _complement_entries(e, m) == e,
}


def count_symmetry_class(symmetry: SymmetryClass, n: int, m: int) -> Count:
    """
    Brute-force count of the members of one symmetry class among the plane partitions in an n x n x m box.
    :param symmetry: all, symmetric, transpose_complementary or symmetric_self_complementary.
    :param n: Side of the square base.
    :param m: Entry bound.
    :return: Number of members.
    """
    if symmetry not in CLASS_FILTERS:
        raise ParameterError("symmetry", f"one of {sorted(CLASS_FILTERS)}", symmetry)
    keep = CLASS_FILTERS[symmetry]
    square = make_shape(ShapeFamily(tag="rectangle", params=(n, n)))
    total = sum(1 for entries in iter_fillings(square, m) if keep(entries, m))
    logger.debug("symmetry class %s n=%d m=%d has %d members", symmetry, n, m, total)
    return total


# --- Shifted <-> symmetric ---
def spp_to_symmetric(pp: PlanePartition) -> PlanePartition:
    """
    Unfold a shifted plane partition of strict shape lambda into the symmetric plane partition of its double.
    """
    strict = as_strict(pp.shape)
    doubled = double_shape(strict)
    values = {(i, j): pp.entry(i, j) for i, j in cells(strict)}
    entries = tuple(
        tuple(values[(i, j)] if j >= i else values[(j, i)] for j in range(1, part + 1))
        for i, part in enumerate(doubled.parts, 1)
    )
    return PlanePartition(shape=doubled, bound=pp.bound, entries=entries)


def symmetric_to_spp(pp: PlanePartition) -> PlanePartition:
    """
    Fold a symmetric plane partition onto the cells on or above the diagonal.
    :raises ShapeError: If the plane partition is not symmetric.
    """
    if _transpose_entries(pp.entries) != pp.entries:
        raise ShapeError("folding a non-symmetric plane partition", pp.shape)
    strict = halve_self_conjugate(pp.shape)
    entries = tuple(
        tuple(pp.entries[i - 1][j - 1] for j in range(i, i + part))
        for i, part in enumerate(strict.parts, 1)
    )
    return PlanePartition(shape=strict, bound=pp.bound, entries=entries)


def is_member(entries: Entries, shape: Partition, m: int) -> bool:
    """
    Whether a raw filling is a (shifted) plane partition of shape with entries at most m.
    """
    try:
        PlanePartition(shape=shape, bound=m, entries=entries)
    except ValidationError:
        return False
    return True
