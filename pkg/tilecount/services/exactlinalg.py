# Standard Library Imports
import logging
from typing import Sequence

# Third Party Imports
from sympy import Poly, ZZ, sympify
from sympy.polys.matrices import DomainMatrix

# Local App Imports
from tilecount.models.exceptions import MatrixStructureError
from tilecount.models.shape import Partition, StrictPartition
from tilecount.services.exactnum import (
    Count,
    QPoly,
    binom_int,
    q,
    q_binom,
    qpoly_monomial,
)
from tilecount.services.shapes import as_strict

logger = logging.getLogger(__name__)

ExactMatrix = Sequence[Sequence[int]]
QMatrix = Sequence[Sequence[QPoly]]


def _check_square(matrix: Sequence[Sequence]) -> int:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise MatrixStructureError("square", f"{n}x{[len(row) for row in matrix]}")
    return n


# --- Determinants ---
def det_exact(matrix: ExactMatrix | QMatrix) -> int | QPoly:
    """
    Exact determinant by fraction-free elimination over ZZ or ZZ[q].
    :param matrix: Square matrix of integers or of q-polynomials.
    :return: int for integer entries, QPoly for polynomial entries.
    :raises MatrixStructureError: If the matrix is not square.
    """
    n = _check_square(matrix)
    polynomial = any(isinstance(entry, Poly) for row in matrix for entry in row)
    if n == 0:
        return Poly(1, q, domain=ZZ) if polynomial else 1
    if not polynomial:
        rows = [[ZZ(int(entry)) for entry in row] for row in matrix]
        return int(DomainMatrix(rows, (n, n), ZZ).det())

    ring = ZZ[q]
    rows = [
        [ring.from_sympy(entry.as_expr() if isinstance(entry, Poly) else sympify(entry)) for entry in row]
        for row in matrix
    ]
    value = DomainMatrix(rows, (n, n), ring).det()
    return Poly(ring.to_sympy(value), q, domain=ZZ)


# --- Pfaffians ---
def _check_skew(matrix: ExactMatrix) -> int:
    n = _check_square(matrix)
    if n % 2:
        raise MatrixStructureError("of even dimension", n)
    for i in range(n):
        for j in range(i, n):
            if matrix[i][j] != -matrix[j][i]:
                raise MatrixStructureError("skew-symmetric", n)
    return n


def pfaffian_exact(matrix: ExactMatrix) -> int:
    """
    Pfaffian by expansion along the first remaining row, memoised on the remaining index set.
    :param matrix: Skew-symmetric integer matrix of even dimension.
    :return: Pf(M), with Pf(M)^2 = det(M).
    :raises MatrixStructureError: If the matrix is odd-sized or not skew-symmetric.
    """
    n = _check_skew(matrix)
    memo: dict[tuple[int, ...], int] = {}

    def expand(remaining: tuple[int, ...]) -> int:
        if not remaining:
            return 1
        if remaining in memo:
            return memo[remaining]
        first, rest = remaining[0], remaining[1:]
        total = 0
        for position, j in enumerate(rest):
            if matrix[first][j]:
                sign = -1 if position % 2 else 1
                total += sign * matrix[first][j] * expand(rest[:position] + rest[position + 1 :])
        memo[remaining] = total
        return total

    return expand(tuple(range(n)))


# --- Matrix builders ---
def _f(i: int, j: int) -> int:
    return binom_int(j - i, 2) if j > i else binom_int(i - j + 1, 2)


def macmahon_matrix(shape: Partition, m: int, q_mode: bool = False) -> list[list]:
    """
    Matrix with (i, j) entry binom(lambda_i + m, i - j + m), or q^f(i,j) times the q-binomial in q-mode, where
    f(i, j) = binom(j-i, 2) for j > i and binom(i-j+1, 2) otherwise.
    """
    parts = shape.parts
    n = len(parts)
    if not q_mode:
        return [
            [binom_int(parts[i - 1] + m, i - j + m) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    return [
        [
            qpoly_monomial(_f(i, j)) * q_binom(parts[i - 1] + m, i - j + m)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]


def count_pp_det(shape: Partition, m: int, q_mode: bool = False) -> Count | QPoly:
    """
    Plane partitions of shape with entries at most m as a determinant; in q-mode, their size generating polynomial.
    """
    if not shape.parts:
        return qpoly_monomial(0) if q_mode else 1
    value = det_exact(macmahon_matrix(shape, m, q_mode))
    logger.debug("determinant count for %s, m=%d: %s", shape, m, value)
    return value


def stembridge_matrix(shape: StrictPartition, m: int) -> list[list[int]]:
    """
    Skew-symmetric matrix whose Pfaffian counts shifted plane partitions of a strict shape, padded with a zero part
    to even size. Entry (i, j) is the sum over 0 <= k <= l <= m+n-1 of A_i(k) A_j(l) - A_i(l) A_j(k) with
    A_i(k) = binom(lambda_i - 1 + m + i - 1 - k, m + i - 1 - k).
    :raises MatrixStructureError: If the built matrix is not skew-symmetric.
    """
    parts = list(as_strict(shape).parts)
    if len(parts) % 2:
        parts.append(0)
    n = len(parts)
    top = m + n - 1

    def a(i: int, k: int) -> int:
        return binom_int(parts[i - 1] - 1 + m + i - 1 - k, m + i - 1 - k)

    table = {(i, k): a(i, k) for i in range(1, n + 1) for k in range(top + 1)}
    pairs = [(k, l) for l in range(top + 1) for k in range(l + 1)]
    matrix = [
        [
            sum(table[i, k] * table[j, l] - table[i, l] * table[j, k] for k, l in pairs)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    _check_skew(matrix)
    return matrix


def count_spp_pf(shape: StrictPartition, m: int) -> Count:
    """
    Shifted plane partitions of a strict shape with entries at most m as a Pfaffian.
    """
    if not shape.parts:
        return 1
    return pfaffian_exact(stembridge_matrix(shape, m))
