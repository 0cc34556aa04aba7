# Standard Library Imports
import logging
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Literal

# Third Party Imports

# Local App Imports
from tilecount.models.exceptions import IdentityMismatch, ParameterError
from tilecount.models.flashlight import FlashlightParams, flashlight
from tilecount.services.exactnum import (
    Count,
    ExactRational,
    QPoly,
    as_count,
    double_factorial,
    hyperfactorial as H,
    hyperfactorial2 as H2,
    q_product,
    ratio_product,
)
from tilecount.services.shapes import content

logger = logging.getLogger(__name__)


def _nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ParameterError(name, f"{name} >= 0", value)


def _triangle(n: int):
    """
    Index pairs 1 <= i <= j <= n.
    """
    return ((i, j) for i in range(1, n + 1) for j in range(i, n + 1))


# --- Shape families ---
def count_rectangle(a: int, b: int, m: int) -> Count:
    """
    MacMahon's box formula: plane partitions of the a x b rectangle with entries at most m.
    """
    _nonnegative(a=a, b=b, m=m)
    return as_count(
        ratio_product(
            (m + i + j - 1, i + j - 1) for i in range(1, a + 1) for j in range(1, b + 1)
        ),
        "count_rectangle",
    )


def count_shifted_staircase(n: int, m: int) -> Count:
    """
    Shifted plane partitions of delta_n, equivalently symmetric plane partitions in an n x n x m box.
    """
    _nonnegative(n=n, m=m)
    return as_count(
        ratio_product((m + i + j - 1, i + j - 1) for i, j in _triangle(n)),
        "count_shifted_staircase",
    )


def count_staircase(a: int, b: int, m: int) -> Count:
    """
    Plane partitions of the staircase (b, b-1, ..., b-a+1).
    :raises ParameterError: Unless 1 <= a <= b.
    """
    _nonnegative(m=m)
    if not 1 <= a <= b:
        raise ParameterError("a", "1 <= a <= b", (a, b))
    factors = []
    for i in range(1, a + 1):
        factors += [(m + i + j - 1, i + j - 1) for j in range(1, b - a + 2)]
        factors += [(2 * m + i + j - 1, i + j - 1) for j in range(b - a + 2, b - a + i + 1)]
    return as_count(ratio_product(factors), "count_staircase")


def count_shifted_trapezoid(n: int, k: int, m: int) -> Count:
    """
    Shifted plane partitions of (n, n-2, ..., n-2(k-1)).
    """
    _nonnegative(n=n, k=k, m=m)
    if k > 0 and n - 2 * (k - 1) < 1:
        raise ParameterError("k", "n - 2(k-1) >= 1", (n, k))
    return as_count(
        ratio_product(
            (m + i + j - 1, i + j - 1) for i in range(1, k + 1) for j in range(1, n - k + 2)
        ),
        "count_shifted_trapezoid",
    )


def count_sds(n: int, k: int, m: int) -> Count:
    """
    Shifted plane partitions of the shifted double staircase delta_n + delta_k with entries at most m.
    :param n: Larger staircase, n >= k.
    :param k: Smaller staircase.
    :param m: Entry bound.
    :return: The product over 1 <= i <= j <= n of (m+i+j-1)/(i+j-1) times the product over 1 <= i <= j <= k of
        (m+i+j)/(i+j).
    """
    _nonnegative(n=n, k=k, m=m)
    if k > n:
        raise ParameterError("k", "0 <= k <= n", (n, k))
    factors = [(m + i + j - 1, i + j - 1) for i, j in _triangle(n)]
    factors += [(m + i + j, i + j) for i, j in _triangle(k)]
    return as_count(ratio_product(factors), "count_sds")


def count_arith_progression(big_m: int, d: int, length: int, m: int) -> Count:
    """
    Plane partitions of (M-d, M-2d, ..., M-ld). Cells with l + c(i,j) <= M - i*d contribute (m+l+c)/(l+c), the
    others ((d+1)m+l+c)/(l+c).
    """
    _nonnegative(M=big_m, d=d, l=length, m=m)
    if length > 0 and big_m - length * d < 1:
        raise ParameterError("M", "M - l*d >= 1", (big_m, d, length))
    factors = []
    for i in range(1, length + 1):
        for j in range(1, big_m - i * d + 1):
            c = length + content(i, j)
            if c <= big_m - i * d:
                factors.append((m + c, c))
            else:
                factors.append(((d + 1) * m + c, c))
    return as_count(ratio_product(factors), "count_arith_progression")


# --- Flashlight ---
def flashlight_product(x: int, y: int, z: int, t: int) -> ExactRational:
    """
    The three-fold product giving the tiling number of the flashlight region, evaluated exactly.
    """
    factors = [(x + i + j - 1, i + j - 1) for i, j in _triangle(y + z)]
    factors += [(x + i + j, i + j) for i, j in _triangle(z)]
    factors += [
        (x + z + 2 * i + j, x + 2 * i + j - 1)
        for i in range(1, t + 1)
        for j in range(1, z + 1)
    ]
    return ratio_product(factors)


def count_flashlight_formula(p: FlashlightParams) -> Count:
    """
    Tiling number of F_{x,y,z,t} by the product formula. y = 0 is evaluated verbatim and is conjectural.
    """
    if p.experimental:
        logger.info("evaluating %s outside the proven range y >= 1", p)
    return as_count(flashlight_product(*p.as_tuple()), f"count_flashlight_formula{p.as_tuple()}")


def flashlight_status(p: FlashlightParams) -> Literal["theorem", "conjectural"]:
    return "conjectural" if p.experimental else "theorem"


def count_quartered_hexagon(x: int, s: list[int] | tuple[int, ...]) -> Count:
    """
    Tilings of the quartered hexagon Q_x(s_1, ..., s_k).
    :param x: Length of the short side.
    :param s: Positions of the removed triangles, 1 <= s_1 < ... < s_k <= x + k.
    :return: Product of (s_j - s_i)/(j - i) over i < j and (s_j + s_i)/(j + i) over i <= j.
    :raises ParameterError: If s is not strictly increasing inside [1, x+k].
    """
    _nonnegative(x=x)
    s = tuple(s)
    k = len(s)
    if any(a >= b for a, b in zip(s, s[1:])) or (s and (s[0] < 1 or s[-1] > x + k)):
        raise ParameterError("s", f"strictly increasing within [1, {x + k}]", s)
    factors = [(s[j - 1] - s[i - 1], j - i) for i, j in _triangle(k) if i < j]
    factors += [(s[j - 1] + s[i - 1], j + i) for i, j in _triangle(k)]
    return as_count(ratio_product(factors), "count_quartered_hexagon")


# --- Base case identities ---
def _agree(identity: str, first: ExactRational, second: ExactRational) -> ExactRational:
    if first != second:
        raise IdentityMismatch(identity, first, second)
    return first


def eval_identity1a(z: int, t: int) -> Count:
    """
    Tiling number of F_{0,y,z,t} through transpose-complementary plane partitions, as a product and as a ratio
    of hyperfactorials; both forms must agree.
    :raises IdentityMismatch: If the two forms differ.
    """
    _nonnegative(z=z, t=t)
    product = ratio_product(
        pair
        for i in range(1, z + 1)
        for pair in [(t + i, i)] + [(2 * t + i + j - 1, i + j - 1) for j in range(2, i + 1)]
    )
    closed = Fraction(
        H2(2 * z + 2 * t + 2) * H(z + 1) * H(2 * t + 1),
        H2(2 * t + 2) * H2(2 * z + 2) * H(2 * t + z + 1),
    )
    return as_count(_agree("identity1a", product, closed), "eval_identity1a")


def eval_identity1b(z: int, t: int) -> Count:
    """
    P_{0,y,z,t}: the third product of the flashlight formula at x = 0 and its hyperfactorial form.
    """
    _nonnegative(z=z, t=t)
    product = ratio_product(
        (z + 2 * j + i, 2 * j + i - 1) for i in range(1, z + 1) for j in range(1, t + 1)
    )
    closed = Fraction(
        H2(2 * t + 2 * z + 2) * H2(2 * t + 1) * H(z + 1),
        H2(2 * z + 2) * H(z + 2 * t + 1),
    )
    return as_count(_agree("identity1b", product, closed), "eval_identity1b")


def eval_identity2a(y: int, z: int, t: int) -> Count:
    """
    Tiling number of F_{1,y,z,t} through symmetric plane partitions and the Kummer sum.
    :raises IdentityMismatch: If the product, its hyperfactorial form and the flashlight product disagree.
    """
    _nonnegative(z=z, t=t)
    if y < 1:
        raise ParameterError("y", "y >= 1", y)
    product = (
        2**y
        * ratio_product((2 * t + i + j, 1) for i, j in _triangle(z + 1))
        / ratio_product((i + j, 1) for i, j in _triangle(z))
        * Fraction(factorial(t), 2 * factorial(t + z + 1))
    )
    closed = Fraction(2 ** (y - 1) * factorial(t), factorial(t + z + 1)) * Fraction(
        H2(2 * t + 2 * z + 4) * H(2 * t + 1) * H(z + 1),
        H2(2 * t + 2) * H(2 * t + z + 2) * H2(2 * z + 2),
    )
    value = _agree("identity2a", product, closed)
    return as_count(_agree("identity2a", value, flashlight_product(1, y, z, t)), "eval_identity2a")


def eval_identity2b(y: int, z: int, t: int) -> Count:
    """
    P_{1,y,z,t} simplified. The t-product equals H2(2z+2t+3) H2(2t+2) H(z+2) / (H2(2z+3) H(2t+z+2)).
    """
    _nonnegative(y=y, z=z, t=t)
    head = Fraction(2 ** (y + z) * double_factorial(2 * z + 1), factorial(z + 1))
    product = head * ratio_product(
        (
            factorial(2 * i + 2 * z + 1) * factorial(2 * i),
            factorial(2 * i + z + 1) * factorial(2 * i + z),
        )
        for i in range(1, t + 1)
    )
    closed = head * Fraction(
        H2(2 * z + 2 * t + 3) * H2(2 * t + 2) * H(z + 2),
        H2(2 * z + 3) * H(2 * t + z + 2),
    )
    return as_count(_agree("identity2b", product, closed), "eval_identity2b")


def kummer_closed_sum(z: int, t: int) -> tuple[ExactRational, ExactRational, bool]:
    """
    The sum over 1 <= i <= z+1 of (2t+i)! / ((i-1)! (z-i+1)! (2t+i+z+1)!) and its closed form t! / (2 z! (t+z+1)!).
    :return: (summed value, closed form, whether they agree).
    """
    _nonnegative(z=z, t=t)
    lhs = sum(
        (
            Fraction(
                factorial(2 * t + i),
                factorial(i - 1) * factorial(z - i + 1) * factorial(2 * t + i + z + 1),
            )
            for i in range(1, z + 2)
        ),
        Fraction(0),
    )
    rhs = Fraction(factorial(t), 2 * factorial(z) * factorial(t + z + 1))
    return lhs, rhs, lhs == rhs


def x1_decomposition_sum(z: int, t: int) -> Count:
    """
    Sum of the quartered hexagon counts Q_{t+1}(t+l_1, ..., t+l_z) over the z-subsets L of [z+1].
    """
    _nonnegative(z=z, t=t)
    return sum(
        count_quartered_hexagon(t + 1, [t + l for l in subset])
        for subset in combinations(range(1, z + 2), z)
    )


def x1_decomposition_check(y: int, z: int, t: int) -> bool:
    """
    Whether M(H_s) times the quartered hexagon sum reproduces the flashlight formula at x = 1, with
    M(H_s) = count_shifted_staircase(y, 1) = 2^y.
    """
    semi_hexagon = count_shifted_staircase(y, 1)
    return semi_hexagon * x1_decomposition_sum(z, t) == flashlight_product(1, y, z, t)


# --- Recurrence identities ---
def p_identity_check(x: int, y: int, z: int, t: int) -> tuple[bool | None, bool]:
    """
    The two product identities behind the condensation recurrence.
    :return: (P_{x,y,z,t} P_{x-2,y+2,z-2,t+2} == P_{x,y+2,z-2,t+1} P_{x-2,y,z,t+1} or None when z = 1,
        P_{x-2,y+2,z-1,t+1} P_{x,y,z-1,t+1} == P_{x,y,z-1,t} P_{x-2,y+2,z-1,t+2}).
    :raises ParameterError: Unless x >= 2, z >= 1 and y, t >= 0.
    """
    if x < 2 or z < 1:
        raise ParameterError("(x, z)", "x >= 2 and z >= 1", (x, z))
    _nonnegative(y=y, t=t)
    P = flashlight_product
    first = None
    if z >= 2:
        first = P(x, y, z, t) * P(x - 2, y + 2, z - 2, t + 2) == P(x, y + 2, z - 2, t + 1) * P(
            x - 2, y, z, t + 1
        )
    second = P(x - 2, y + 2, z - 1, t + 1) * P(x, y, z - 1, t + 1) == P(x, y, z - 1, t) * P(
        x - 2, y + 2, z - 1, t + 2
    )
    return first, second


def p_identity_z1_check(x: int, y: int, t: int) -> tuple[bool, bool]:
    """
    The z = 1 companions: P_{x,y,1,t} P_{x-2,y+1,0,t+2} == P_{x,y+1,0,t+1} P_{x-2,y,1,t+1} and
    P_{x-2,y+2,0,t+1} P_{x,y,0,t+1} == P_{x,y,0,t} P_{x-2,y+2,0,t+2}.
    """
    if x < 2:
        raise ParameterError("x", "x >= 2", x)
    _nonnegative(y=y, t=t)
    P = flashlight_product
    first = P(x, y, 1, t) * P(x - 2, y + 1, 0, t + 2) == P(x, y + 1, 0, t + 1) * P(x - 2, y, 1, t + 1)
    second = P(x - 2, y + 2, 0, t + 1) * P(x, y, 0, t + 1) == P(x, y, 0, t) * P(x - 2, y + 2, 0, t + 2)
    return first, second


RECURRENCE_NAMES = ("g", "uvws", "uw", "vs", "us", "vw", "uv", "ws")


def recurrence_terms(p: FlashlightParams) -> dict[str, FlashlightParams]:
    """
    Flashlight parameters of the eight graphs in the condensation recurrence, keyed by the deleted vertices.
    The recurrence reads g*uvws + uw*vs == us*vw + uv*ws. For z = 1 the uvws and us terms use the regions left
    after removing forced lozenges.
    :raises ParameterError: Unless x >= 2 and z >= 1.
    """
    x, y, z, t = p.as_tuple()
    if x < 2 or z < 1:
        raise ParameterError("(x, z)", "x >= 2 and z >= 1", (x, z))
    terms = {
        "g": p,
        "uvws": flashlight(x - 2, y + 2, z - 2, t + 2) if z >= 2 else flashlight(x - 2, y + 1, 0, t + 2),
        "uw": flashlight(x, y, z - 1, t + 1),
        "vs": flashlight(x - 2, y + 2, z - 1, t + 1),
        "us": flashlight(x, y + 2, z - 2, t + 1) if z >= 2 else flashlight(x, y + 1, 0, t + 1),
        "vw": flashlight(x - 2, y, z, t + 1),
        "uv": flashlight(x, y, z - 1, t),
        "ws": flashlight(x - 2, y + 2, z - 1, t + 2),
    }
    return terms


def recurrence_holds(values: dict[str, int]) -> bool:
    return (
        values["g"] * values["uvws"] + values["uw"] * values["vs"]
        == values["us"] * values["vw"] + values["uv"] * values["ws"]
    )


# --- q-analogs ---
def q_count_rectangle(a: int, b: int, m: int) -> QPoly:
    """
    Generating polynomial by size of the plane partitions in an a x b x m box.
    """
    _nonnegative(a=a, b=b, m=m)
    pairs = [(m + i + j - 1, i + j - 1) for i in range(1, a + 1) for j in range(1, b + 1)]
    return q_product((n for n, _ in pairs), (d for _, d in pairs))


def q_symmetric_macmahon(n: int, m: int) -> QPoly:
    """
    Size generating polynomial of symmetric plane partitions in an n x n x m box.
    """
    _nonnegative(n=n, m=m)
    pairs = [(2 * (i + j + m - 1), 2 * (i + j - 1)) for i, j in _triangle(n) if i < j]
    pairs += [(2 * i + m - 1, 2 * i - 1) for i in range(1, n + 1)]
    return q_product((a for a, _ in pairs), (b for _, b in pairs))


def q_symmetric_bender_knuth(n: int, m: int) -> QPoly:
    """
    Half-size generating polynomial of symmetric plane partitions in an n x n x m box.
    """
    _nonnegative(n=n, m=m)
    pairs = [(i + j + m - 1, i + j - 1) for i, j in _triangle(n)]
    return q_product((a for a, _ in pairs), (b for _, b in pairs))
