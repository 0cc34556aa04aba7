# Standard Library Imports
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Sequence

# Third Party Imports
from sympy import Poly, Symbol, ZZ

# Local App Imports
from tilecount.models.exceptions import NonIntegralResult, ParameterError

Count = int
ExactRational = Fraction
QPoly = Poly

q = Symbol("q")


# --- Binomials ---
def binom_int(a: int, b: int) -> int:
    """
    Integer binomial with the extended conventions: zero for b < 0, one for b = 0 (so binom(-1, 0) = 1), and the
    falling factorial a(a-1)...(a-b+1)/b! for negative a.
    """
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a >= 0:
        return comb(a, b)
    return prod(range(a - b + 1, a + 1)) // factorial(b)


def binom_ext(a: int, b: int) -> ExactRational:
    """
    Binomial coefficient as an exact rational, defined for every pair of integers.
    :param a: Top entry, any integer.
    :param b: Bottom entry, any integer.
    :return: Integer-valued Fraction.
    """
    return Fraction(binom_int(a, b))


# --- q-polynomials ---
def qpoly_from_coeffs(coeffs: Sequence[int]) -> QPoly:
    """
    Build a q-polynomial from coefficients listed by ascending exponent.
    """
    if not coeffs:
        return Poly(0, q, domain=ZZ)
    return Poly(list(reversed([int(c) for c in coeffs])), q, domain=ZZ)


def qpoly_coeffs(poly: QPoly) -> list[int]:
    """
    Coefficients of a q-polynomial by ascending exponent, without trailing zeros ([] for the zero polynomial).
    """
    if poly.is_zero:
        return []
    return [int(c) for c in reversed(poly.all_coeffs())]


def qpoly_monomial(exponent: int, coefficient: int = 1) -> QPoly:
    return Poly(coefficient * q**exponent, q, domain=ZZ)


def qpoly_at_one(poly: QPoly) -> int:
    return sum(qpoly_coeffs(poly))


def q_product(numerator: Iterable[int], denominator: Iterable[int]) -> QPoly:
    """
    Exact quotient prod(1 - q^a) / prod(1 - q^b) over the given exponents.
    :param numerator: Exponents a of the numerator factors.
    :param denominator: Exponents b of the denominator factors, all positive.
    :return: The quotient as a polynomial.
    :raises ExactQuotientFailed: If the quotient is not a polynomial.
    """
    one = Poly(1, q, domain=ZZ)
    top = one
    for a in numerator:
        top = top * Poly(1 - q**a, q, domain=ZZ)
    bottom = one
    for b in denominator:
        if b <= 0:
            raise ParameterError("q-denominator exponent", "b >= 1", b)
        bottom = bottom * Poly(1 - q**b, q, domain=ZZ)
    return top.exquo(bottom)


def q_binom(a: int, b: int) -> QPoly:
    """
    Gaussian binomial coefficient prod_{1<=i<=b} (1 - q^(a+1-i)) / (1 - q^i).
    :param a: Nonnegative top entry.
    :param b: Nonnegative bottom entry; b > a gives the zero polynomial.
    :return: The q-binomial as a polynomial with integer coefficients.
    """
    if b < 0 or b > a:
        return Poly(0, q, domain=ZZ)
    return q_product(
        (a + 1 - i for i in range(1, b + 1)), (i for i in range(1, b + 1))
    )


# --- Factorial family ---
@lru_cache(maxsize=None)
def hyperfactorial(n: int) -> Count:
    """
    H(n) = 0! 1! ... (n-1)!, with H(0) = H(1) = 1.
    """
    if n < 0:
        raise ParameterError("n", "n >= 0", n)
    return prod(factorial(n - i) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def hyperfactorial2(n: int) -> Count:
    """
    Skipping hyperfactorial H2(n) = prod_{i=1}^{floor(n/2)} (n-2i)!, with H2(0) = H2(1) = 1.
    """
    if n < 0:
        raise ParameterError("n", "n >= 0", n)
    return prod(factorial(n - 2 * i) for i in range(1, n // 2 + 1))


def double_factorial(n: int) -> Count:
    """
    n!! with the empty-product conventions 0!! = (-1)!! = 1.
    """
    if n < -1:
        raise ParameterError("n", "n >= -1", n)
    return prod(range(n, 0, -2))


def pochhammer(a: int, i: int) -> int:
    """
    Rising factorial a(a+1)...(a+i-1).
    """
    if i < 0:
        raise ParameterError("i", "i >= 0", i)
    return prod(range(a, a + i))


# --- Exact products ---
def ratio_product(factors: Iterable[tuple[int, int]]) -> ExactRational:
    """
    Multiply a stream of (numerator, denominator) pairs exactly. The empty product is 1.
    :raises ParameterError: If a denominator is zero.
    """
    value = Fraction(1)
    for num, den in factors:
        if den == 0:
            raise ParameterError("denominator", "nonzero factor denominators", den)
        value *= Fraction(num, den)
    return value


def as_count(value: ExactRational, context: str) -> Count:
    """
    Assert that an exact value is a nonnegative integer and return it.
    :param value: Result of a product formula.
    :param context: Formula name, used in the error message.
    :raises NonIntegralResult: If the value has a denominator or is negative.
    """
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise NonIntegralResult(context, value)
    return value.numerator
