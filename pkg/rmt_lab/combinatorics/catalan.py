"""
Catalan numbers and Gaussian moment counts
"""
import math
from fractions import Fraction
from functools import lru_cache
from typing import List

from rmt_lab.core.errors import ParameterError


def catalan(k: int) -> int:
    """C_k = binom(2k, k) / (k + 1), exact"""
    if k < 0:
        raise ParameterError(f"Catalan index must be >= 0, got {k}")
    return math.comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=None)
def _catalan_table(k: int) -> tuple:
    table: List[int] = [1]
    for n in range(1, k + 1):
        table.append(sum(table[i] * table[n - 1 - i] for i in range(n)))
    return tuple(table)


def catalan_recursive(k: int) -> int:
    """C_k from C_k = sum_{i<k} C_i C_{k-1-i}"""
    if k < 0:
        raise ParameterError(f"Catalan index must be >= 0, got {k}")
    return _catalan_table(k)[k]


def catalan_upper_bound(k: int) -> float:
    """4^k / (sqrt(pi) k^(3/2)), an upper bound for k >= 1"""
    if k < 1:
        raise ParameterError("The bound holds for k >= 1")
    return 4.0**k / (math.sqrt(math.pi) * k**1.5)


def catalan_generating_residual(z: Fraction, terms: int) -> Fraction:
    """
    |f - 1 - z f^2| for the truncated series f = sum_{k<terms} C_k z^k

    Exact; tends to zero as terms grows when |z| < 1/4.
    """
    z = Fraction(z)
    f = sum(Fraction(catalan(k)) * z**k for k in range(terms))
    return abs(f - 1 - z * f * f)


def double_factorial_odd(n: int) -> int:
    """(n-1)!! for even n (number of pairings of n points); 0 for odd n"""
    if n < 0:
        raise ParameterError("n must be >= 0")
    if n % 2:
        return 0
    return math.prod(range(n - 1, 0, -2))
