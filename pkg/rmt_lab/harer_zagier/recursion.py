"""
Harer-Zagier recursion for the even GUE moments

With E[tr A^{2k}] = C_k b_k for the normalized GUE(N),
    b_0 = b_1 = 1,   b_{k+1} = b_k + k(k+1)/(4N^2) b_{k-1}   (k >= 1)
Values are exact: Fractions for a numeric N, or rational polynomials in
x = N^-2 (sympy, domain QQ) when N is left symbolic.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Union

import sympy

from rmt_lab.combinatorics.catalan import catalan
from rmt_lab.combinatorics.moments import MomentPolynomial
from rmt_lab.core.errors import DomainError, ParameterError

logger = logging.getLogger(__name__)

# Symbolic variable standing for N^-2
X = sympy.Symbol("x")


def _as_fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(str(value))


@dataclass
class HZState:
    """Running b_0..b_k for one fixed N (exact rationals)"""

    n: int
    values: List[Fraction] = field(default_factory=lambda: [Fraction(1), Fraction(1)])

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"N must be >= 1, got {self.n}")

    @property
    def k(self) -> int:
        return len(self.values) - 1

    def advance(self) -> Fraction:
        """Append b_{k+1}"""
        k = self.k
        nxt = self.values[k] + Fraction(k * (k + 1), 4 * self.n * self.n) * self.values[k - 1]
        self.values.append(nxt)
        return nxt

    def extend(self, k: int) -> "HZState":
        while self.k < k:
            self.advance()
        return self

    def is_monotone(self) -> bool:
        """b_1 <= b_2 < b_3 < ... (b_1 = b_0)"""
        tail = self.values[1:]
        return all(a < b for a, b in zip(tail, tail[1:]))


def hz_bk(k: int, n: Optional[Union[int, Fraction]] = None) -> Union[Fraction, sympy.Poly]:
    """
    b_k from the Harer-Zagier recursion

    Args:
        k: Index >= 0 (b_0 = b_1 = 1)
        n: Matrix size; None returns a polynomial in x = N^-2 over QQ

    Returns:
        Fraction for numeric n, sympy Poly in X otherwise
    """
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    if n is None:
        prev = cur = sympy.Poly(1, X, domain=sympy.QQ)
        for j in range(1, k):
            prev, cur = cur, cur + sympy.Poly(sympy.Rational(j * (j + 1), 4) * X, X, domain=sympy.QQ) * prev
        return cur
    n = _as_fraction(n)
    if n <= 0:
        raise ParameterError(f"N must be positive, got {n}")
    prev = cur = Fraction(1)
    for j in range(1, k):
        prev, cur = cur, cur + Fraction(j * (j + 1), 4) / (n * n) * prev
    return cur


def hz_moment_polynomial(k: int) -> MomentPolynomial:
    """E[tr A^{2k}] = C_k b_k as genus-indexed coefficients of N^{-2g}"""
    poly = hz_bk(k) * catalan(k)
    coeffs = [poly.coeff_monomial(X**g) for g in range(poly.degree() + 1)]
    for c in coeffs:
        if c.q != 1:
            raise ParameterError(f"C_{k} b_{k} has a non-integer coefficient {c}")
    return MomentPolynomial(tuple(int(c) for c in coeffs))


def hz_sequence(k_max: int, n: int) -> List[Fraction]:
    """[b_0, ..., b_{k_max}] for a numeric N"""
    state = HZState(n).extend(max(k_max, 1))
    return state.values[: k_max + 1]


def hz_generating_check(n: int, s_grid: Sequence, k_trunc: int = 40) -> float:
    """
    Largest residual of the exponential generating function

        ((1 + s)/(1 - s))^N = 1 + sum_{k>=0} b_k (2Ns)^{k+1}/(k+1)!

    truncated after k = k_trunc, evaluated in exact rationals for each s.
    The series must have settled: the ratio of the last two terms has to
    be below 1/2, otherwise a ParameterError names a usable s_max.
    """
    if n < 1:
        raise ParameterError(f"N must be >= 1, got {n}")
    if k_trunc < 1:
        raise ParameterError(f"k_trunc must be >= 1, got {k_trunc}")
    b = hz_sequence(k_trunc + 1, n)
    # term_{k+1}/term_k = (b_{k+1}/b_k) 2Ns/(k+2)
    growth = b[k_trunc + 1] / b[k_trunc] * 2 * n / (k_trunc + 2)
    s_max = Fraction(1, 2) / growth
    worst = Fraction(0)
    for s in s_grid:
        s = _as_fraction(s)
        if not 0 <= s < 1:
            raise DomainError(f"s must lie in [0, 1), got {s}")
        if s >= s_max:
            raise ParameterError(
                f"Series truncated at k={k_trunc} has not converged at s={float(s)}; "
                f"use s < {float(s_max):.6g} or a larger k_trunc"
            )
        closed = ((1 + s) / (1 - s)) ** n
        power, factorial, series = Fraction(1), 1, Fraction(1)
        for k in range(k_trunc + 1):
            power *= 2 * n * s
            factorial *= k + 1
            series += b[k] * power / factorial
        worst = max(worst, abs(series - closed))
    logger.debug(f"Generating-function check N={n}: max residual {float(worst):.3e}")
    return float(worst)
