"""
Exact determinants over QQ and the Catalan Hankel matrices
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import sympy
from sympy.polys.matrices import DomainMatrix

from rmt_lab.combinatorics.catalan import catalan
from rmt_lab.config import config
from rmt_lab.core.errors import BudgetExceededError, ParameterError

logger = logging.getLogger(__name__)


def _to_rational(value) -> sympy.Rational:
    value = Fraction(value) if not isinstance(value, Fraction) else value
    return sympy.Rational(value.numerator, value.denominator)


def exact_det(rows: Sequence[Sequence]) -> Fraction:
    """
    Determinant of a square matrix of ints/Fractions, computed exactly

    Fraction-free elimination in sympy's QQ domain; the empty matrix has
    determinant 1.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ParameterError("Determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    matrix = DomainMatrix.from_Matrix(sympy.Matrix([[_to_rational(v) for v in r] for r in rows])).convert_to(
        sympy.QQ
    )
    value = sympy.QQ.to_sympy(matrix.det())
    return Fraction(int(value.p), int(value.q))


def catalan_hankel(n: int) -> List[List[int]]:
    """M_n = (C_{i+j})_{i,j=0..n}"""
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    return [[catalan(i + j) for j in range(n + 1)] for i in range(n + 1)]


def catalan_hankel_det(n: int, max_n: Optional[int] = None) -> int:
    """det M_n as an exact integer (always 1)"""
    max_n = config.budgets.hankel_max_n if max_n is None else max_n
    if n > max_n:
        raise BudgetExceededError(f"Hankel order {n} exceeds the budget {max_n}")
    det = exact_det(catalan_hankel(n))
    if det.denominator != 1:
        raise ParameterError(f"Integer matrix gave a non-integer determinant {det}")
    return int(det)
