"""
Longest monotone subsequences and the Erdos-Szekeres theorem
"""
import logging
import math
from bisect import bisect_left
from fractions import Fraction
from itertools import permutations
from typing import List, Optional, Sequence

from rmt_lab.config import config
from rmt_lab.core.errors import BudgetExceededError, ParameterError

logger = logging.getLogger(__name__)


def lis(sigma: Sequence) -> int:
    """
    Length of the longest increasing subsequence, by patience sorting

    piles[i] holds the smallest possible last value of an increasing
    subsequence of length i + 1; the number of piles is the answer.
    """
    piles: List = []
    for v in sigma:
        i = bisect_left(piles, v)
        if i == len(piles):
            piles.append(v)
        else:
            piles[i] = v
    return len(piles)


def lds(sigma: Sequence) -> int:
    """Longest decreasing subsequence: lis under the reversed order"""
    return lis([-v for v in sigma])


def min_sorting_moves(sigma: Sequence) -> int:
    """
    Fewest "take one card out and put it back elsewhere" moves that sort sigma

    A longest increasing subsequence can stay put and every other entry
    must move once, so the answer is n - L_n(sigma).
    """
    return len(sigma) - lis(sigma)


def erdos_szekeres_scan(n: int, max_n: Optional[int] = None) -> int:
    """
    Count permutations of n^2 + 1 without a monotone subsequence of length n + 1

    Permutations are grown one entry at a time while tracking the longest
    increasing and decreasing runs ending at every placed entry. A prefix
    that already contains a monotone subsequence of length n + 1 settles
    its whole subtree, so only prefixes free of one are extended.

    Returns:
        Number of violating permutations (the theorem says 0)
    """
    max_n = config.budgets.es_max_n if max_n is None else max_n
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise BudgetExceededError(f"Erdos-Szekeres scan of S_{n * n + 1} exceeds the budget n <= {max_n}")
    size = n * n + 1
    visited = 0
    violations = 0

    def extend(placed: List[int], inc: List[int], dec: List[int], free: set) -> None:
        nonlocal visited, violations
        visited += 1
        if not free:
            violations += 1
            logger.warning(f"Violating permutation {placed}")
            return
        for v in sorted(free):
            up = 1 + max((inc[i] for i, w in enumerate(placed) if w < v), default=0)
            down = 1 + max((dec[i] for i, w in enumerate(placed) if w > v), default=0)
            if up > n or down > n:
                continue
            free.remove(v)
            extend(placed + [v], inc + [up], dec + [down], free)
            free.add(v)

    extend([], [], [], set(range(1, size + 1)))
    logger.info(f"Erdos-Szekeres n={n}: {visited} prefixes extended over S_{size}, {violations} violation(s)")
    return violations


def expected_lis_exact(n: int, max_n: Optional[int] = None) -> Fraction:
    """E[L_n] under the uniform law on S_n, by listing all n! permutations"""
    max_n = config.budgets.census_max_n if max_n is None else max_n
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise BudgetExceededError(f"Listing S_{n} exceeds the budget n <= {max_n}")
    total = sum(lis(sigma) for sigma in permutations(range(1, n + 1)))
    return Fraction(total, math.factorial(n))
