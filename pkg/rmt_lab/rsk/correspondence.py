"""
Robinson-Schensted correspondence by row insertion

P is the insertion tableau and Q the recording tableau: sigma(k) is row
inserted into P and k is written into Q at the cell the insertion created.
With this convention (4,2,3,6,5,1,7) maps to
    P = [[1,3,5,7],[2,6],[4]],  Q = [[1,3,4,7],[2,5],[6]].
"""
import logging
from bisect import bisect_left
from typing import List, Sequence, Tuple

from rmt_lab.core.errors import InputError
from rmt_lab.rsk.tableaux import YoungTableau

logger = logging.getLogger(__name__)


def validate_permutation(sigma: Sequence[int]) -> Tuple[int, ...]:
    """One-line notation of a permutation of 1..n, as a tuple"""
    try:
        values = tuple(int(v) for v in sigma)
    except (TypeError, ValueError) as e:
        raise InputError(f"Permutation entries must be integers: {e}") from e
    if sorted(values) != list(range(1, len(values) + 1)):
        raise InputError(f"Not a permutation of 1..{len(values)}: {values}")
    return values


def row_insert(rows: List[List[int]], value: int) -> int:
    """
    Schensted row insertion, in place

    value bumps the smallest entry larger than itself into the next row;
    returns the index of the row that grew.
    """
    r = 0
    while True:
        if r == len(rows):
            rows.append([value])
            return r
        row = rows[r]
        c = bisect_left(row, value)
        if c == len(row):
            row.append(value)
            return r
        row[c], value = value, row[c]
        r += 1


def rsk(sigma: Sequence[int]) -> Tuple[YoungTableau, YoungTableau]:
    """
    Insertion and recording tableaux of a permutation

    Args:
        sigma: One-line notation (sigma(1), ..., sigma(n))

    Returns:
        (P, Q), standard tableaux of the same shape
    """
    values = validate_permutation(sigma)
    p_rows: List[List[int]] = []
    q_rows: List[List[int]] = []
    for k, v in enumerate(values, start=1):
        r = row_insert(p_rows, v)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(k)
    return YoungTableau(tuple(map(tuple, p_rows))), YoungTableau(tuple(map(tuple, q_rows)))


def rsk_inverse(p: YoungTableau, q: YoungTableau) -> Tuple[int, ...]:
    """
    Permutation of a pair of standard tableaux of equal shape

    The largest recording entry marks the cell created last; its P entry
    is reverse-bumped up to the first row, which releases sigma(n).
    """
    if p.shape != q.shape:
        raise InputError(f"Tableaux have different shapes {p.shape} and {q.shape}")
    if not (p.is_standard() and q.is_standard()):
        raise InputError("Both tableaux must be standard")
    p_rows = p.to_list()
    q_rows = q.to_list()
    n = p.size
    sigma = [0] * n
    for k in range(n, 0, -1):
        r = next(i for i, row in enumerate(q_rows) if row and row[-1] == k)
        q_rows[r].pop()
        value = p_rows[r].pop()
        for above in range(r - 1, -1, -1):
            row = p_rows[above]
            # largest entry smaller than value
            c = bisect_left(row, value) - 1
            row[c], value = value, row[c]
        sigma[k - 1] = value
        if not q_rows[r]:
            q_rows.pop(r)
            p_rows.pop(r)
    return tuple(sigma)
