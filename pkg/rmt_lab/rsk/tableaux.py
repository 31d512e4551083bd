"""
Young tableaux, partitions and the standard-tableau census
"""
import json
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from rmt_lab.config import config
from rmt_lab.core.errors import BudgetExceededError, InputError, ParameterError

logger = logging.getLogger(__name__)

Shape = Tuple[int, ...]


@dataclass(frozen=True)
class YoungTableau:
    """
    Rows of a tableau, top row first

    Rows increase left to right, columns increase top to bottom and row
    lengths are weakly decreasing. Construction fails with InputError
    otherwise.
    """

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(not row for row in rows):
            raise InputError("Tableau rows must be non-empty")
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
            raise InputError(f"Row lengths must be weakly decreasing, got {self.shape}")
        for r, row in enumerate(rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InputError(f"Row {r} is not increasing: {row}")
            if r and any(row[c] <= rows[r - 1][c] for c in range(len(row))):
                raise InputError(f"Column violation between rows {r - 1} and {r}")

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def first_row_length(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def is_standard(self) -> bool:
        """Entries are exactly 1..n"""
        return sorted(v for row in self.rows for v in row) == list(range(1, self.size + 1))

    def position(self, value: int) -> Tuple[int, int]:
        for r, row in enumerate(self.rows):
            if value in row:
                return r, row.index(value)
        raise InputError(f"{value} is not in the tableau")

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_json(cls, text: str) -> "YoungTableau":
        try:
            rows = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"Tableau is not valid JSON: {e}") from e
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise InputError("Tableau JSON must be an array of rows")
        return cls(tuple(tuple(r) for r in rows))


def partitions(n: int, largest: Optional[int] = None) -> Iterator[Shape]:
    """Partitions of n in reverse lexicographic order, (n) first"""
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _corners(shape: Shape) -> List[int]:
    """Rows whose last cell can be removed leaving a partition"""
    return [r for r in range(len(shape)) if r == len(shape) - 1 or shape[r] > shape[r + 1]]


def standard_tableaux(shape: Sequence[int]) -> Iterator[YoungTableau]:
    """
    Every standard tableau of the given shape

    The largest entry sits in a corner, so removing it recursively lists
    all fillings.
    """
    shape = tuple(int(s) for s in shape)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(s <= 0 for s in shape):
        raise InputError(f"Not a partition: {shape}")

    def fill(current: Shape) -> Iterator[List[List[int]]]:
        n = sum(current)
        if n == 0:
            yield [[] for _ in shape]
            return
        for r in _corners(current):
            smaller = current[:r] + (current[r] - 1,) + current[r + 1:]
            smaller = tuple(s for s in smaller if s)
            for rows in fill(smaller):
                grown = [list(row) for row in rows]
                grown[r].append(n)
                yield grown

    for rows in fill(shape):
        yield YoungTableau(tuple(tuple(row) for row in rows if row))


@dataclass
class TableauCensus:
    """Number of standard tableaux of every shape of size n"""

    n: int
    counts: Dict[Shape, int]

    @property
    def square_sum(self) -> int:
        return sum(c * c for c in self.counts.values())

    @property
    def holds(self) -> bool:
        """sum over shapes of (#Tab)^2 equals n!"""
        return self.square_sum == math.factorial(self.n)

    def to_rows(self) -> List[List]:
        return [["shape", "count"]] + [[" ".join(map(str, s)), c] for s, c in self.counts.items()]


def tableau_census(n: int, max_n: Optional[int] = None) -> TableauCensus:
    """
    Count standard tableaux shape by shape by listing them

    Args:
        n: Size (0 <= n <= census budget)
        max_n: Override of config.budgets.census_max_n

    Returns:
        TableauCensus; census.holds is checked and logged
    """
    max_n = config.budgets.census_max_n if max_n is None else max_n
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if n > max_n:
        raise BudgetExceededError(f"Census of size {n} exceeds the budget {max_n}")
    counts = {shape: sum(1 for _ in standard_tableaux(shape)) for shape in partitions(n)}
    census = TableauCensus(n=n, counts=counts)
    if census.holds:
        logger.info(f"Tableau census n={n}: {len(counts)} shapes, sum of squares {census.square_sum} = {n}!")
    else:
        logger.error(f"Tableau census n={n}: sum of squares {census.square_sum} != {math.factorial(n)}")
    return census
