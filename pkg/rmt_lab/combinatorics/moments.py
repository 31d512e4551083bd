"""
Exact GUE moments by summing over pairings (genus expansion)
"""
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from rmt_lab.combinatorics.catalan import double_factorial_odd
from rmt_lab.config import config
from rmt_lab.core.errors import BudgetExceededError, InputError, ParameterError

logger = logging.getLogger(__name__)

# Pairings of up to this many points are expanded into one numpy block
BLOCK_ORDER = 14


@dataclass(frozen=True)
class MomentPolynomial:
    """sum_g c_g N^(-2g) with nonnegative integer coefficients"""

    genus_coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.genus_coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if any(c < 0 for c in coeffs):
            raise InputError(f"Genus coefficients must be nonnegative: {coeffs}")
        object.__setattr__(self, "genus_coeffs", tuple(coeffs))

    def evaluate(self, n) -> Fraction:
        """Exact value at a numeric N"""
        x = Fraction(1) / (Fraction(n) ** 2)
        return sum((c * x**g for g, c in enumerate(self.genus_coeffs)), Fraction(0))

    @property
    def leading(self) -> int:
        return self.genus_coeffs[0] if self.genus_coeffs else 0

    def total(self) -> int:
        return sum(self.genus_coeffs)

    def to_dict(self) -> Dict[str, List[int]]:
        return {"genus_coeffs": list(self.genus_coeffs)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "MomentPolynomial":
        data = json.loads(text)
        if "genus_coeffs" not in data:
            raise InputError("Missing 'genus_coeffs'")
        return cls(tuple(data["genus_coeffs"]))

    def __str__(self):
        terms = [f"{c}" if g == 0 else f"{c}*N^-{2 * g}" for g, c in enumerate(self.genus_coeffs) if c]
        return " + ".join(terms) or "0"


@lru_cache(maxsize=None)
def _template(r: int) -> np.ndarray:
    """All pairings of range(2r) as rows of partner indices"""
    if r == 0:
        return np.zeros((1, 0), dtype=np.int16)
    sub = _template(r - 1)
    blocks = []
    for j in range(1, 2 * r):
        rest = np.array([p for p in range(1, 2 * r) if p != j], dtype=np.int16)
        block = np.empty((sub.shape[0], 2 * r), dtype=np.int16)
        block[:, 0] = j
        block[:, j] = 0
        block[:, rest] = rest[sub]
        blocks.append(block)
    return np.concatenate(blocks)


def pairing_blocks(m: int, block_order: int = BLOCK_ORDER) -> Iterator[np.ndarray]:
    """
    Every pairing of range(m) exactly once, as (B, m) partner arrays

    The first elements choose partners one at a time until at most
    block_order points remain; those are filled in from a cached template.
    """

    def expand(fixed: Dict[int, int], remaining: List[int]) -> Iterator[np.ndarray]:
        if len(remaining) <= block_order:
            t = _template(len(remaining) // 2)
            rem = np.array(remaining, dtype=np.int16)
            block = np.empty((t.shape[0], m), dtype=np.int16)
            for a, b in fixed.items():
                block[:, a] = b
            if rem.size:
                block[:, rem] = rem[t]
            yield block
            return
        first = remaining[0]
        for idx in range(1, len(remaining)):
            j = remaining[idx]
            yield from expand({**fixed, first: j, j: first}, remaining[1:idx] + remaining[idx + 1 :])

    yield from expand({}, list(range(m)))


def cycle_counts(partners: np.ndarray) -> np.ndarray:
    """#(gamma pi) for every row of a (B, m) partner array"""
    b, m = partners.shape
    step = (partners.astype(np.int64) + 1) % m
    rows = np.arange(b)[:, None]
    current = np.broadcast_to(np.arange(m), (b, m)).copy()
    orbit_min = current.copy()
    for _ in range(m - 1):
        current = step[rows, current]
        np.minimum(orbit_min, current, out=orbit_min)
    # Each cycle is counted once, at its smallest element
    return np.sum(orbit_min == np.arange(m), axis=1)


def genus_distribution(m: int) -> List[int]:
    """epsilon_g(m/2): number of pairings of [m] of each genus"""
    if m == 0:
        return [1]
    k = m // 2
    counts = np.zeros(k // 2 + 1, dtype=np.int64)
    for block in pairing_blocks(m):
        genera = (k + 1 - cycle_counts(block)) // 2
        counts += np.bincount(genera, minlength=counts.size)[: counts.size]
    return [int(c) for c in counts]


def gue_moment_exact(m: int, max_order: Optional[int] = None) -> MomentPolynomial:
    """
    E[tr A^m] for normalized GUE as an exact polynomial in N^-2

    Sums N^(#(gamma pi) - m/2 - 1) over all (m-1)!! pairings. Odd moments
    vanish and give the zero polynomial.

    Args:
        m: Moment order (>= 0)
        max_order: Largest m allowed (default from config)

    Returns:
        MomentPolynomial whose genus-0 coefficient is the Catalan number C_{m/2}
    """
    if m < 0:
        raise ParameterError(f"Moment order must be >= 0, got {m}")
    limit = max_order or config.budgets.max_pairing_order
    if m > limit:
        raise BudgetExceededError(f"Moment order {m} exceeds the pairing budget m <= {limit}")
    if m % 2:
        return MomentPolynomial(())
    total = double_factorial_odd(m)
    if total > config.budgets.max_pairing_count:
        raise BudgetExceededError(f"(m-1)!! = {total} pairings exceed max_pairing_count")
    logger.debug(f"Enumerating {total} pairings for m={m}")
    return MomentPolynomial(tuple(genus_distribution(m)))


def monte_carlo_trace_moments(spec, orders: Sequence[int], trials: int, threads: Optional[int] = None):
    """
    Per-trial values of tr A^m for each requested order

    Returns:
        Dict order -> array of per-trial normalized traces
    """
    from rmt_lab.core.monte_carlo import run_trials
    from rmt_lab.ensembles.samplers import sample

    def one(trial: int) -> List[float]:
        a = sample(spec, trial).operator()
        out, power, done = [], np.eye(a.shape[0], dtype=a.dtype), 0
        for m in sorted(orders):
            power = power @ np.linalg.matrix_power(a, m - done)
            done = m
            out.append(float(np.real(np.trace(power))) / a.shape[0])
        return out

    values = np.array(run_trials(one, trials, threads))
    return {m: values[:, i] for i, m in enumerate(sorted(orders))}
