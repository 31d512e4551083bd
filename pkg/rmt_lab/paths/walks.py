"""
Karlin-McGregor formula for nearest-neighbour random walks on Z

n independent walkers start at x_1 > ... > x_n and make t steps of +-1;
at site i a walker steps up with probability p_i and down with q_i = 1 - p_i.
The determinant det(P_t(x_i, y_j)) equals the signed sum, over target
permutations, of the probabilities that the walkers never share a site
at the same time. For targets y_1 > ... > y_n and starts of equal parity
only the identity survives and the determinant is the probability of
the non-crossing event.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Tuple, Union

from rmt_lab.config import config
from rmt_lab.core.errors import BudgetExceededError, ParameterError
from rmt_lab.paths.determinants import exact_det

logger = logging.getLogger(__name__)

UpLaw = Union[Fraction, Dict[int, Fraction]]


def permutation_sign(perm: Tuple[int, ...]) -> int:
    """Sign of a permutation of 0..n-1 from its inversion count"""
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class WalkSpec:
    """Starts, targets, horizon and the up-step law (one value or per site)"""

    starts: Tuple[int, ...]
    ends: Tuple[int, ...]
    horizon: int
    up: UpLaw = Fraction(1, 2)
    default_up: Fraction = field(default=Fraction(1, 2))

    def __post_init__(self):
        object.__setattr__(self, "starts", tuple(int(x) for x in self.starts))
        object.__setattr__(self, "ends", tuple(int(y) for y in self.ends))
        if len(self.starts) != len(self.ends) or not self.starts:
            raise ParameterError("Need as many targets as starts (at least one)")
        if any(a <= b for a, b in zip(self.starts, self.starts[1:])):
            raise ParameterError(f"Starts must be strictly decreasing: {self.starts}")
        if len(set(self.ends)) != len(self.ends):
            raise ParameterError(f"Targets must be distinct: {self.ends}")
        if self.horizon < 0:
            raise ParameterError(f"Horizon must be >= 0, got {self.horizon}")
        if self.horizon > config.budgets.km_max_horizon:
            raise BudgetExceededError(f"Horizon {self.horizon} exceeds the budget {config.budgets.km_max_horizon}")
        laws = self.up.values() if isinstance(self.up, dict) else [self.up]
        if any(not 0 <= Fraction(p) <= 1 for p in laws):
            raise ParameterError("Step probabilities must lie in [0, 1]")

    @property
    def n(self) -> int:
        return len(self.starts)

    def up_probability(self, site: int) -> Fraction:
        if isinstance(self.up, dict):
            return Fraction(self.up.get(site, self.default_up))
        return Fraction(self.up)


def _step_distribution(spec: WalkSpec, dist: Dict[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for site, mass in dist.items():
        p = spec.up_probability(site)
        if p:
            out[site + 1] = out.get(site + 1, Fraction(0)) + mass * p
        if p != 1:
            out[site - 1] = out.get(site - 1, Fraction(0)) + mass * (1 - p)
    return out


def single_walk_distribution(spec: WalkSpec, start: int) -> Dict[int, Fraction]:
    """Law of one walker after spec.horizon steps"""
    dist = {start: Fraction(1)}
    for _ in range(spec.horizon):
        dist = _step_distribution(spec, dist)
    return dist


def transition_matrix(spec: WalkSpec) -> List[List[Fraction]]:
    """P_t(x_i, y_j); entries vanish for parity-unreachable pairs"""
    rows = []
    for x in spec.starts:
        dist = single_walk_distribution(spec, x)
        rows.append([dist.get(y, Fraction(0)) for y in spec.ends])
    return rows


def km_determinant(spec: WalkSpec) -> Fraction:
    return exact_det(transition_matrix(spec))


def _joint_walk(spec: WalkSpec, strict_order: bool) -> Dict[Tuple[int, ...], Fraction]:
    """
    Joint law of the walkers restricted to never sharing a site

    With strict_order the walkers must also keep x_1 > ... > x_n at every
    time. States that can no longer reach any target are dropped.
    """
    budget = config.budgets.max_path_count
    states: Dict[Tuple[int, ...], Fraction] = {spec.starts: Fraction(1)}
    for step in range(spec.horizon):
        remaining = spec.horizon - step - 1
        nxt: Dict[Tuple[int, ...], Fraction] = {}
        for positions, mass in states.items():
            moves: List[List[Tuple[int, Fraction]]] = []
            for x in positions:
                p = spec.up_probability(x)
                options = [(x + 1, p)] if p else []
                if p != 1:
                    options.append((x - 1, 1 - p))
                moves.append([(y, w) for y, w in options if min(abs(y - e) for e in spec.ends) <= remaining])
            for combo in _product(moves):
                new = tuple(y for y, _ in combo)
                if len(set(new)) < len(new):
                    continue
                if strict_order and any(a <= b for a, b in zip(new, new[1:])):
                    continue
                weight = mass
                for _, w in combo:
                    weight *= w
                nxt[new] = nxt.get(new, Fraction(0)) + weight
        if len(nxt) > budget:
            raise BudgetExceededError(f"Joint walk has {len(nxt)} live states, budget {budget}")
        states = nxt
    return states


def _product(options: List[List]):
    if not options:
        yield ()
        return
    for head in options[0]:
        for tail in _product(options[1:]):
            yield (head,) + tail


def _check_walkers(spec: WalkSpec) -> None:
    if spec.n > config.budgets.km_max_walkers:
        raise BudgetExceededError(f"{spec.n} walkers exceed the enumeration budget {config.budgets.km_max_walkers}")


def km_enumerate(spec: WalkSpec) -> Fraction:
    """
    Signed sum over target permutations sigma of
    sgn(sigma) P(walkers never meet, walker i ends at y_sigma(i))

    computed from the exact joint law, independently of any determinant.
    """
    _check_walkers(spec)
    final = _joint_walk(spec, strict_order=False)
    index = {y: j for j, y in enumerate(spec.ends)}
    total = Fraction(0)
    for positions, mass in final.items():
        if all(y in index for y in positions):
            total += permutation_sign(tuple(index[y] for y in positions)) * mass
    return total


def noncrossing_probability(spec: WalkSpec) -> Fraction:
    """P(x_1(s) > ... > x_n(s) for all s and walker i ends at y_i)"""
    _check_walkers(spec)
    return _joint_walk(spec, strict_order=True).get(spec.ends, Fraction(0))


def km_brute_force(spec: WalkSpec) -> Fraction:
    """Same signed sum by listing every tuple of step sequences (tiny cases only)"""
    _check_walkers(spec)
    if spec.n * spec.horizon > 16:
        raise BudgetExceededError("Brute-force path enumeration is limited to n * t <= 16")
    index = {y: j for j, y in enumerate(spec.ends)}
    total = Fraction(0)
    for steps in _product([[1, -1]] * (spec.n * spec.horizon)):
        positions = list(spec.starts)
        weight = Fraction(1)
        ok = True
        for s in range(spec.horizon):
            for i in range(spec.n):
                move = steps[i * spec.horizon + s]
                p = spec.up_probability(positions[i])
                weight *= p if move == 1 else 1 - p
                positions[i] += move
            if len(set(positions)) < spec.n:
                ok = False
                break
        if ok and weight and all(y in index for y in positions):
            total += permutation_sign(tuple(index[y] for y in positions)) * weight
    return total
