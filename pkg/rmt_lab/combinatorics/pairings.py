"""
Pairings of [n]: enumeration, non-crossing tests and genus
"""
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from rmt_lab.core.errors import InputError


@dataclass(frozen=True)
class Pairing:
    """
    Perfect matching of {1..n}, stored as a 0-based involution

    partner[i] is the 0-based element paired with i.
    """

    partner: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "partner", tuple(int(p) for p in self.partner))
        n = len(self.partner)
        for i, p in enumerate(self.partner):
            if not 0 <= p < n or p == i or self.partner[p] != i:
                raise InputError(f"Not a fixed-point-free involution: {self.partner}")

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[int, int]], n: Optional[int] = None) -> "Pairing":
        """Build from 1-based pairs, e.g. [(1, 3), (2, 4)]"""
        n = n if n is not None else 2 * len(pairs)
        partner = [-1] * n
        for i, j in pairs:
            if not (1 <= i <= n and 1 <= j <= n) or partner[i - 1] != -1 or partner[j - 1] != -1:
                raise InputError(f"Invalid pair ({i}, {j}) for n = {n}")
            partner[i - 1], partner[j - 1] = j - 1, i - 1
        if -1 in partner:
            raise InputError("Pairs do not cover every element")
        return cls(tuple(partner))

    @property
    def n(self) -> int:
        return len(self.partner)

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        """1-based pairs (i, j), i < j, sorted by i"""
        return [(i + 1, p + 1) for i, p in enumerate(self.partner) if i < p]

    def __str__(self):
        return "".join(f"({i},{j})" for i, j in self.pairs)


def _pairings(elements: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not elements:
        yield []
        return
    first = elements[0]
    for idx in range(1, len(elements)):
        rest = elements[1:idx] + elements[idx + 1 :]
        for tail in _pairings(rest):
            yield [(first, elements[idx])] + tail


def _nc_pairings(elements: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not elements:
        yield []
        return
    first = elements[0]
    # The partner must leave an even number of points on each side
    for idx in range(1, len(elements), 2):
        for inner in _nc_pairings(elements[1:idx]):
            for outer in _nc_pairings(elements[idx + 1 :]):
                yield [(first, elements[idx])] + inner + outer


def _to_pairing(n: int, pairs: List[Tuple[int, int]]) -> Pairing:
    partner = [0] * n
    for a, b in pairs:
        partner[a], partner[b] = b, a
    return Pairing(tuple(partner))


def enumerate_pairings(n: int) -> Iterator[Pairing]:
    """All (n-1)!! pairings of [n]; the smallest unpaired element picks its partner"""
    if n < 0 or n % 2:
        return
    for pairs in _pairings(list(range(n))):
        yield _to_pairing(n, pairs)


def enumerate_nc_pairings(n: int) -> Iterator[Pairing]:
    """All C_{n/2} non-crossing pairings of [n], generated directly"""
    if n < 0 or n % 2:
        return
    for pairs in _nc_pairings(list(range(n))):
        yield _to_pairing(n, pairs)


def crossing_quadruple(pairing: Pairing) -> Optional[Tuple[int, int, int, int]]:
    """A 1-based witness p1 < q1 < p2 < q2 with (p1 p2), (q1 q2) in the pairing, if any"""
    pairs = pairing.pairs
    for a, (p1, p2) in enumerate(pairs):
        for q1, q2 in pairs[a + 1 :]:
            if p1 < q1 < p2 < q2:
                return p1, q1, p2, q2
    return None


def is_noncrossing(pairing: Pairing) -> bool:
    """True iff no crossing quadruple exists"""
    return crossing_quadruple(pairing) is None


def is_noncrossing_by_reduction(pairing: Pairing) -> bool:
    """
    Repeatedly remove pairs of neighbours; non-crossing iff nothing remains

    Neighbours are taken cyclically among the remaining points, so the first
    and last remaining points also count as neighbours.
    """
    remaining = list(range(pairing.n))
    while remaining:
        size = len(remaining)
        for idx in range(size):
            a, b = remaining[idx], remaining[(idx + 1) % size]
            if pairing.partner[a] == b:
                remaining = [x for x in remaining if x not in (a, b)]
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class GenusInfo:
    cycles: int
    genus: int


def cycles_of_gamma_pi(partner: Sequence[int]) -> int:
    """Number of cycles of gamma o pi, gamma the long cycle (1 2 ... m)"""
    m = len(partner)
    seen = [False] * m
    cycles = 0
    for start in range(m):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = (partner[i] + 1) % m
    return cycles


def genus(pairing: Pairing) -> GenusInfo:
    """
    Cycle count #(gamma pi) and genus g = (m/2 + 1 - #(gamma pi)) / 2

    g = 0 exactly for non-crossing pairings.
    """
    m = pairing.n
    if m == 0:
        return GenusInfo(cycles=1, genus=0)
    cycles = cycles_of_gamma_pi(pairing.partner)
    twice_genus = m // 2 + 1 - cycles
    return GenusInfo(cycles=cycles, genus=twice_genus // 2)
