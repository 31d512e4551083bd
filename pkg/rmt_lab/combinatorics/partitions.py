"""
Set partitions, kernels of multi-indices and their graphs
"""
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from rmt_lab.combinatorics.pairings import Pairing
from rmt_lab.config import config
from rmt_lab.core.errors import BudgetExceededError, InputError


@dataclass(frozen=True)
class Partition:
    """Partition of {1..n} into blocks, kept in canonical order (by least element)"""

    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(not b for b in blocks):
            raise InputError("Partition blocks must be nonempty")
        elements = [x for b in blocks for x in b]
        if sorted(elements) != list(range(1, len(elements) + 1)):
            raise InputError(f"Blocks do not partition 1..n: {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_of(self) -> Dict[int, int]:
        """Element (1-based) -> block index"""
        return {x: idx for idx, b in enumerate(self.blocks) for x in b}


def kernel_of_index(index: Sequence[int]) -> Partition:
    """ker i: positions p, q share a block iff i_p = i_q"""
    classes: Dict[int, List[int]] = defaultdict(list)
    for position, value in enumerate(index, start=1):
        classes[value].append(position)
    return Partition(tuple(tuple(c) for c in classes.values()))


def enumerate_partitions(n: int, max_order: Optional[int] = None) -> Iterator[Partition]:
    """All Bell(n) partitions of [n], via restricted growth strings"""
    limit = max_order or config.budgets.max_partition_order
    if n > limit:
        raise BudgetExceededError(f"Partition scans are limited to n <= {limit}")
    if n == 0:
        yield Partition(())
        return
    labels = [0] * n

    def grow(position: int, used: int) -> Iterator[Partition]:
        if position == n:
            blocks: Dict[int, List[int]] = defaultdict(list)
            for element, label in enumerate(labels, start=1):
                blocks[label].append(element)
            yield Partition(tuple(tuple(b) for b in blocks.values()))
            return
        for label in range(used + 1):
            labels[position] = label
            yield from grow(position + 1, max(used, label + 1))

    labels[0] = 0
    yield from grow(1, 1)


def partition_graph(sigma: Partition) -> Tuple[int, Set[FrozenSet[int]]]:
    """
    Graph on the blocks with an edge per consecutive (cyclic) pair of positions

    Multi-edges collapse; a loop is kept as a one-element edge set.

    Returns:
        (number of vertices, set of edges)
    """
    owner = sigma.block_of()
    m = sigma.n
    edges = {frozenset((owner[k], owner[k % m + 1])) for k in range(1, m + 1)}
    return len(sigma.blocks), edges


def graph_is_tree(sigma: Partition) -> bool:
    """Connected and #V = #E + 1 (a loop counts as an edge)"""
    vertices, edges = partition_graph(sigma)
    if vertices != len(edges) + 1:
        return False
    adjacency: Dict[int, Set[int]] = defaultdict(set)
    for e in edges:
        a, *rest = tuple(e)
        b = rest[0] if rest else a
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == vertices


def walk_edges(sigma: Partition) -> List[FrozenSet[int]]:
    """Edge used by each step k -> k+1 of the closed walk on the blocks"""
    owner = sigma.block_of()
    m = sigma.n
    return [frozenset((owner[k], owner[k % m + 1])) for k in range(1, m + 1)]


def uses_each_edge_twice(sigma: Partition) -> bool:
    counts: Dict[FrozenSet[int], int] = defaultdict(int)
    for e in walk_edges(sigma):
        counts[e] += 1
    return all(c == 2 for c in counts.values())


def count_tree_partitions(m: int) -> int:
    """#{sigma in P(m): G_sigma a tree walked through each edge exactly twice}"""
    return sum(1 for s in enumerate_partitions(m) if graph_is_tree(s) and uses_each_edge_twice(s))


def tree_partition_to_pairing(sigma: Partition) -> Pairing:
    """
    Non-crossing pairing of the walk steps: the two steps over one edge are paired

    Raises:
        InputError: if sigma is not a tree walked through each edge twice
    """
    if not (graph_is_tree(sigma) and uses_each_edge_twice(sigma)):
        raise InputError("Partition does not describe a doubly traversed tree")
    first_use: Dict[FrozenSet[int], int] = {}
    partner = [0] * sigma.n
    for step, e in enumerate(walk_edges(sigma)):
        if e in first_use:
            partner[step], partner[first_use[e]] = first_use[e], step
        else:
            first_use[e] = step
    return Pairing(tuple(partner))
