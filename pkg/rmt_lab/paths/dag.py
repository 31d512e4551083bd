"""
Gessel-Viennot (Lindstrom) lemma on weighted acyclic graphs

For sources a_1..a_n and sinks b_1..b_n,
    det(m(a_i, b_j)) = sum over vertex-disjoint path systems of sgn(sigma) prod m(P_i)
where m(a, b) sums the edge-weight products of all directed a -> b paths.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from rmt_lab.config import config
from rmt_lab.core.errors import BudgetExceededError, InputError, ParameterError
from rmt_lab.paths.determinants import exact_det
from rmt_lab.paths.walks import permutation_sign

logger = logging.getLogger(__name__)

Vertex = Hashable
Path = Tuple[Vertex, ...]


@dataclass
class WeightedDag:
    """Directed graph with edge weights; construction fails on a directed cycle"""

    edges: Dict[Tuple[Vertex, Vertex], object]
    vertices: List[Vertex] = field(default_factory=list)

    def __post_init__(self):
        self.successors: Dict[Vertex, List[Vertex]] = {}
        graph: Dict[Vertex, set] = {v: set() for v in self.vertices}
        for (u, v) in self.edges:
            self.successors.setdefault(u, []).append(v)
            graph.setdefault(u, set())
            graph.setdefault(v, set()).add(u)
        try:
            # predecessors first
            self.order: List[Vertex] = list(TopologicalSorter(graph).static_order())
        except CycleError as e:
            raise InputError(f"Graph has a directed cycle: {e.args[1]}") from e
        self.vertices = self.order
        self._position = {v: i for i, v in enumerate(self.order)}

    def weight(self, u: Vertex, v: Vertex):
        return self.edges[(u, v)]

    def path_weights_from(self, source: Vertex) -> Dict[Vertex, object]:
        """m(source, v) for every v, by dynamic programming in topological order"""
        if source not in self._position:
            raise InputError(f"Unknown vertex {source!r}")
        m: Dict[Vertex, object] = {source: 1}
        for u in self.order[self._position[source]:]:
            if u not in m:
                continue
            for v in self.successors.get(u, []):
                m[v] = m.get(v, 0) + m[u] * self.weight(u, v)
        return m

    def paths(self, source: Vertex, target: Vertex, limit: Optional[int] = None) -> List[Path]:
        """Every directed source -> target path, as vertex tuples"""
        limit = config.budgets.max_path_count if limit is None else limit
        reach = self.path_weights_from(source)
        if target not in reach:
            return []
        found: List[Path] = []
        stack: List[Path] = [(source,)]
        while stack:
            path = stack.pop()
            tail = path[-1]
            if tail == target:
                found.append(path)
                if len(found) > limit:
                    raise BudgetExceededError(f"More than {limit} paths from {source!r} to {target!r}")
                continue
            for v in self.successors.get(tail, []):
                if self._position[v] <= self._position[target]:
                    stack.append(path + (v,))
        return found

    def path_weight(self, path: Path):
        w = 1
        for u, v in zip(path, path[1:]):
            w = w * self.weight(u, v)
        return w


def _check_tuples(sources: Sequence, sinks: Sequence) -> None:
    if len(sources) != len(sinks):
        raise ParameterError("Need as many sinks as sources")


def gv_path_weights(dag: WeightedDag, sources: Sequence, sinks: Sequence) -> List[List]:
    _check_tuples(sources, sinks)
    rows = []
    for a in sources:
        m = dag.path_weights_from(a)
        rows.append([m.get(b, 0) for b in sinks])
    return rows


def gv_determinant(dag: WeightedDag, sources: Sequence, sinks: Sequence) -> Fraction:
    return exact_det(gv_path_weights(dag, sources, sinks))


def gv_vertex_disjoint_sum(dag: WeightedDag, sources: Sequence, sinks: Sequence) -> Fraction:
    """
    Signed weight of all vertex-disjoint path systems, by exhaustive search

    Source i is matched to sink sigma(i); systems that share any vertex
    (endpoints included) are skipped.
    """
    _check_tuples(sources, sinks)
    n = len(sources)
    if n > config.budgets.gv_max_paths:
        raise BudgetExceededError(f"{n} paths exceed the disjoint-system budget {config.budgets.gv_max_paths}")
    options = [[dag.paths(a, b) for b in sinks] for a in sources]
    total = Fraction(0)

    def extend(i: int, used: frozenset, sigma: Tuple[int, ...], weight):
        nonlocal total
        if i == n:
            total += permutation_sign(sigma) * Fraction(weight)
            return
        for j in range(n):
            if j in sigma:
                continue
            for path in options[i][j]:
                vertices = frozenset(path)
                if vertices & used:
                    continue
                extend(i + 1, used | vertices, sigma + (j,), weight * dag.path_weight(path))

    extend(0, frozenset(), (), 1)
    return total


def catalan_lattice_dag(n: int) -> Tuple[WeightedDag, List[Vertex], List[Vertex]]:
    """
    Up/down lattice above the axis with unit weights

    Vertices (x, y), y >= 0, edges (x, y) -> (x+1, y+-1). Sources
    a_i = (-2i, 0) and sinks b_j = (2j, 0), i, j = 0..n, so that
    m(a_i, b_j) is the number of Dyck paths of length 2(i+j), i.e. C_{i+j}.
    """
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    edges = {}
    for x in range(-2 * n, 2 * n):
        for y in range(0, 2 * n + 1):
            if (x + y) % 2:
                continue
            edges[((x, y), (x + 1, y + 1))] = 1
            if y > 0:
                edges[((x, y), (x + 1, y - 1))] = 1
    sources = [(-2 * i, 0) for i in range(n + 1)]
    sinks = [(2 * j, 0) for j in range(n + 1)]
    return WeightedDag(edges, vertices=sources + sinks), sources, sinks


def random_dag(rng: np.random.Generator, size: int, density: float = 0.4, max_weight: int = 3) -> WeightedDag:
    """Edges only from lower to higher label, so the graph is acyclic"""
    if size < 1 or not 0 <= density <= 1:
        raise ParameterError("Need size >= 1 and density in [0, 1]")
    edges = {}
    for u in range(size):
        for v in range(u + 1, size):
            if rng.random() < density:
                edges[(u, v)] = int(rng.integers(1, max_weight + 1))
    return WeightedDag(edges, vertices=list(range(size)))
