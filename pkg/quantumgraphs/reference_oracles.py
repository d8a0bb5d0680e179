"""Slow ground-truth implementations for tests and the verify command.

Nothing here touches a ledger or a minimum finder; these are plain,
deliberately naive code paths kept separate from the algorithms they check.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from itertools import combinations

import numpy as np

from .const import BRUTE_FORCE_MAX_N, SPANNING_TREE_ENUMERATION_MAX_N
from .errors import OracleLimitError
from .graph import BipartiteGraph, CompleteGraph
from .shortest_paths import PathTable
from .spanning_tree import Edge, TreeResult


class _DisjointSet:
    """Union-find over 0..n-1 with path halving."""

    def __init__(self, n: int) -> None:
        self._parent = list(range(n))

    def root(self, x: int) -> int:
        while self._parent[x] != x:
            self._parent[x] = self._parent[self._parent[x]]
            x = self._parent[x]
        return x

    def join(self, a: int, b: int) -> bool:
        ra, rb = self.root(a), self.root(b)
        if ra == rb:
            return False
        self._parent[ra] = rb
        return True


def floyd_warshall(g: CompleteGraph | BipartiteGraph) -> np.ndarray:
    """Return the all-pairs distance matrix.

    Bipartite graphs are first converted to their n₁+n₂ vertex digraph, so
    V₂ vertex j sits at row/column n₁+j.
    """
    if isinstance(g, BipartiteGraph):
        g = g.as_digraph()
    dist = np.array(g.weights, dtype=np.float64)
    for k in range(g.n):
        np.minimum(dist, dist[:, k, None] + dist[None, k, :], out=dist)
    dist.flags.writeable = False
    return dist


def oracle_diameter(g: CompleteGraph) -> float:
    """Return the largest entry of the Floyd–Warshall matrix."""
    return float(floyd_warshall(g).max())


def kruskal_mst(g: CompleteGraph) -> TreeResult:
    """Return a minimum spanning tree found by Kruskal's algorithm.

    Edges are taken in (weight, u, v) order, so with distinct weights the
    result is the unique minimum tree.
    """
    g.require_symmetric()
    candidates = sorted(
        (float(g.weights[u, v]), u, v)
        for u, v in combinations(range(g.n), 2)
        if math.isfinite(g.weights[u, v])
    )
    forest = _DisjointSet(g.n)
    edges: list[Edge] = []
    for w, u, v in candidates:
        if forest.join(u, v):
            edges.append((u, v))
            if len(edges) == g.n - 1:
                break
    return TreeResult(
        edges=tuple(edges),
        total_weight=math.fsum(float(g.weights[u, v]) for u, v in edges),
    )


def brute_force_paths(
    g: CompleteGraph, v0: int, max_n: int = BRUTE_FORCE_MAX_N
) -> PathTable:
    """Return exact distances from *v0* by enumerating every simple path."""
    if g.n > max_n:
        raise OracleLimitError(f"brute force is limited to n <= {max_n}, got {g.n}")
    v0 = g.check_vertex(v0)
    best = [math.inf] * g.n
    best_path: list[list[int] | None] = [None] * g.n
    best[v0] = 0.0
    best_path[v0] = [v0]

    def extend(path: list[int], length: float) -> None:
        tail = path[-1]
        for nxt in range(g.n):
            if nxt in path:
                continue
            total = length + float(g.weights[tail, nxt])
            candidate = [*path, nxt]
            if total < best[nxt]:
                best[nxt] = total
                best_path[nxt] = candidate
            extend(candidate, total)

    extend([v0], 0.0)
    pred = tuple(p[-2] if p is not None and len(p) > 1 else None for p in best_path)
    order = tuple(sorted(range(g.n), key=lambda v: (best[v], v)))
    return PathTable(source=v0, distances=tuple(best), pred=pred, order=order)


def spanning_trees(n: int) -> Iterator[tuple[Edge, ...]]:
    """Yield every spanning tree of the complete graph on n vertices."""
    for edges in combinations(combinations(range(n), 2), n - 1):
        forest = _DisjointSet(n)
        if all(forest.join(u, v) for u, v in edges):
            yield edges


def exhaustive_mst(
    g: CompleteGraph, max_n: int = SPANNING_TREE_ENUMERATION_MAX_N
) -> TreeResult:
    """Return the lightest of all nⁿ⁻² spanning trees of a symmetric graph."""
    if g.n > max_n:
        raise OracleLimitError(
            f"spanning tree enumeration is limited to n <= {max_n}, got {g.n}"
        )
    g.require_symmetric()
    best: TreeResult | None = None
    for edges in spanning_trees(g.n):
        weight = math.fsum(float(g.weights[u, v]) for u, v in edges)
        if best is None or weight < best.total_weight:
            best = TreeResult(edges=edges, total_weight=weight)
    assert best is not None
    return best
