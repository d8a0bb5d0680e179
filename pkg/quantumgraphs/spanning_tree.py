"""Minimum spanning trees on symmetric complete graphs (Prim variants)."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import GraphValidationError
from .graph import CompleteGraph
from .ledger import Counter, QueryLedger
from .min_search import FinderMode, MinFinder
from .util import result_checksum

_LOGGER = logging.getLogger(__name__)

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the undirected edge with endpoints sorted ascending."""
    return (u, v) if u < v else (v, u)


def tree_weight(g: CompleteGraph, edges: tuple[Edge, ...]) -> float:
    """Return Σ ν(u,v) over *edges*, summed exactly."""
    return math.fsum(float(g.weights[u, v]) for u, v in edges)


@dataclass(frozen=True, slots=True)
class TreeResult:
    """Edge set F of a spanning tree plus the L/M bookkeeping of the run.

    ``edges`` are canonical (sorted endpoints) in the order they joined F;
    ``lowest`` and ``link`` are the final L and M arrays. Kruskal results
    leave both empty.
    """

    edges: tuple[Edge, ...]
    total_weight: float
    lowest: tuple[float, ...] = ()
    link: tuple[int | None, ...] = ()
    order: tuple[int, ...] = ()

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def checksum(self) -> str:
        """Digest of the sorted edge set."""
        return result_checksum(x for edge in sorted(self.edges) for x in edge)


def is_spanning_tree(n: int, edges: tuple[Edge, ...] | frozenset[Edge]) -> bool:
    """Return whether *edges* form an acyclic connected graph on n vertices."""
    if len(edges) != n - 1:
        return False
    parent = list(range(n))

    def root(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = root(u), root(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _prepare(g: CompleteGraph, v0: int) -> int:
    g.require_complete()
    g.require_symmetric()
    return g.check_vertex(v0)


def _initial_state(
    g: CompleteGraph, v0: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Start tables: L(v)=ν(v₀,v), M(v)=v₀, S={v₀}."""
    lowest = np.array(g.weights[v0], dtype=np.float64)
    lowest[v0] = 0.0
    link = np.full(g.n, v0, dtype=np.intp)
    link[v0] = -1
    settled = np.zeros(g.n, dtype=bool)
    settled[v0] = True
    return lowest, link, settled


def _result(
    g: CompleteGraph,
    name: str,
    edges: list[Edge],
    lowest: np.ndarray,
    link: np.ndarray,
    order: list[int],
    ledger: QueryLedger,
) -> TreeResult:
    if not is_spanning_tree(g.n, tuple(edges)):
        raise GraphValidationError(f"{name} produced an invalid spanning tree")
    _LOGGER.debug(
        "%s finished: n=%d search=%d update=%d",
        name,
        g.n,
        ledger.search_queries,
        ledger.update_queries,
    )
    frozen = tuple(edges)
    return TreeResult(
        edges=frozen,
        total_weight=tree_weight(g, frozen),
        lowest=tuple(float(x) for x in lowest),
        link=tuple(None if m < 0 else int(m) for m in link),
        order=tuple(order),
    )


def prim_classic(
    g: CompleteGraph, v0: int, mode: FinderMode, ledger: QueryLedger
) -> TreeResult:
    """Prim's algorithm: pick the outside vertex with least L, then update L."""
    v0 = _prepare(g, v0)
    finder = MinFinder(mode)
    lowest, link, settled = _initial_state(g, v0)
    edges: list[Edge] = []
    order = [v0]

    while not settled.all():
        outside = np.flatnonzero(~settled)
        found = finder.find_min(lowest[outside], ledger, label="select")
        w = int(outside[found.index])
        settled[w] = True
        edges.append(canonical_edge(w, int(link[w])))
        order.append(w)

        rest = outside[outside != w]
        if rest.size:
            candidate = g.weights_from(w, rest, ledger, Counter.UPDATE, label="relax")
            improved = candidate < lowest[rest]
            lowest[rest[improved]] = candidate[improved]
            link[rest[improved]] = w

    return _result(g, "prim_classic", edges, lowest, link, order, ledger)


def prim_no_update(
    g: CompleteGraph, v0: int, mode: FinderMode, ledger: QueryLedger
) -> TreeResult:
    """Prim without updating: each step searches S×(V−S) for the lightest edge."""
    v0 = _prepare(g, v0)
    finder = MinFinder(mode)
    settled = np.zeros(g.n, dtype=bool)
    settled[v0] = True
    link = np.full(g.n, -1, dtype=np.intp)
    lowest = np.full(g.n, math.inf)
    lowest[v0] = 0.0
    edges: list[Edge] = []
    order = [v0]

    while not settled.all():
        inside = np.flatnonzero(settled)
        outside = np.flatnonzero(~settled)
        found = finder.find_min(
            g.weights[np.ix_(inside, outside)], ledger, label="pair"
        )
        row, col = divmod(found.index, outside.size)
        u, v = int(inside[row]), int(outside[col])
        settled[v] = True
        lowest[v] = found.key
        link[v] = u
        edges.append(canonical_edge(u, v))
        order.append(v)

    return _result(g, "prim_no_update", edges, lowest, link, order, ledger)


def prim_periodic(
    g: CompleteGraph, v0: int, k: int, mode: FinderMode, ledger: QueryLedger
) -> TreeResult:
    """Prim with periodic updating of L every k settlements.

    λ and L of the pseudocode are one array here: L is initialised from
    ν(v₀,·) and only L is ever read.
    """
    if k < 1:
        raise GraphValidationError(f"flush period k must be at least 1, got {k}")
    v0 = _prepare(g, v0)
    if k > g.n:
        _LOGGER.warning("Flush period k=%d exceeds n=%d; no mid-run flush", k, g.n)
    finder = MinFinder(mode)
    lowest, link, settled = _initial_state(g, v0)
    pending = [v0]
    edges: list[Edge] = []
    order = [v0]

    while not settled.all():
        outside = np.flatnonzero(~settled)
        tset = np.array(pending, dtype=np.intp)
        pair = finder.find_min(
            g.weights[np.ix_(tset, outside)], ledger, label="pair"
        )
        row, col = divmod(pair.index, outside.size)
        best = finder.find_min(lowest[outside], ledger, label="select")

        # ties settle the L candidate
        if best.key <= pair.key:
            chosen = int(outside[best.index])
            edges.append(canonical_edge(chosen, int(link[chosen])))
        else:
            chosen = int(outside[col])
            edges.append(canonical_edge(int(tset[row]), chosen))
        settled[chosen] = True
        pending.append(chosen)
        order.append(chosen)

        if len(pending) >= k:
            rest = np.flatnonzero(~settled)
            if rest.size:
                tset = np.array(pending, dtype=np.intp)
                winners, nearest = finder.find_min_columns(
                    g.weights[np.ix_(tset, rest)],
                    ledger,
                    counter=Counter.UPDATE,
                    label="flush",
                )
                improved = nearest < lowest[rest]
                lowest[rest[improved]] = nearest[improved]
                link[rest[improved]] = tset[winners[improved]]
            pending = [v0]

    return _result(g, "prim_periodic", edges, lowest, link, order, ledger)
