"""Single-source shortest paths on complete and complete bipartite graphs.

Each algorithm follows its pseudocode line by line; minimum searches go
through a MinFinder and table updates through the graph oracle, so the
ledger reflects the chosen cost model. Initialisation reads (the λ(v) ←
ν(v₀,v) loop) sit outside the per-iteration work being measured and are
not charged.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import GraphValidationError
from .graph import BipartiteGraph, CompleteGraph
from .ledger import Counter, QueryLedger
from .min_search import FinderMode, MinFinder
from .util import result_checksum

_LOGGER = logging.getLogger(__name__)

PART_V1 = 1
PART_V2 = 2


@dataclass(frozen=True, slots=True)
class PathTable:
    """Shortest distances λ and predecessors M from one source.

    ``order`` lists vertices in the order they were settled, source first.
    """

    source: int
    distances: tuple[float, ...]
    pred: tuple[int | None, ...]
    order: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.distances)

    def checksum(self) -> str:
        """Digest of the distance table."""
        return result_checksum(self.distances)


class BipartiteVertex(NamedTuple):
    """A vertex of a bipartite graph: part (1 or 2) and index inside it."""

    part: int
    index: int


@dataclass(frozen=True, slots=True)
class BipartitePathTable:
    """Distances λ₁ over V₁ and λ₂ over V₂ from a source in V₁.

    ``via1[w]`` is the (u ∈ V₁, v ∈ V₂) pair through which w was last
    reached; ``pred2[u]`` is the V₁ vertex preceding u ∈ V₂.
    """

    source: int
    distances1: tuple[float, ...]
    distances2: tuple[float, ...]
    via1: tuple[tuple[int, int] | None, ...]
    pred2: tuple[int | None, ...]
    order: tuple[int, ...]
    filled_v2: bool
    working_entries: int

    def checksum(self) -> str:
        """Digest of both distance tables."""
        return result_checksum((*self.distances1, "|", *self.distances2))


def _prepare(g: CompleteGraph, v0: int) -> int:
    g.require_complete()
    return g.check_vertex(v0)


def _log_run(name: str, n: int, ledger: QueryLedger) -> None:
    _LOGGER.debug(
        "%s finished: n=%d search=%d update=%d",
        name,
        n,
        ledger.search_queries,
        ledger.update_queries,
    )


def _table(
    v0: int, lam: np.ndarray, pred: np.ndarray, order: list[int]
) -> PathTable:
    return PathTable(
        source=v0,
        distances=tuple(float(x) for x in lam),
        pred=tuple(None if p < 0 else int(p) for p in pred),
        order=tuple(order),
    )


def _initial_state(
    g: CompleteGraph, v0: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Start tables: λ(v₀)=0, λ(v)=ν(v₀,v), M(v)=v₀, S={v₀}."""
    lam = np.array(g.weights[v0], dtype=np.float64)
    lam[v0] = 0.0
    pred = np.full(g.n, v0, dtype=np.intp)
    pred[v0] = -1
    settled = np.zeros(g.n, dtype=bool)
    settled[v0] = True
    return lam, pred, settled


def dijkstra_classic(
    g: CompleteGraph, v0: int, mode: FinderMode, ledger: QueryLedger
) -> PathTable:
    """Dijkstra's algorithm: search V−S for the minimum λ, then relax."""
    v0 = _prepare(g, v0)
    finder = MinFinder(mode)
    lam, pred, settled = _initial_state(g, v0)
    order = [v0]

    while not settled.all():
        outside = np.flatnonzero(~settled)
        found = finder.find_min(lam[outside], ledger, label="select")
        w = int(outside[found.index])
        settled[w] = True
        order.append(w)

        rest = outside[outside != w]
        if rest.size:
            candidate = lam[w] + g.weights_from(
                w, rest, ledger, Counter.UPDATE, label="relax"
            )
            improved = candidate < lam[rest]
            lam[rest[improved]] = candidate[improved]
            pred[rest[improved]] = w

    _log_run("dijkstra_classic", g.n, ledger)
    return _table(v0, lam, pred, order)


def dijkstra_no_update(
    g: CompleteGraph, v0: int, mode: FinderMode, ledger: QueryLedger
) -> PathTable:
    """Dijkstra without updating: each step searches S×(V−S) for λ(w)+ν(w,v)."""
    v0 = _prepare(g, v0)
    finder = MinFinder(mode)
    lam = np.full(g.n, math.inf)
    lam[v0] = 0.0
    pred = np.full(g.n, -1, dtype=np.intp)
    settled = np.zeros(g.n, dtype=bool)
    settled[v0] = True
    order = [v0]

    while not settled.all():
        inside = np.flatnonzero(settled)
        outside = np.flatnonzero(~settled)
        keys = lam[inside][:, None] + g.weights[np.ix_(inside, outside)]
        found = finder.find_min(keys, ledger, label="pair")
        row, col = divmod(found.index, outside.size)
        w, v = int(inside[row]), int(outside[col])
        settled[v] = True
        lam[v] = found.key
        pred[v] = w
        order.append(v)

    _log_run("dijkstra_no_update", g.n, ledger)
    return _table(v0, lam, pred, order)


def dijkstra_periodic(
    g: CompleteGraph, v0: int, k: int, mode: FinderMode, ledger: QueryLedger
) -> PathTable:
    """Dijkstra with periodic updating every k settlements.

    T holds the vertices whose updates are pending (always including v₀).
    Between flushes λ of outside vertices may be stale upper bounds; the
    T×(V−S) search covers the difference.
    """
    if k < 1:
        raise GraphValidationError(f"flush period k must be at least 1, got {k}")
    v0 = _prepare(g, v0)
    if k > g.n:
        _LOGGER.warning("Flush period k=%d exceeds n=%d; no mid-run flush", k, g.n)
    finder = MinFinder(mode)
    lam, pred, settled = _initial_state(g, v0)
    pending = [v0]
    order = [v0]

    while not settled.all():
        outside = np.flatnonzero(~settled)
        tset = np.array(pending, dtype=np.intp)
        pair_keys = lam[tset][:, None] + g.weights[np.ix_(tset, outside)]
        pair = finder.find_min(pair_keys, ledger, label="pair")
        row, col = divmod(pair.index, outside.size)
        best = finder.find_min(lam[outside], ledger, label="select")

        if pair.key <= best.key:
            chosen = int(outside[col])
            lam[chosen] = pair.key
            pred[chosen] = int(tset[row])
        else:
            chosen = int(outside[best.index])
        settled[chosen] = True
        pending.append(chosen)
        order.append(chosen)

        if len(pending) >= k:
            _flush(g, finder, ledger, lam, pred, settled, pending, label="flush")
            pending = [v0]

    _log_run("dijkstra_periodic", g.n, ledger)
    return _table(v0, lam, pred, order)


def _flush(
    g: CompleteGraph,
    finder: MinFinder,
    ledger: QueryLedger,
    lam: np.ndarray,
    pred: np.ndarray,
    settled: np.ndarray,
    pending: list[int],
    *,
    label: str,
) -> None:
    """Flush: relax every outside vertex against T."""
    rest = np.flatnonzero(~settled)
    if not rest.size:
        return
    tset = np.array(pending, dtype=np.intp)
    keys = lam[tset][:, None] + g.weights[np.ix_(tset, rest)]
    winners, best = finder.find_min_columns(
        keys, ledger, counter=Counter.UPDATE, label=label
    )
    improved = best < lam[rest]
    lam[rest[improved]] = best[improved]
    pred[rest[improved]] = tset[winners[improved]]


def bipartite_partial(
    g: BipartiteGraph,
    v0: int,
    mode: FinderMode,
    ledger: QueryLedger,
    *,
    fill_v2: bool = True,
) -> BipartitePathTable:
    """Shortest paths from v₀ ∈ V₁ updating only V₁ distances.

    V₂ vertices serve as intermediate hops; their distances are filled in
    by a final pass unless *fill_v2* is False.
    """
    if not 0 <= int(v0) < g.n1:
        raise GraphValidationError(f"source {v0} is not in V1 (0..{g.n1 - 1})")
    v0 = int(v0)
    finder = MinFinder(mode)
    n1, n2 = g.n1, g.n2
    w1, w2 = g.weights1, g.weights2

    # The settled set starts as {v₀} in V₁.
    lam1 = np.full(n1, math.inf)
    lam1[v0] = 0.0
    via_u = np.full(n1, -1, dtype=np.intp)
    via_v = np.full(n1, -1, dtype=np.intp)
    settled = np.zeros(n1, dtype=bool)
    settled[v0] = True
    order = [v0]

    # λ₁(v) ← min over w ∈ V₂ of ν₁(v₀,w)+ν₂(w,v)
    rest = np.flatnonzero(~settled)
    if rest.size:
        keys = w1[v0][:, None] + w2[:, rest]
        hops, best = finder.find_min_columns(keys, ledger, label="init")
        lam1[rest] = best
        via_u[rest] = v0
        via_v[rest] = hops

    # settle V₁ through the S₁×V₂×(V₁−S₁) search, then relax through the new vertex
    while not settled.all():
        inside = np.flatnonzero(settled)
        outside = np.flatnonzero(~settled)
        keys = (
            lam1[inside][:, None, None]
            + w1[inside][:, :, None]
            + w2[:, outside][None, :, :]
        )
        found = finder.find_min(keys, ledger, label="triple")
        a, remainder = divmod(found.index, n2 * outside.size)
        hop, c = divmod(remainder, outside.size)
        u, w = int(inside[a]), int(outside[c])
        settled[w] = True
        lam1[w] = found.key
        via_u[w], via_v[w] = u, hop
        order.append(w)

        rest = np.flatnonzero(~settled)
        if rest.size:
            keys = lam1[w] + w1[w][:, None] + w2[:, rest]
            hops, best = finder.find_min_columns(
                keys, ledger, counter=Counter.UPDATE, label="relax"
            )
            improved = best < lam1[rest]
            lam1[rest[improved]] = best[improved]
            via_u[rest[improved]] = w
            via_v[rest[improved]] = hops[improved]

    # λ₂(u) ← min over w ∈ V₁ of λ₁(w)+ν₁(w,u)
    lam2 = np.full(n2, math.inf)
    pred2 = np.full(n2, -1, dtype=np.intp)
    if fill_v2:
        keys = lam1[:, None] + w1
        pred2, lam2 = finder.find_min_columns(keys, ledger, label="fill")

    _log_run("bipartite_partial", n1 + n2, ledger)
    return BipartitePathTable(
        source=v0,
        distances1=tuple(float(x) for x in lam1),
        distances2=tuple(float(x) for x in lam2),
        via1=tuple(
            None if u < 0 else (int(u), int(v))
            for u, v in zip(via_u, via_v, strict=True)
        ),
        pred2=tuple(None if p < 0 else int(p) for p in pred2),
        order=tuple(order),
        filled_v2=fill_v2,
        # lam1, via_u, via_v and settled
        working_entries=4 * n1,
    )


def reconstruct_path(
    t: PathTable | BipartitePathTable, v: int | BipartiteVertex
) -> list[int] | list[BipartiteVertex]:
    """Return the recorded shortest path from the source to *v*.

    For bipartite tables *v* is a BipartiteVertex (or a (part, index)
    tuple) and the returned path alternates V₁ and V₂ vertices.
    """
    if isinstance(t, BipartitePathTable):
        return _reconstruct_bipartite(t, BipartiteVertex(*v))

    target = int(v)
    if not 0 <= target < t.n:
        raise GraphValidationError(f"vertex {v} out of range 0..{t.n - 1}")
    path = [target]
    while path[-1] != t.source:
        step = t.pred[path[-1]]
        if step is None or len(path) > t.n:
            raise GraphValidationError(f"vertex {v} is not reachable from the source")
        path.append(step)
    path.reverse()
    return path


def _reconstruct_bipartite(
    t: BipartitePathTable, vertex: BipartiteVertex
) -> list[BipartiteVertex]:
    n1, n2 = len(t.distances1), len(t.distances2)
    if vertex.part == PART_V2:
        if not 0 <= vertex.index < n2:
            raise GraphValidationError(f"V2 vertex {vertex.index} out of range")
        if not t.filled_v2:
            raise GraphValidationError("V2 distances were not filled for this table")
        previous = t.pred2[vertex.index]
        if previous is None:
            raise GraphValidationError(f"V2 vertex {vertex.index} is not reachable")
        return [*_reconstruct_bipartite(t, BipartiteVertex(PART_V1, previous)), vertex]
    if vertex.part != PART_V1 or not 0 <= vertex.index < n1:
        raise GraphValidationError(f"vertex {tuple(vertex)} out of range")

    path: list[BipartiteVertex] = [vertex]
    current = vertex.index
    while current != t.source:
        step = t.via1[current]
        if step is None or len(path) > 2 * n1:
            raise GraphValidationError(f"V1 vertex {vertex.index} is not reachable")
        u, hop = step
        path.append(BipartiteVertex(PART_V2, hop))
        path.append(BipartiteVertex(PART_V1, u))
        current = u
    path.reverse()
    return path
