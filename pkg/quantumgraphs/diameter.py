"""Graph diameter as an outer maximum over single-source eccentricities.

Any settlement-order shortest-path algorithm can serve as the inner loop;
its last settled vertex is the one farthest from the source. The outer
maximum is always computed exactly. Only the way the outer search is
charged depends on the finder mode:

* classical: every eccentricity is evaluated and every inner ledger merged;
* ideal-quantum: ⌈√n⌉ outer queries, each priced at the rounded-up mean inner cost;
* dh-sim: the threshold descent over eccentricities, each of its queries
  priced at the rounded-up mean inner cost of the start vertices it visited.

Every mode computes all n eccentricities. The descent samples uniformly among
the start vertices strictly better than its threshold and stops only when none
remain, which needs every key. The mean inner cost counts each visited start
vertex once.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .const import (
    ALGO_DIJKSTRA_NO_UPDATE,
    ALGO_DIJKSTRA_PERIODIC,
    PERIODIC_ALGORITHMS,
    SHORTEST_PATH_ALGORITHMS,
)
from .errors import GraphValidationError
from .graph import CompleteGraph
from .ledger import Counter, QueryLedger
from .min_search import FinderKind, FinderMode, MinFinder
from .shortest_paths import (
    PathTable,
    dijkstra_classic,
    dijkstra_no_update,
    dijkstra_periodic,
)
from .util import ceil_div, ceil_sqrt

_LOGGER = logging.getLogger(__name__)

OUTER_LABEL = "outer"


@dataclass(frozen=True, slots=True)
class InnerAlgorithm:
    """Shortest-path algorithm used for each eccentricity.

    ``k`` applies to the periodic variant only; None means ⌈√n⌉.
    """

    algorithm: str = ALGO_DIJKSTRA_PERIODIC
    k: int | None = None

    def __post_init__(self) -> None:
        if self.algorithm not in SHORTEST_PATH_ALGORITHMS:
            raise GraphValidationError(
                f"inner algorithm must be one of {SHORTEST_PATH_ALGORITHMS}, "
                f"got {self.algorithm!r}"
            )
        if self.k is not None:
            if self.algorithm not in PERIODIC_ALGORITHMS:
                raise GraphValidationError(
                    f"k applies only to periodic inner loops, not {self.algorithm}"
                )
            if self.k < 1:
                raise GraphValidationError(f"inner k must be at least 1, got {self.k}")

    def resolve_k(self, n: int) -> int | None:
        """Return the flush period used on an n-vertex graph."""
        if self.algorithm not in PERIODIC_ALGORITHMS:
            return None
        return self.k if self.k is not None else ceil_sqrt(n)

    def run(
        self, g: CompleteGraph, v0: int, mode: FinderMode, ledger: QueryLedger
    ) -> PathTable:
        """Run the inner algorithm from *v0*."""
        if self.algorithm == ALGO_DIJKSTRA_PERIODIC:
            return dijkstra_periodic(g, v0, self.resolve_k(g.n), mode, ledger)
        if self.algorithm == ALGO_DIJKSTRA_NO_UPDATE:
            return dijkstra_no_update(g, v0, mode, ledger)
        return dijkstra_classic(g, v0, mode, ledger)


@dataclass(frozen=True, slots=True)
class EccentricityRecord:
    """Eccentricity of one start vertex and what its inner run cost."""

    v0: int
    ecc: float
    inner_cost: QueryLedger
    last_settled: int


def eccentricity(
    g: CompleteGraph,
    v0: int,
    inner: InnerAlgorithm,
    mode: FinderMode,
    ledger: QueryLedger,
) -> EccentricityRecord:
    """Return max over v of λ(v₀,v) and fold the inner run into *ledger*."""
    own = QueryLedger()
    table = inner.run(g, v0, mode, own)
    ledger.merge(own)
    return EccentricityRecord(
        v0=table.source,
        ecc=max(table.distances),
        inner_cost=own,
        last_settled=table.order[-1],
    )


def _mean_charge(records: list[EccentricityRecord], counter: Counter) -> int:
    """Return ⌈mean inner charge⌉ of *counter* over *records*."""
    total = sum(r.inner_cost.counter_total(counter) for r in records)
    return ceil_div(total, len(records))


def eccentricities(
    g: CompleteGraph, inner: InnerAlgorithm, mode: FinderMode
) -> list[EccentricityRecord]:
    """Evaluate every start vertex once, each with its own ledger.

    In dh-sim mode each start vertex draws from its own derived stream.
    """
    return [
        eccentricity(g, v0, inner, mode.derive(v0), QueryLedger())
        for v0 in range(g.n)
    ]


def diameter(
    g: CompleteGraph,
    inner: InnerAlgorithm,
    mode: FinderMode,
    ledger: QueryLedger,
) -> float:
    """Return the largest shortest-path distance of *g*."""
    g.require_complete()
    records = eccentricities(g, inner, mode)
    result = max(r.ecc for r in records)

    if mode.kind is FinderKind.CLASSICAL:
        for record in records:
            ledger.merge(record.inner_cost)
        outer_queries = len(records)
    elif mode.kind is FinderKind.IDEAL_QUANTUM:
        outer_queries = ceil_sqrt(g.n)
        for counter in Counter:
            ledger.charge(
                counter,
                outer_queries * _mean_charge(records, counter),
                label=OUTER_LABEL,
            )
    else:
        trace = MinFinder(mode).trace_max([r.ecc for r in records])
        visited = [records[v0] for v0 in dict.fromkeys(trace.visited)]
        outer_queries = trace.charge
        for counter in Counter:
            ledger.charge(
                counter,
                outer_queries * _mean_charge(visited, counter),
                label=OUTER_LABEL,
            )

    _LOGGER.debug(
        "diameter finished: n=%d inner=%s mode=%s outer_queries=%d total=%d",
        g.n,
        inner.algorithm,
        mode.kind,
        outer_queries,
        ledger.total,
    )
    return result
