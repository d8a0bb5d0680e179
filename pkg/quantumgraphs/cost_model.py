"""Predicted query charges for the deterministic finder modes.

In classical and ideal-quantum mode a search over N candidates always
costs the same, so every algorithm's ledger is a function of its sizes
alone. These predictions replay only the candidate-set sizes and must
agree exactly with a measured ledger.
"""

from __future__ import annotations

from typing import NamedTuple

from .const import (
    ALGO_BIPARTITE,
    ALGO_DIAMETER,
    ALGO_DIJKSTRA_CLASSIC,
    ALGO_DIJKSTRA_NO_UPDATE,
    ALGO_DIJKSTRA_PERIODIC,
    ALGO_PRIM_CLASSIC,
    ALGO_PRIM_NO_UPDATE,
    ALGO_PRIM_PERIODIC,
    DEFAULT_DIAMETER_INNER,
    PERIODIC_ALGORITHMS,
)
from .errors import RunConfigError
from .min_search import FinderKind, deterministic_charge
from .util import ceil_sqrt


class PredictedCost(NamedTuple):
    """Predicted search and update charges."""

    search: int
    update: int

    @property
    def total(self) -> int:
        return self.search + self.update


def _classic(kind: FinderKind, n: int) -> PredictedCost:
    search = update = 0
    for settled in range(1, n):
        search += deterministic_charge(kind, n - settled)
        update += n - settled - 1
    return PredictedCost(search, update)


def _no_update(kind: FinderKind, n: int) -> PredictedCost:
    search = sum(
        deterministic_charge(kind, settled * (n - settled)) for settled in range(1, n)
    )
    return PredictedCost(search, 0)


def _periodic(kind: FinderKind, n: int, k: int) -> PredictedCost:
    search = update = 0
    pending = 1
    for settled in range(1, n):
        outside = n - settled
        search += deterministic_charge(kind, pending * outside)
        search += deterministic_charge(kind, outside)
        pending += 1
        if pending >= k:
            if outside > 1:
                update += (outside - 1) * deterministic_charge(kind, pending)
            pending = 1
    return PredictedCost(search, update)


def _bipartite(kind: FinderKind, n1: int, n2: int, fill_v2: bool) -> PredictedCost:
    search = update = 0
    if n1 > 1:
        search += (n1 - 1) * deterministic_charge(kind, n2)
    for settled in range(1, n1):
        search += deterministic_charge(kind, settled * n2 * (n1 - settled))
        remaining = n1 - settled - 1
        if remaining:
            update += remaining * deterministic_charge(kind, n2)
    if fill_v2:
        search += n2 * deterministic_charge(kind, n1)
    return PredictedCost(search, update)


def predicted_cost(
    algorithm: str,
    mode: FinderKind | str,
    n: int | None = None,
    k: int | None = None,
    *,
    n1: int | None = None,
    n2: int | None = None,
    fill_v2: bool = True,
    inner: str = DEFAULT_DIAMETER_INNER,
) -> PredictedCost:
    """Return the exact charge of one run in a deterministic mode.

    *k* is the flush period of a periodic algorithm (or of a periodic
    diameter inner loop) and defaults to ⌈√n⌉.
    """
    kind = FinderKind(mode)
    if kind is FinderKind.DH_SIM:
        raise RunConfigError("dh-sim charges are random and cannot be predicted")

    if algorithm == ALGO_BIPARTITE:
        if n1 is None or n2 is None:
            raise RunConfigError("bipartite predictions need n1 and n2")
        return _bipartite(kind, n1, n2, fill_v2)

    if n is None or n < 1:
        raise RunConfigError(f"prediction needs a vertex count n >= 1, got {n}")

    if algorithm in (ALGO_DIJKSTRA_CLASSIC, ALGO_PRIM_CLASSIC):
        return _classic(kind, n)
    if algorithm in (ALGO_DIJKSTRA_NO_UPDATE, ALGO_PRIM_NO_UPDATE):
        return _no_update(kind, n)
    if algorithm in PERIODIC_ALGORITHMS:
        return _periodic(kind, n, k if k is not None else ceil_sqrt(n))
    if algorithm == ALGO_DIAMETER:
        per_source = predicted_cost(inner, kind, n, k)
        outer_queries = n if kind is FinderKind.CLASSICAL else ceil_sqrt(n)
        return PredictedCost(
            outer_queries * per_source.search, outer_queries * per_source.update
        )
    raise RunConfigError(f"unknown algorithm {algorithm!r}")


def floyd_warshall_cost(n: int) -> int:
    """Return the n³ relaxations of Floyd–Warshall."""
    return n**3


def repeated_dijkstra_cost(n: int) -> int:
    """Return n classical Dijkstra runs, Σ(2(n−i)−1) queries each."""
    return n * sum(2 * (n - i) - 1 for i in range(1, n))


__all__ = [
    "PredictedCost",
    "floyd_warshall_cost",
    "predicted_cost",
    "repeated_dijkstra_cost",
]
