"""Pluggable minimum/maximum finding with exact query accounting.

A search receives every candidate key at once (the simulation evaluates them
in bulk) and charges the ledger according to the finder's cost model:

* classical: one query per candidate;
* ideal-quantum: ⌈√N⌉ queries;
* dh-sim: the threshold-descent procedure of Dürr and Høyer, charging
  ⌈(π/4)·√(N/|B|)⌉ per improvement and ⌈(π/4)·√N⌉ for the final,
  unsuccessful search.

Every mode returns a true minimum. Classical and ideal-quantum break ties
toward the smallest flat index; dh-sim may return any minimal index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum
from typing import NamedTuple

import numpy as np
from numpy.typing import ArrayLike

from .errors import EmptyCandidateSetError
from .ledger import Counter, QueryLedger
from .util import ceil_sqrt


class FinderKind(StrEnum):
    """Cost model used by a minimum finder."""

    CLASSICAL = "classical"
    IDEAL_QUANTUM = "ideal-quantum"
    DH_SIM = "dh-sim"


@dataclass(frozen=True, slots=True)
class FinderMode:
    """A cost model plus, for dh-sim, the seed of its random stream."""

    kind: FinderKind
    seed: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", FinderKind(self.kind))
        if self.kind is FinderKind.DH_SIM and self.seed is None:
            object.__setattr__(self, "seed", 0)

    @classmethod
    def classical(cls) -> FinderMode:
        """Return the classical scan mode."""
        return cls(FinderKind.CLASSICAL)

    @classmethod
    def ideal_quantum(cls) -> FinderMode:
        """Return the idealized ⌈√N⌉ mode."""
        return cls(FinderKind.IDEAL_QUANTUM)

    @classmethod
    def dh_sim(cls, seed: int = 0) -> FinderMode:
        """Return the simulated Dürr–Høyer mode."""
        return cls(FinderKind.DH_SIM, seed)

    @property
    def is_deterministic(self) -> bool:
        """Return whether charges depend only on candidate-set sizes."""
        return self.kind is not FinderKind.DH_SIM

    def derive(self, salt: int) -> FinderMode:
        """Return an independent dh-sim stream for *salt*; other modes unchanged."""
        if self.kind is not FinderKind.DH_SIM:
            return self
        state = np.random.SeedSequence((self.seed, salt)).generate_state(
            1, dtype=np.uint64
        )
        return FinderMode(self.kind, int(state[0]))


class Found(NamedTuple):
    """Result of a search: flat candidate index and its key."""

    index: int
    key: float


class Descent(NamedTuple):
    """A dh-sim run: winning index, query charge and thresholds visited."""

    index: int
    charge: int
    visited: tuple[int, ...]


def _grover_charge(size: int, marked: int) -> int:
    """Return ⌈(π/4)·√(size/marked)⌉."""
    return math.ceil(math.pi / 4 * math.sqrt(size / marked))


def deterministic_charge(kind: FinderKind, size: int) -> int:
    """Return the charge of one search over *size* candidates.

    Only defined for the classical and ideal-quantum models.
    """
    if size < 1:
        raise EmptyCandidateSetError("cannot search an empty candidate set")
    if kind is FinderKind.CLASSICAL:
        return size
    if kind is FinderKind.IDEAL_QUANTUM:
        return ceil_sqrt(size)
    raise ValueError("dh-sim charges are random variables")


class MinFinder:
    """Minimum finder bound to one run; owns the dh-sim random stream."""

    def __init__(self, mode: FinderMode) -> None:
        self.mode = mode
        self._rng = (
            np.random.Generator(np.random.PCG64(mode.seed))
            if mode.kind is FinderKind.DH_SIM
            else None
        )

    def _dh_descent(self, keys: np.ndarray) -> Descent:
        """Run the threshold descent over *keys* without touching a ledger."""
        assert self._rng is not None
        size = keys.size
        threshold = int(self._rng.integers(size))
        visited = [threshold]
        charge = 0
        while True:
            below = np.flatnonzero(keys < keys[threshold])
            if below.size == 0:
                break
            charge += _grover_charge(size, below.size)
            threshold = int(below[self._rng.integers(below.size)])
            visited.append(threshold)
        charge += _grover_charge(size, 1)
        return Descent(threshold, charge, tuple(visited))

    def trace_max(self, keys: ArrayLike) -> Descent:
        """Run a dh-sim maximum search and report every threshold it held.

        Nothing is charged; callers that price each outer query differently (the
        diameter outer loop) book the charge themselves.
        """
        if self.mode.kind is not FinderKind.DH_SIM:
            raise ValueError("threshold traces exist only in dh-sim mode")
        flat = np.asarray(keys, dtype=np.float64).ravel()
        if flat.size == 0:
            raise EmptyCandidateSetError("cannot search an empty candidate set")
        return self._dh_descent(-flat)

    def find_min(
        self,
        keys: ArrayLike,
        ledger: QueryLedger,
        *,
        counter: Counter = Counter.SEARCH,
        label: str | None = None,
    ) -> Found:
        """Return a candidate with minimal key and charge *ledger*.

        Multi-dimensional key arrays are searched in row-major order and the
        flat index is returned.
        """
        flat = np.asarray(keys, dtype=np.float64).ravel()
        return self._find_min_flat(flat, flat, ledger, counter, label)

    def find_max(
        self,
        keys: ArrayLike,
        ledger: QueryLedger,
        *,
        counter: Counter = Counter.SEARCH,
        label: str | None = None,
    ) -> Found:
        """Return a candidate with maximal key by searching the negated keys."""
        flat = np.asarray(keys, dtype=np.float64).ravel()
        return self._find_min_flat(-flat, flat, ledger, counter, label)

    def find_min_columns(
        self,
        keys: np.ndarray,
        ledger: QueryLedger,
        *,
        counter: Counter = Counter.SEARCH,
        label: str | None = None,
    ) -> tuple[np.ndarray, np.ndarray]:
        """Run one independent search per column of a 2-D key table.

        Returns the winning row index and key for every column. A table with
        no columns performs no search and charges nothing.
        """
        table = np.asarray(keys, dtype=np.float64)
        rows, cols = table.shape
        if cols == 0:
            return np.empty(0, dtype=np.intp), np.empty(0, dtype=np.float64)
        if rows == 0:
            raise EmptyCandidateSetError("cannot search an empty candidate set")

        if self.mode.kind is FinderKind.DH_SIM:
            winners = np.empty(cols, dtype=np.intp)
            for col in range(cols):
                column = np.ascontiguousarray(table[:, col])
                winners[col] = self._find_min_flat(
                    column, column, ledger, counter, label
                ).index
        else:
            winners = np.argmin(table, axis=0)
            ledger.charge(
                counter,
                cols * deterministic_charge(self.mode.kind, rows),
                label=label,
            )
        return winners, table[winners, np.arange(cols)]

    def _find_min_flat(
        self,
        search_keys: np.ndarray,
        original: np.ndarray,
        ledger: QueryLedger,
        counter: Counter,
        label: str | None,
    ) -> Found:
        size = search_keys.size
        if size == 0:
            raise EmptyCandidateSetError("cannot search an empty candidate set")

        if self.mode.kind is FinderKind.DH_SIM:
            index, charge, _ = self._dh_descent(search_keys)
        else:
            index = int(np.argmin(search_keys))
            charge = deterministic_charge(self.mode.kind, size)

        ledger.charge(counter, charge, label=label)
        return Found(index, float(original[index]))


def find_min(
    candidates: ArrayLike,
    mode: FinderMode,
    ledger: QueryLedger,
    *,
    counter: Counter = Counter.SEARCH,
    label: str | None = None,
) -> Found:
    """One-shot minimum search with a fresh finder for *mode*."""
    return MinFinder(mode).find_min(candidates, ledger, counter=counter, label=label)


def find_max(
    candidates: ArrayLike,
    mode: FinderMode,
    ledger: QueryLedger,
    *,
    counter: Counter = Counter.SEARCH,
    label: str | None = None,
) -> Found:
    """One-shot maximum search with a fresh finder for *mode*."""
    return MinFinder(mode).find_max(candidates, ledger, counter=counter, label=label)
