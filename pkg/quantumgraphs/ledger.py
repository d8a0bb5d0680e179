"""Exact query accounting shared by every algorithm run."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any


class Counter(StrEnum):
    """The two ledger counters: searching for a minimum, or updating tables."""

    SEARCH = "search"
    UPDATE = "update"


@dataclass(slots=True)
class QueryLedger:
    """Single-owner counters for one algorithm run.

    ``phase_breakdown`` is keyed ``"<counter>:<label>"`` so the per-phase
    entries of each counter always sum to that counter.
    """

    search_queries: int = 0
    update_queries: int = 0
    phase_breakdown: dict[str, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        """Return search plus update queries."""
        return self.search_queries + self.update_queries

    def charge(
        self, counter: Counter, amount: int = 1, *, label: str | None = None
    ) -> None:
        """Add *amount* queries to *counter* and to its phase entry."""
        if amount < 0:
            raise ValueError(f"Ledger charges cannot be negative: {amount}")
        if amount == 0:
            return
        counter = Counter(counter)
        if counter is Counter.SEARCH:
            self.search_queries += amount
        else:
            self.update_queries += amount
        key = f"{counter.value}:{label or counter.value}"
        self.phase_breakdown[key] = self.phase_breakdown.get(key, 0) + amount

    def counter_total(self, counter: Counter) -> int:
        """Return the value of one counter."""
        if Counter(counter) is Counter.SEARCH:
            return self.search_queries
        return self.update_queries

    def phase_total(self, label: str) -> int:
        """Return the charge booked under *label* across both counters."""
        return sum(
            count
            for key, count in self.phase_breakdown.items()
            if key.split(":", 1)[1] == label
        )

    def merge(self, other: QueryLedger) -> None:
        """Fold *other* into this ledger; merging is associative."""
        self.search_queries += other.search_queries
        self.update_queries += other.update_queries
        for key, count in other.phase_breakdown.items():
            self.phase_breakdown[key] = self.phase_breakdown.get(key, 0) + count

    def is_consistent(self) -> bool:
        """Return whether the breakdown sums to the counters."""
        search = sum(
            count
            for key, count in self.phase_breakdown.items()
            if key.startswith(f"{Counter.SEARCH.value}:")
        )
        update = sum(
            count
            for key, count in self.phase_breakdown.items()
            if key.startswith(f"{Counter.UPDATE.value}:")
        )
        return search == self.search_queries and update == self.update_queries

    def as_dict(self) -> dict[str, Any]:
        """Return a JSON-friendly snapshot."""
        return {
            "search_queries": self.search_queries,
            "update_queries": self.update_queries,
            "total": self.total,
            "phase_breakdown": dict(sorted(self.phase_breakdown.items())),
        }
