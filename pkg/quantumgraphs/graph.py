"""Weighted complete and complete-bipartite graphs.

Graphs are dense, immutable weight tables. Every read that an algorithm is
charged for goes through the oracle methods here, which take the run's
ledger and book one query per weight read. Vertices are plain integer
indices; in a bipartite graph each part is indexed from 0.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .const import (
    DEFAULT_WEIGHT_HIGH,
    DEFAULT_WEIGHT_LOW,
    SHAPE_BIPARTITE,
    SHAPE_COMPLETE,
    WEIGHT_GRID_BITS,
)
from .errors import GraphFormatError, GraphValidationError
from .ledger import Counter, QueryLedger
from .util import format_weight, parse_weight, safe_parse_int

_LOGGER = logging.getLogger(__name__)

_SEED_LIMIT = 2**64
_GRID_SCALE = 2.0**-WEIGHT_GRID_BITS


def _freeze_table(table: np.ndarray, name: str) -> np.ndarray:
    """Validate a weight table and return a read-only float64 copy."""
    frozen = np.array(table, dtype=np.float64, copy=True)
    if frozen.ndim != 2:
        raise GraphValidationError(f"{name} must be two-dimensional")
    if np.isnan(frozen).any():
        raise GraphValidationError(f"{name} contains NaN weights")
    if (frozen < 0).any():
        raise GraphValidationError(f"{name} contains negative weights")
    frozen.flags.writeable = False
    return frozen


def _check_vertex(vertex: int, size: int, part: str = "vertex") -> int:
    """Return *vertex* as int or raise when it is outside 0..size-1."""
    index = int(vertex)
    if not 0 <= index < size:
        raise GraphValidationError(f"{part} {vertex} out of range 0..{size - 1}")
    return index


@dataclass(frozen=True, slots=True, eq=False)
class CompleteGraph:
    """Directed complete graph on vertices 0..n-1 with a dense weight table.

    The diagonal is stored as 0 and is never readable through the oracle.
    """

    weights: np.ndarray

    def __post_init__(self) -> None:
        table = _freeze_table(self.weights, "weights")
        if table.shape[0] != table.shape[1] or table.shape[0] < 1:
            raise GraphValidationError(
                f"weights must be a non-empty square table, got {table.shape}"
            )
        if np.diagonal(table).any():
            table = table.copy()
            np.fill_diagonal(table, 0.0)
            table.flags.writeable = False
        object.__setattr__(self, "weights", table)

    @property
    def n(self) -> int:
        """Return the vertex count."""
        return int(self.weights.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompleteGraph):
            return NotImplemented
        return np.array_equal(self.weights, other.weights)

    __hash__ = object.__hash__

    def edge_count(self) -> int:
        """Return the number of finite directed edges."""
        off_diagonal = ~np.eye(self.n, dtype=bool)
        return int(np.isfinite(self.weights[off_diagonal]).sum())

    def has_infinite_edges(self) -> bool:
        """Return whether any off-diagonal pair is absent (∞)."""
        return self.edge_count() != self.n * (self.n - 1)

    def is_symmetric(self) -> bool:
        """Return whether ν(u,v) = ν(v,u) for every pair."""
        return np.array_equal(self.weights, self.weights.T)

    def require_complete(self) -> None:
        """Raise unless every ordered pair of distinct vertices is finite."""
        if self.has_infinite_edges():
            raise GraphValidationError(
                "algorithm requires a complete graph but some weights are infinite"
            )

    def require_symmetric(self) -> None:
        """Raise unless the weight table is symmetric."""
        if not self.is_symmetric():
            raise GraphValidationError(
                "spanning tree algorithms require symmetric weights"
            )

    def check_vertex(self, vertex: int) -> int:
        """Return *vertex* validated against this graph."""
        return _check_vertex(vertex, self.n)

    def weight(
        self,
        u: int,
        v: int,
        ledger: QueryLedger,
        phase: Counter = Counter.UPDATE,
        *,
        label: str | None = None,
    ) -> float:
        """Return ν(u,v) and charge one query to *phase*."""
        u = self.check_vertex(u)
        v = self.check_vertex(v)
        if u == v:
            raise GraphValidationError(f"self-loop ({u},{v}) is not queryable")
        ledger.charge(phase, 1, label=label)
        return float(self.weights[u, v])

    def weights_from(
        self,
        u: int,
        targets: np.ndarray,
        ledger: QueryLedger,
        phase: Counter = Counter.UPDATE,
        *,
        label: str | None = None,
    ) -> np.ndarray:
        """Return ν(u,v) for every v in *targets*, one query per read."""
        if np.any(targets == u):
            raise GraphValidationError(f"self-loop ({u},{u}) is not queryable")
        ledger.charge(phase, int(targets.size), label=label)
        return self.weights[u, targets]


@dataclass(frozen=True, slots=True, eq=False)
class BipartiteGraph:
    """Complete bipartite digraph with ν₁: V₁×V₂ and ν₂: V₂×V₁ tables."""

    weights1: np.ndarray
    weights2: np.ndarray

    def __post_init__(self) -> None:
        table1 = _freeze_table(self.weights1, "weights1")
        table2 = _freeze_table(self.weights2, "weights2")
        if table1.shape[0] < 1 or table1.shape[1] < 1:
            raise GraphValidationError("both parts must contain at least one vertex")
        if table2.shape != (table1.shape[1], table1.shape[0]):
            raise GraphValidationError(
                f"weights2 shape {table2.shape} does not mirror "
                f"weights1 shape {table1.shape}"
            )
        object.__setattr__(self, "weights1", table1)
        object.__setattr__(self, "weights2", table2)

    @property
    def n1(self) -> int:
        """Return |V₁|."""
        return int(self.weights1.shape[0])

    @property
    def n2(self) -> int:
        """Return |V₂|."""
        return int(self.weights1.shape[1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return np.array_equal(self.weights1, other.weights1) and np.array_equal(
            self.weights2, other.weights2
        )

    __hash__ = object.__hash__

    def edge_count(self) -> int:
        """Return the number of finite directed cross-part edges."""
        return int(np.isfinite(self.weights1).sum() + np.isfinite(self.weights2).sum())

    def weight1(
        self,
        u: int,
        v: int,
        ledger: QueryLedger,
        phase: Counter = Counter.UPDATE,
        *,
        label: str | None = None,
    ) -> float:
        """Return ν₁(u,v) for u ∈ V₁, v ∈ V₂, charging one query."""
        u = _check_vertex(u, self.n1, "V1 vertex")
        v = _check_vertex(v, self.n2, "V2 vertex")
        ledger.charge(phase, 1, label=label)
        return float(self.weights1[u, v])

    def weight2(
        self,
        u: int,
        v: int,
        ledger: QueryLedger,
        phase: Counter = Counter.UPDATE,
        *,
        label: str | None = None,
    ) -> float:
        """Return ν₂(u,v) for u ∈ V₂, v ∈ V₁, charging one query."""
        u = _check_vertex(u, self.n2, "V2 vertex")
        v = _check_vertex(v, self.n1, "V1 vertex")
        ledger.charge(phase, 1, label=label)
        return float(self.weights2[u, v])

    def as_digraph(self) -> CompleteGraph:
        """Return the equivalent digraph on n₁+n₂ vertices.

        V₁ keeps indices 0..n₁-1 and V₂ becomes n₁..n₁+n₂-1; intra-part
        pairs are ∞.
        """
        size = self.n1 + self.n2
        table = np.full((size, size), math.inf)
        table[: self.n1, self.n1 :] = self.weights1
        table[self.n1 :, : self.n1] = self.weights2
        np.fill_diagonal(table, 0.0)
        return CompleteGraph(table)


@dataclass(frozen=True, slots=True)
class GraphGenSpec:
    """Everything that determines a generated graph.

    Weights are drawn with numpy's PCG64 as 32-bit integers m and mapped to
    ``low + (high - low) * (m + 1) / 2**32``, uniform on (low, high].
    """

    shape: str
    sizes: tuple[int, ...]
    seed: int
    low: float = DEFAULT_WEIGHT_LOW
    high: float = DEFAULT_WEIGHT_HIGH
    symmetric: bool = False

    @classmethod
    def complete(
        cls, n: int, seed: int, *, symmetric: bool = False, **kwargs: float
    ) -> GraphGenSpec:
        """Build a spec for a complete graph on *n* vertices."""
        return cls(SHAPE_COMPLETE, (n,), seed, symmetric=symmetric, **kwargs)

    @classmethod
    def bipartite(cls, n1: int, n2: int, seed: int, **kwargs: float) -> GraphGenSpec:
        """Build a spec for a complete bipartite graph."""
        return cls(SHAPE_BIPARTITE, (n1, n2), seed, **kwargs)


def _draw_weights(
    rng: np.random.Generator, shape: tuple[int, ...], low: float, high: float
) -> np.ndarray:
    """Draw a table of weights uniform on (low, high]."""
    grid = rng.integers(0, 2**WEIGHT_GRID_BITS, size=shape, dtype=np.uint64)
    unit = (grid + 1).astype(np.float64) * _GRID_SCALE
    if low == 0.0 and high == 1.0:
        return unit
    return low + (high - low) * unit


def generate(spec: GraphGenSpec) -> CompleteGraph | BipartiteGraph:
    """Generate the graph described by *spec*; a pure function of *spec*."""
    if not 0 <= spec.seed < _SEED_LIMIT:
        raise GraphValidationError(f"seed must be a 64-bit unsigned integer: {spec.seed}")
    if not (math.isfinite(spec.low) and math.isfinite(spec.high)):
        raise GraphValidationError("weight interval bounds must be finite")
    if spec.low < 0 or spec.high <= spec.low:
        raise GraphValidationError(
            f"weight interval ({spec.low}, {spec.high}] must be nonnegative and nonempty"
        )
    if any(size < 1 for size in spec.sizes):
        raise GraphValidationError(f"graph sizes must be at least 1: {spec.sizes}")

    rng = np.random.Generator(np.random.PCG64(spec.seed))

    if spec.shape == SHAPE_COMPLETE:
        if len(spec.sizes) != 1:
            raise GraphValidationError("complete graphs take exactly one size")
        (n,) = spec.sizes
        table = _draw_weights(rng, (n, n), spec.low, spec.high)
        if spec.symmetric:
            upper = np.triu(table, 1)
            table = upper + upper.T
        np.fill_diagonal(table, 0.0)
        graph: CompleteGraph | BipartiteGraph = CompleteGraph(table)
    elif spec.shape == SHAPE_BIPARTITE:
        if len(spec.sizes) != 2:
            raise GraphValidationError("bipartite graphs take exactly two sizes")
        n1, n2 = spec.sizes
        table1 = _draw_weights(rng, (n1, n2), spec.low, spec.high)
        table2 = _draw_weights(rng, (n2, n1), spec.low, spec.high)
        graph = BipartiteGraph(table1, table2)
    else:
        raise GraphValidationError(f"unknown graph shape: {spec.shape!r}")

    _LOGGER.debug(
        "Generated %s graph sizes=%s seed=%s symmetric=%s",
        spec.shape,
        spec.sizes,
        spec.seed,
        spec.symmetric,
    )
    return graph


def weight(
    g: CompleteGraph,
    u: int,
    v: int,
    ledger: QueryLedger,
    phase: Counter = Counter.UPDATE,
) -> float:
    """Return ν(u,v), charging one query to *phase* of *ledger*."""
    return g.weight(u, v, ledger, phase)


def _parse_header(line: str) -> tuple[str, tuple[int, ...]]:
    """Parse ``complete <n>`` or ``bipartite <n1> <n2>``."""
    tokens = line.split()
    if not tokens:
        raise GraphFormatError("line 1: missing header")
    shape, raw_sizes = tokens[0].casefold(), tokens[1:]
    expected = {SHAPE_COMPLETE: 1, SHAPE_BIPARTITE: 2}.get(shape)
    if expected is None:
        raise GraphFormatError(f"line 1: unknown graph shape {tokens[0]!r}")
    if len(raw_sizes) != expected:
        raise GraphFormatError(f"line 1: {shape} header takes {expected} size(s)")
    sizes = tuple(safe_parse_int(token) for token in raw_sizes)
    if any(size is None or size < 1 for size in sizes):
        raise GraphFormatError(f"line 1: invalid size in header {line.strip()!r}")
    return shape, sizes  # type: ignore[return-value]


def load_graph(path: Path | str) -> CompleteGraph | BipartiteGraph:
    """Load a graph file written by save_graph (or by hand).

    Bipartite files number vertices globally: V₁ is 0..n₁-1 and V₂ is
    n₁..n₁+n₂-1. Pairs not listed default to ∞.
    """
    with Path(path).open(encoding="utf-8") as file:
        lines = [
            (number, line)
            for number, line in enumerate(file, start=1)
            if line.strip() and not line.lstrip().startswith("#")
        ]
    if not lines:
        raise GraphFormatError("graph file is empty")

    _, header = lines[0]
    shape, sizes = _parse_header(header)
    size = sum(sizes)
    table = np.full((size, size), math.inf)
    np.fill_diagonal(table, 0.0)
    n1 = sizes[0]
    pair_capacity = size * (size - 1) if shape == SHAPE_COMPLETE else 2 * n1 * sizes[1]
    if len(lines) - 1 > pair_capacity:
        raise GraphFormatError(
            f"{shape} graph of sizes {sizes} has {pair_capacity} directed pairs "
            f"but the file lists {len(lines) - 1} weight rows"
        )

    seen: set[tuple[int, int]] = set()
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3:
            raise GraphFormatError(f"line {number}: expected 'u v w', got {line.strip()!r}")
        u, v = safe_parse_int(tokens[0]), safe_parse_int(tokens[1])
        if u is None or v is None or not (0 <= u < size and 0 <= v < size):
            raise GraphFormatError(f"line {number}: vertex out of range 0..{size - 1}")
        if u == v:
            raise GraphFormatError(f"line {number}: self-loop ({u},{v})")
        if shape == SHAPE_BIPARTITE and (u < n1) == (v < n1):
            raise GraphFormatError(f"line {number}: intra-part edge ({u},{v})")
        if (u, v) in seen:
            raise GraphFormatError(f"line {number}: duplicate pair ({u},{v})")
        parsed = parse_weight(tokens[2])
        if parsed is None:
            raise GraphFormatError(f"line {number}: invalid weight {tokens[2]!r}")
        seen.add((u, v))
        table[u, v] = parsed

    if len(seen) < pair_capacity:
        _LOGGER.warning(
            "Graph file %s lists %d of %d pairs; missing pairs are infinite",
            path,
            len(seen),
            pair_capacity,
        )

    if shape == SHAPE_COMPLETE:
        return CompleteGraph(table)
    return BipartiteGraph(table[:n1, n1:], table[n1:, :n1])


def save_graph(g: CompleteGraph | BipartiteGraph, path: Path | str) -> None:
    """Write *g* in the text format read by load_graph."""
    if isinstance(g, CompleteGraph):
        header = f"{SHAPE_COMPLETE} {g.n}"
        table = g.weights
        pairs = ((u, v) for u in range(g.n) for v in range(g.n) if u != v)
    else:
        header = f"{SHAPE_BIPARTITE} {g.n1} {g.n2}"
        table = g.as_digraph().weights
        size = g.n1 + g.n2
        pairs = (
            (u, v)
            for u in range(size)
            for v in range(size)
            if (u < g.n1) != (v < g.n1)
        )
    with Path(path).open("w", encoding="utf-8") as file:
        file.write(header + "\n")
        for u, v in pairs:
            file.write(f"{u} {v} {format_weight(float(table[u, v]))}\n")
