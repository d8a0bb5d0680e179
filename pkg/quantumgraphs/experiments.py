"""Experiment harness: runs, oracle verification, size sweeps and k sweeps.

Every command takes a validated RunConfig and returns plain report objects;
formatting and exit codes live in the command-line layer.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import asdict, dataclass, field
from datetime import UTC, datetime
from pathlib import Path
from typing import Any, NamedTuple

import numpy as np
import voluptuous as vol

from .const import (
    ALGO_BIPARTITE,
    ALGO_DIAMETER,
    ALGO_DIJKSTRA_CLASSIC,
    ALGO_DIJKSTRA_NO_UPDATE,
    ALGO_DIJKSTRA_PERIODIC,
    ALGO_PRIM_CLASSIC,
    ALGO_PRIM_NO_UPDATE,
    ALGO_PRIM_PERIODIC,
    ALGORITHMS,
    BRUTE_FORCE_MAX_N,
    CONF_ALGORITHM,
    CONF_FILL_V2,
    CONF_GRAPH_FILE,
    CONF_INNER,
    CONF_K,
    CONF_KS,
    CONF_MODE,
    CONF_N,
    CONF_N1,
    CONF_N2,
    CONF_SEED,
    CONF_SIZES,
    CONF_TRIALS,
    CONF_V0,
    CSV_COLUMNS,
    DEFAULT_DH_SIM_TRIALS,
    DEFAULT_DIAMETER_INNER,
    DEFAULT_SEED,
    DEFAULT_SIZES,
    DEFAULT_TRIALS,
    DIAMETER_SIZES,
    K_AUTO,
    KSWEEP_TOLERANCE_FACTOR,
    MIN_FIT_SIZES,
    MODE_CLASSICAL,
    MODE_DH_SIM,
    MODES,
    PERIODIC_ALGORITHMS,
    SHORTEST_PATH_ALGORITHMS,
    SLOPE_WINDOWS,
    SPANNING_TREE_ALGORITHMS,
    SPANNING_TREE_ENUMERATION_MAX_N,
)
from .diameter import InnerAlgorithm, diameter
from .errors import FitError, GraphValidationError, RunConfigError
from .graph import BipartiteGraph, CompleteGraph, GraphGenSpec, generate, load_graph
from .ledger import QueryLedger
from .min_search import FinderKind, FinderMode
from .reference_oracles import (
    brute_force_paths,
    exhaustive_mst,
    floyd_warshall,
    kruskal_mst,
    oracle_diameter,
)
from .shortest_paths import (
    BipartitePathTable,
    PathTable,
    bipartite_partial,
    dijkstra_classic,
    dijkstra_no_update,
    dijkstra_periodic,
    reconstruct_path,
)
from .spanning_tree import (
    TreeResult,
    is_spanning_tree,
    prim_classic,
    prim_no_update,
    prim_periodic,
)
from .util import ceil_sqrt, result_checksum, safe_parse_int

_LOGGER = logging.getLogger(__name__)

_SEED_LIMIT = 2**64


def _positive_int(value: Any) -> int:
    parsed = safe_parse_int(value)
    if parsed is None or parsed < 1:
        raise vol.Invalid(f"expected a positive integer, got {value!r}")
    return parsed


def _seed(value: Any) -> int:
    parsed = safe_parse_int(value)
    if parsed is None or not 0 <= parsed < _SEED_LIMIT:
        raise vol.Invalid(f"seed must be an integer in [0, 2**64), got {value!r}")
    return parsed


def _k_policy(value: Any) -> int | str:
    """Accept a positive integer or the literal ``auto``."""
    if isinstance(value, str) and value.strip().casefold() == K_AUTO:
        return K_AUTO
    try:
        return _positive_int(value)
    except vol.Invalid as err:
        raise vol.Invalid(
            f"k must be a positive integer or 'auto', got {value!r}"
        ) from err


def _int_list(value: Any) -> tuple[int, ...]:
    """Accept a comma-separated string or an iterable of positive integers."""
    items = value.split(",") if isinstance(value, str) else list(value)
    parsed = tuple(_positive_int(item) for item in items if str(item).strip())
    if not parsed:
        raise vol.Invalid("expected at least one size")
    return parsed


RUN_CONFIG_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_ALGORITHM): vol.In(ALGORITHMS),
        vol.Optional(CONF_MODE, default=MODE_CLASSICAL): vol.In(MODES),
        vol.Optional(CONF_N, default=None): vol.Any(None, _positive_int),
        vol.Optional(CONF_N1, default=None): vol.Any(None, _positive_int),
        vol.Optional(CONF_N2, default=None): vol.Any(None, _positive_int),
        vol.Optional(CONF_K, default=None): vol.Any(None, _k_policy),
        vol.Optional(CONF_KS, default=None): vol.Any(None, _int_list),
        vol.Optional(CONF_SEED, default=DEFAULT_SEED): _seed,
        vol.Optional(CONF_TRIALS, default=None): vol.Any(None, _positive_int),
        vol.Optional(CONF_SIZES, default=None): vol.Any(None, _int_list),
        vol.Optional(CONF_GRAPH_FILE, default=None): vol.Any(None, vol.Coerce(Path)),
        vol.Optional(CONF_V0, default=0): vol.All(vol.Coerce(int), vol.Range(min=0)),
        vol.Optional(CONF_INNER, default=DEFAULT_DIAMETER_INNER): vol.In(
            SHORTEST_PATH_ALGORITHMS
        ),
        vol.Optional(CONF_FILL_V2, default=True): bool,
    }
)


@dataclass(frozen=True, slots=True)
class RunConfig:
    """A validated experiment configuration.

    ``k`` is None (the algorithm's default), ``"auto"`` (⌈√n⌉ at run time)
    or a fixed period. Trial t draws its graph with seed ``seed + t``; in
    dh-sim mode its finder stream is derived from the same base seed and t.
    """

    algorithm: str
    mode: str = MODE_CLASSICAL
    n: int | None = None
    n1: int | None = None
    n2: int | None = None
    k: int | str | None = None
    ks: tuple[int, ...] | None = None
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    sizes: tuple[int, ...] = DEFAULT_SIZES
    graph_file: Path | None = None
    v0: int = 0
    inner: str = DEFAULT_DIAMETER_INNER
    fill_v2: bool = True

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> RunConfig:
        """Validate *data* and apply the cross-field rules."""
        try:
            values = RUN_CONFIG_SCHEMA(dict(data))
        except vol.Invalid as err:
            raise RunConfigError(f"invalid run configuration: {err}") from err

        if values[CONF_TRIALS] is None:
            values[CONF_TRIALS] = (
                DEFAULT_DH_SIM_TRIALS if values[CONF_MODE] == MODE_DH_SIM else DEFAULT_TRIALS
            )
        if values[CONF_SIZES] is None:
            values[CONF_SIZES] = (
                DIAMETER_SIZES if values[CONF_ALGORITHM] == ALGO_DIAMETER else DEFAULT_SIZES
            )
        config = cls(**values)
        config._check_combination()
        return config

    def _check_combination(self) -> None:
        uses_k = self.algorithm in PERIODIC_ALGORITHMS or (
            self.algorithm == ALGO_DIAMETER and self.inner in PERIODIC_ALGORITHMS
        )
        if (self.k is not None or self.ks is not None) and not uses_k:
            raise RunConfigError(
                f"k applies only to periodic algorithms, not {self.algorithm}"
            )
        if not self.fill_v2 and self.algorithm != ALGO_BIPARTITE:
            raise RunConfigError("fill_v2 applies only to the bipartite algorithm")
        if self.graph_file is not None and any(
            size is not None for size in (self.n, self.n1, self.n2)
        ):
            raise RunConfigError("give either a graph file or graph sizes, not both")
        if self.seed + self.trials > _SEED_LIMIT:
            raise RunConfigError("seed plus trial count overflows the 64-bit seed range")

    @property
    def finder_kind(self) -> FinderKind:
        return FinderKind(self.mode)

    def finder_mode(self, trial: int) -> FinderMode:
        """Return the finder mode of one trial."""
        if self.finder_kind is FinderKind.DH_SIM:
            return FinderMode.dh_sim(self.seed).derive(trial)
        return FinderMode(self.finder_kind)

    def resolve_k(self, n: int) -> int | None:
        """Return the flush period for an n-vertex run, or None if unused."""
        if self.algorithm == ALGO_DIAMETER:
            if self.inner not in PERIODIC_ALGORITHMS:
                return None
        elif self.algorithm not in PERIODIC_ALGORITHMS:
            return None
        if self.k is None or self.k == K_AUTO:
            return ceil_sqrt(n)
        return int(self.k)

    def with_size(self, size: int) -> RunConfig:
        """Return a copy sized for one point of a size sweep.

        Bipartite sweeps vary n₂ and keep n₁.
        """
        values = asdict(self)
        if self.algorithm == ALGO_BIPARTITE:
            values[CONF_N2] = size
        else:
            values[CONF_N] = size
        return RunConfig(**values)

    def graph_for_trial(self, trial: int) -> CompleteGraph | BipartiteGraph:
        """Load the graph file or generate the trial's graph."""
        if self.graph_file is not None:
            graph = load_graph(self.graph_file)
            if (self.algorithm == ALGO_BIPARTITE) != isinstance(graph, BipartiteGraph):
                raise RunConfigError(
                    f"{self.algorithm} cannot run on the graph in {self.graph_file}"
                )
            return graph
        seed = self.seed + trial
        if self.algorithm == ALGO_BIPARTITE:
            if self.n1 is None or self.n2 is None:
                raise RunConfigError("the bipartite algorithm needs n1 and n2")
            return generate(GraphGenSpec.bipartite(self.n1, self.n2, seed))
        if self.n is None:
            raise RunConfigError(f"{self.algorithm} needs n or a graph file")
        symmetric = self.algorithm in SPANNING_TREE_ALGORITHMS
        return generate(GraphGenSpec.complete(self.n, seed, symmetric=symmetric))


@dataclass(frozen=True, slots=True)
class CostRow:
    """One CSV row: a single (algorithm, mode, size, seed, trial) cell."""

    algorithm: str
    mode: str
    n: int | None
    n1: int | None
    n2: int | None
    k: int | None
    seed: int
    trial: int
    search_queries: int
    update_queries: int
    total: int
    checksum: str

    @property
    def size(self) -> int:
        """Return the swept size: n₂ for bipartite rows, else n."""
        size = self.n2 if self.algorithm == ALGO_BIPARTITE else self.n
        assert size is not None
        return size

    def sort_key(self) -> tuple[Any, ...]:
        return (
            self.algorithm,
            self.mode,
            self.n or 0,
            self.n1 or 0,
            self.n2 or 0,
            self.k or 0,
            self.seed,
            self.trial,
        )

    def as_csv_row(self) -> list[str]:
        values = asdict(self)
        return ["" if values[col] is None else str(values[col]) for col in CSV_COLUMNS]


@dataclass(slots=True)
class CostReport:
    """Rows of one command, kept in deterministic sorted order."""

    rows: list[CostRow] = field(default_factory=list)

    def add(self, row: CostRow) -> None:
        self.rows.append(row)
        self.rows.sort(key=CostRow.sort_key)

    def extend(self, rows: Iterable[CostRow]) -> None:
        self.rows.extend(rows)
        self.rows.sort(key=CostRow.sort_key)


class ExponentFit(NamedTuple):
    """Least-squares line through (log size, log total)."""

    slope: float
    intercept: float
    residual: float

    def within(self, window: tuple[float, float] | None) -> bool | None:
        """Return whether the slope lies in *window*; None without a window."""
        if window is None:
            return None
        low, high = window
        return low <= self.slope <= high


def fit_power_law(sizes: Iterable[float], totals: Iterable[float]) -> ExponentFit:
    """Fit total = c·size^p by ordinary least squares in log-log space."""
    x = np.asarray(list(sizes), dtype=np.float64)
    y = np.asarray(list(totals), dtype=np.float64)
    if np.unique(x).size < MIN_FIT_SIZES:
        raise FitError(
            f"an exponent fit needs at least {MIN_FIT_SIZES} distinct sizes, "
            f"got {np.unique(x).size}"
        )
    if (x <= 0).any() or (y <= 0).any():
        raise FitError("sizes and totals must be positive to fit in log space")
    coefficients, residuals, *_ = np.polyfit(np.log(x), np.log(y), 1, full=True)
    slope, intercept = coefficients
    return ExponentFit(
        slope=float(slope),
        intercept=float(intercept),
        residual=float(residuals[0]) if residuals.size else 0.0,
    )


def fit_exponent(rows: CostReport | Iterable[CostRow]) -> ExponentFit:
    """Fit the scaling exponent of a report, averaging trials per size first."""
    cells = rows.rows if isinstance(rows, CostReport) else list(rows)
    by_size: dict[int, list[int]] = defaultdict(list)
    for row in cells:
        by_size[row.size].append(row.total)
    sizes = sorted(by_size)
    return fit_power_law(sizes, [float(np.mean(by_size[size])) for size in sizes])


_RUNNERS = {
    ALGO_DIJKSTRA_CLASSIC: dijkstra_classic,
    ALGO_DIJKSTRA_NO_UPDATE: dijkstra_no_update,
    ALGO_PRIM_CLASSIC: prim_classic,
    ALGO_PRIM_NO_UPDATE: prim_no_update,
}
_PERIODIC_RUNNERS = {
    ALGO_DIJKSTRA_PERIODIC: dijkstra_periodic,
    ALGO_PRIM_PERIODIC: prim_periodic,
}


class RunOutcome(NamedTuple):
    """The result of one algorithm run and its checksum."""

    result: PathTable | BipartitePathTable | TreeResult | float
    checksum: str


def run_algorithm(
    algorithm: str,
    graph: CompleteGraph | BipartiteGraph,
    mode: FinderMode,
    ledger: QueryLedger,
    *,
    v0: int = 0,
    k: int | None = None,
    inner: str = DEFAULT_DIAMETER_INNER,
    fill_v2: bool = True,
) -> RunOutcome:
    """Dispatch one run of *algorithm* and digest its output."""
    if algorithm == ALGO_BIPARTITE:
        if not isinstance(graph, BipartiteGraph):
            raise GraphValidationError("the bipartite algorithm needs a bipartite graph")
        table = bipartite_partial(graph, v0, mode, ledger, fill_v2=fill_v2)
        return RunOutcome(table, table.checksum())
    if not isinstance(graph, CompleteGraph):
        raise GraphValidationError(f"{algorithm} needs a complete graph")

    if algorithm == ALGO_DIAMETER:
        inner_k = k if inner in PERIODIC_ALGORITHMS else None
        value = diameter(graph, InnerAlgorithm(inner, inner_k), mode, ledger)
        return RunOutcome(value, result_checksum([value]))
    if algorithm in _PERIODIC_RUNNERS:
        period = k if k is not None else ceil_sqrt(graph.n)
        result = _PERIODIC_RUNNERS[algorithm](graph, v0, period, mode, ledger)
    elif algorithm in _RUNNERS:
        result = _RUNNERS[algorithm](graph, v0, mode, ledger)
    else:
        raise RunConfigError(f"unknown algorithm {algorithm!r}")
    return RunOutcome(result, result.checksum())


def _graph_sizes(
    graph: CompleteGraph | BipartiteGraph,
) -> tuple[int | None, int | None, int | None]:
    if isinstance(graph, BipartiteGraph):
        return None, graph.n1, graph.n2
    return graph.n, None, None


def run_cell(config: RunConfig, trial: int) -> CostRow:
    """Run one trial of *config* and return its row."""
    graph = config.graph_for_trial(trial)
    n, n1, n2 = _graph_sizes(graph)
    k = config.resolve_k(n) if n is not None else None
    ledger = QueryLedger()
    outcome = run_algorithm(
        config.algorithm,
        graph,
        config.finder_mode(trial),
        ledger,
        v0=config.v0,
        k=k,
        inner=config.inner,
        fill_v2=config.fill_v2,
    )
    if _LOGGER.isEnabledFor(logging.DEBUG):
        _LOGGER.debug(
            "%s %s n=%s n1=%s n2=%s k=%s trial=%d: %s",
            config.algorithm,
            config.mode,
            n,
            n1,
            n2,
            k,
            trial,
            ledger.as_dict(),
        )
    return CostRow(
        algorithm=config.algorithm,
        mode=config.mode,
        n=n,
        n1=n1,
        n2=n2,
        k=k,
        seed=config.seed,
        trial=trial,
        search_queries=ledger.search_queries,
        update_queries=ledger.update_queries,
        total=ledger.total,
        checksum=outcome.checksum,
    )


def cmd_run(config: RunConfig) -> CostReport:
    """Run every trial of *config*."""
    report = CostReport()
    report.extend(run_cell(config, trial) for trial in range(config.trials))
    return report


@dataclass(slots=True)
class VerifyReport:
    """Outcome of an oracle comparison; ``mismatches`` name each failure."""

    checked: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1


def _compare_distances(
    where: str, label: str, got: Iterable[float], expected: Iterable[float]
) -> list[str]:
    return [
        f"{where}: {label}[{vertex}] = {a!r}, oracle {b!r}"
        for vertex, (a, b) in enumerate(zip(got, expected, strict=True))
        if a != b
    ]


def _path_weight(graph: CompleteGraph, path: list[int]) -> float:
    total = 0.0
    for u, v in zip(path, path[1:], strict=False):
        total += float(graph.weights[u, v])
    return total


def verify_graph(
    algorithm: str,
    graph: CompleteGraph | BipartiteGraph,
    mode: FinderMode,
    *,
    v0: int = 0,
    k: int | None = None,
    inner: str = DEFAULT_DIAMETER_INNER,
    fill_v2: bool = True,
    reference: CompleteGraph | BipartiteGraph | None = None,
    where: str = "",
) -> list[str]:
    """Run *algorithm* on *graph* and compare it with the oracles.

    The oracles read *reference* when given (a deliberately different graph
    is how a mismatch is provoked); otherwise *graph* itself.
    """
    oracle_graph = graph if reference is None else reference
    where = where or f"{algorithm}/{mode.kind}"
    outcome = run_algorithm(
        algorithm,
        graph,
        mode,
        QueryLedger(),
        v0=v0,
        k=k,
        inner=inner,
        fill_v2=fill_v2,
    )
    result = outcome.result

    if algorithm == ALGO_BIPARTITE:
        assert isinstance(oracle_graph, BipartiteGraph)
        row = floyd_warshall(oracle_graph)[v0]
        # Without the fill pass every V₂ distance stays infinite.
        expected2 = (
            row[oracle_graph.n1 :] if fill_v2 else [math.inf] * oracle_graph.n2
        )
        return _compare_distances(
            where, "lambda1", result.distances1, row[: oracle_graph.n1]
        ) + _compare_distances(where, "lambda2", result.distances2, expected2)

    assert isinstance(oracle_graph, CompleteGraph)
    if algorithm == ALGO_DIAMETER:
        expected = oracle_diameter(oracle_graph)
        if result != expected:
            return [f"{where}: diameter {result!r}, oracle {expected!r}"]
        return []

    if algorithm in SPANNING_TREE_ALGORITHMS:
        problems = []
        if not is_spanning_tree(oracle_graph.n, result.edges):
            problems.append(f"{where}: edges {result.edges} are not a spanning tree")
        oracle = (
            exhaustive_mst(oracle_graph)
            if oracle_graph.n <= SPANNING_TREE_ENUMERATION_MAX_N
            else kruskal_mst(oracle_graph)
        )
        if result.total_weight != oracle.total_weight:
            problems.append(
                f"{where}: tree weight {result.total_weight!r}, "
                f"oracle {oracle.total_weight!r}"
            )
        return problems

    problems = _compare_distances(
        where, "lambda", result.distances, floyd_warshall(oracle_graph)[v0]
    )
    if oracle_graph.n <= BRUTE_FORCE_MAX_N:
        brute = brute_force_paths(oracle_graph, v0)
        problems += _compare_distances(
            where, "lambda", result.distances, brute.distances
        )
    for vertex, distance in enumerate(result.distances):
        weight = _path_weight(oracle_graph, reconstruct_path(result, vertex))
        if weight != distance:
            problems.append(
                f"{where}: path to {vertex} weighs {weight!r}, lambda {distance!r}"
            )
    return problems


def cmd_verify(config: RunConfig) -> VerifyReport:
    """Compare every trial's output with the reference oracles."""
    report = VerifyReport()
    for trial in range(config.trials):
        graph = config.graph_for_trial(trial)
        n = graph.n if isinstance(graph, CompleteGraph) else None
        mismatches = verify_graph(
            config.algorithm,
            graph,
            config.finder_mode(trial),
            v0=config.v0,
            k=config.resolve_k(n) if n is not None else None,
            inner=config.inner,
            fill_v2=config.fill_v2,
            where=f"{config.algorithm}/{config.mode} seed={config.seed + trial}",
        )
        report.checked += 1
        report.mismatches.extend(mismatches)
    if report.mismatches:
        _LOGGER.warning(
            "Verification found %d mismatches in %d runs",
            len(report.mismatches),
            report.checked,
        )
    return report


@dataclass(slots=True)
class ScalingReport:
    """Rows of a size sweep, the fitted exponent and its verdict."""

    report: CostReport
    fit: ExponentFit
    window: tuple[float, float] | None

    @property
    def verdict(self) -> bool | None:
        return self.fit.within(self.window)


def cmd_scaling(config: RunConfig) -> ScalingReport:
    """Run *config* over its size grid and fit the exponent of the totals."""
    if config.graph_file is not None:
        raise RunConfigError("scaling sweeps generate their graphs; drop the graph file")
    if config.algorithm == ALGO_BIPARTITE and config.n1 is None:
        raise RunConfigError("bipartite sweeps vary n2 and need a fixed n1")
    report = CostReport()
    for size in sorted(set(config.sizes)):
        sized = config.with_size(size)
        report.extend(run_cell(sized, trial) for trial in range(config.trials))
        _LOGGER.info("Finished %s %s at size %d", config.algorithm, config.mode, size)
    fit = fit_exponent(report)
    return ScalingReport(
        report=report,
        fit=fit,
        window=SLOPE_WINDOWS.get((config.algorithm, config.mode)),
    )


@dataclass(slots=True)
class KSweepReport:
    """Totals over flush periods for one n, and where the minimum fell."""

    n: int
    report: CostReport
    best_k: int
    target_k: int

    @property
    def within_tolerance(self) -> bool:
        """Return whether best_k is within the tolerance factor of ⌈√n⌉."""
        factor = KSWEEP_TOLERANCE_FACTOR
        return self.target_k / factor <= self.best_k <= self.target_k * factor


def default_ks(n: int) -> tuple[int, ...]:
    """Return the powers of two up to n."""
    return tuple(2**e for e in range(int(math.log2(n)) + 1))


def ksweep(config: RunConfig) -> KSweepReport:
    """Run a periodic algorithm for every k in the sweep list at fixed n."""
    if config.algorithm not in PERIODIC_ALGORITHMS:
        raise RunConfigError(f"k sweeps need a periodic algorithm, not {config.algorithm}")
    if config.n is None:
        raise RunConfigError("k sweeps need n")
    ks = config.ks or default_ks(config.n)
    report = CostReport()
    mean_totals: dict[int, float] = {}
    for k in ks:
        swept = RunConfig(**{**asdict(config), CONF_K: k, CONF_KS: None})
        rows = [run_cell(swept, trial) for trial in range(config.trials)]
        report.extend(rows)
        mean_totals[k] = float(np.mean([row.total for row in rows]))
    best_k = min(mean_totals, key=lambda k: (mean_totals[k], k))
    return KSweepReport(
        n=config.n, report=report, best_k=best_k, target_k=ceil_sqrt(config.n)
    )


def write_csv(report: CostReport, path: Path | None = None) -> str:
    """Render *report* as CSV; also write it to *path* when given."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(row.as_csv_row() for row in report.rows)
    text = buffer.getvalue()
    if path is not None:
        path.write_text(text, encoding="utf-8")
    return text


def write_json(
    report: CostReport,
    path: Path | None = None,
    *,
    extra: Mapping[str, Any] | None = None,
) -> str:
    """Render *report* as JSON with a generation timestamp."""
    payload: dict[str, Any] = {
        "generated_at": datetime.now(UTC).isoformat(),
        "rows": [asdict(row) for row in report.rows],
    }
    if extra:
        payload.update(extra)
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path is not None:
        path.write_text(text, encoding="utf-8")
    return text
