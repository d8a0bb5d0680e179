"""Hybrid classical/quantum-cost graph algorithms with exact query accounting."""

from __future__ import annotations

from .cost_model import predicted_cost
from .diameter import EccentricityRecord, InnerAlgorithm, diameter, eccentricity
from .errors import (
    EmptyCandidateSetError,
    FitError,
    GraphFormatError,
    GraphValidationError,
    OracleLimitError,
    QuantumGraphsError,
    RunConfigError,
)
from .experiments import (
    CostReport,
    CostRow,
    ExponentFit,
    RunConfig,
    cmd_run,
    cmd_scaling,
    cmd_verify,
    fit_exponent,
    ksweep,
)
from .graph import (
    BipartiteGraph,
    CompleteGraph,
    GraphGenSpec,
    generate,
    load_graph,
    save_graph,
    weight,
)
from .ledger import Counter, QueryLedger
from .min_search import FinderKind, FinderMode, Found, MinFinder, find_max, find_min
from .reference_oracles import brute_force_paths, floyd_warshall, kruskal_mst
from .shortest_paths import (
    BipartitePathTable,
    BipartiteVertex,
    PathTable,
    bipartite_partial,
    dijkstra_classic,
    dijkstra_no_update,
    dijkstra_periodic,
    reconstruct_path,
)
from .spanning_tree import TreeResult, prim_classic, prim_no_update, prim_periodic

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "BipartitePathTable",
    "BipartiteVertex",
    "CompleteGraph",
    "CostReport",
    "CostRow",
    "Counter",
    "EccentricityRecord",
    "EmptyCandidateSetError",
    "ExponentFit",
    "FinderKind",
    "FinderMode",
    "FitError",
    "Found",
    "GraphFormatError",
    "GraphGenSpec",
    "GraphValidationError",
    "InnerAlgorithm",
    "MinFinder",
    "OracleLimitError",
    "PathTable",
    "QuantumGraphsError",
    "QueryLedger",
    "RunConfig",
    "RunConfigError",
    "TreeResult",
    "bipartite_partial",
    "brute_force_paths",
    "cmd_run",
    "cmd_scaling",
    "cmd_verify",
    "diameter",
    "dijkstra_classic",
    "dijkstra_no_update",
    "dijkstra_periodic",
    "eccentricity",
    "find_max",
    "find_min",
    "fit_exponent",
    "floyd_warshall",
    "generate",
    "kruskal_mst",
    "ksweep",
    "load_graph",
    "predicted_cost",
    "prim_classic",
    "prim_no_update",
    "prim_periodic",
    "reconstruct_path",
    "save_graph",
    "weight",
]
