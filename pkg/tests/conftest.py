"""Shared fixtures for the quantumgraphs test suite."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest

from quantumgraphs.graph import BipartiteGraph, CompleteGraph, GraphGenSpec, generate
from quantumgraphs.min_search import FinderMode

ALL_MODES = (
    FinderMode.classical(),
    FinderMode.ideal_quantum(),
    FinderMode.dh_sim(7),
)
DETERMINISTIC_MODES = ALL_MODES[:2]


@pytest.fixture
def example_graph() -> CompleteGraph:
    """Symmetric triangle with ν(0,1)=5, ν(1,2)=1, ν(0,2)=7."""

    return CompleteGraph(
        np.array(
            [
                [0.0, 5.0, 7.0],
                [5.0, 0.0, 1.0],
                [7.0, 1.0, 0.0],
            ]
        )
    )


@pytest.fixture
def make_complete() -> Callable[..., CompleteGraph]:
    """Return a factory for seeded complete graphs."""

    def factory(n: int, seed: int, *, symmetric: bool = False) -> CompleteGraph:
        graph = generate(GraphGenSpec.complete(n, seed, symmetric=symmetric))
        assert isinstance(graph, CompleteGraph)
        return graph

    return factory


@pytest.fixture
def make_bipartite() -> Callable[[int, int, int], BipartiteGraph]:
    """Return a factory for seeded complete bipartite graphs."""

    def factory(n1: int, n2: int, seed: int) -> BipartiteGraph:
        graph = generate(GraphGenSpec.bipartite(n1, n2, seed))
        assert isinstance(graph, BipartiteGraph)
        return graph

    return factory
