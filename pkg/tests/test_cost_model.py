"""Tests for predicted charges and the scaling laws they imply."""

import pytest

from quantumgraphs.const import (
    ALGO_BIPARTITE,
    ALGO_DIAMETER,
    ALGO_DIJKSTRA_CLASSIC,
    ALGO_DIJKSTRA_NO_UPDATE,
    ALGO_DIJKSTRA_PERIODIC,
    ALGO_PRIM_CLASSIC,
    ALGO_PRIM_NO_UPDATE,
    ALGO_PRIM_PERIODIC,
    DEFAULT_SIZES,
    DIAMETER_SIZES,
    KSWEEP_TOLERANCE_FACTOR,
    MODE_CLASSICAL,
    MODE_DH_SIM,
    MODE_IDEAL_QUANTUM,
    SLOPE_WINDOWS,
)
from quantumgraphs.cost_model import (
    PredictedCost,
    floyd_warshall_cost,
    predicted_cost,
    repeated_dijkstra_cost,
)
from quantumgraphs.errors import RunConfigError
from quantumgraphs.experiments import default_ks, fit_power_law, run_algorithm
from quantumgraphs.ledger import QueryLedger
from quantumgraphs.min_search import FinderMode
from quantumgraphs.util import ceil_sqrt

DETERMINISTIC = (MODE_CLASSICAL, MODE_IDEAL_QUANTUM)
COMPLETE_ALGORITHMS = (
    ALGO_DIJKSTRA_CLASSIC,
    ALGO_DIJKSTRA_NO_UPDATE,
    ALGO_DIJKSTRA_PERIODIC,
    ALGO_PRIM_CLASSIC,
    ALGO_PRIM_NO_UPDATE,
    ALGO_PRIM_PERIODIC,
)


def _measure(algorithm, graph, mode, **kwargs):
    ledger = QueryLedger()
    run_algorithm(algorithm, graph, FinderMode(mode), ledger, **kwargs)
    return PredictedCost(ledger.search_queries, ledger.update_queries)


@pytest.mark.parametrize("mode", DETERMINISTIC)
@pytest.mark.parametrize("algorithm", COMPLETE_ALGORITHMS)
@pytest.mark.parametrize("n", [1, 2, 3, 7, 16, 33])
def test_predictions_match_measured_ledgers(make_complete, algorithm, mode, n):
    """Deterministic modes charge exactly what the cost model predicts."""

    symmetric = algorithm.startswith("prim")
    graph = make_complete(n, n, symmetric=symmetric)

    assert _measure(algorithm, graph, mode) == predicted_cost(algorithm, mode, n)


@pytest.mark.parametrize("mode", DETERMINISTIC)
@pytest.mark.parametrize("k", [1, 2, 3, 5, 8, 40])
def test_periodic_predictions_for_every_k(make_complete, mode, k):
    """The flush schedule is replayed exactly for any period."""

    graph = make_complete(24, 5)

    assert _measure(ALGO_DIJKSTRA_PERIODIC, graph, mode, k=k) == predicted_cost(
        ALGO_DIJKSTRA_PERIODIC, mode, 24, k
    )


@pytest.mark.parametrize("mode", DETERMINISTIC)
@pytest.mark.parametrize(("n1", "n2"), [(1, 1), (1, 5), (2, 3), (4, 16), (9, 4)])
@pytest.mark.parametrize("fill_v2", [True, False])
def test_bipartite_predictions(make_bipartite, mode, n1, n2, fill_v2):
    """Bipartite charges depend only on n1, n2 and the fill pass."""

    graph = make_bipartite(n1, n2, 3)

    assert _measure(ALGO_BIPARTITE, graph, mode, fill_v2=fill_v2) == predicted_cost(
        ALGO_BIPARTITE, mode, n1=n1, n2=n2, fill_v2=fill_v2
    )


@pytest.mark.parametrize("mode", DETERMINISTIC)
@pytest.mark.parametrize(
    "inner", [ALGO_DIJKSTRA_PERIODIC, ALGO_DIJKSTRA_CLASSIC, ALGO_DIJKSTRA_NO_UPDATE]
)
@pytest.mark.parametrize("n", [1, 4, 10])
def test_diameter_predictions(make_complete, mode, inner, n):
    """Diameter charges n (or ⌈√n⌉) inner runs."""

    graph = make_complete(n, 8)
    k = ceil_sqrt(n) if inner == ALGO_DIJKSTRA_PERIODIC else None

    assert _measure(ALGO_DIAMETER, graph, mode, k=k, inner=inner) == predicted_cost(
        ALGO_DIAMETER, mode, n, k, inner=inner
    )


@pytest.mark.parametrize("n", [4, 16, 64])
def test_classic_closed_form(n):
    """Classical Dijkstra costs Σ(2(n−i)−1) = (n−1)² queries."""

    assert predicted_cost(ALGO_DIJKSTRA_CLASSIC, MODE_CLASSICAL, n).total == (n - 1) ** 2


def test_bipartite_known_totals():
    """n1=4, n2=16 costs 320 classically and 78 with ideal search."""

    assert predicted_cost(ALGO_BIPARTITE, MODE_CLASSICAL, n1=4, n2=16).total == 320
    assert predicted_cost(ALGO_BIPARTITE, MODE_IDEAL_QUANTUM, n1=4, n2=16).total == 78


@pytest.mark.parametrize(("algorithm", "mode"), sorted(SLOPE_WINDOWS))
def test_scaling_exponents_fall_in_their_windows(algorithm, mode):
    """Fitted log-log slopes on the default grids land in the expected windows."""

    sizes = DIAMETER_SIZES if algorithm == ALGO_DIAMETER else DEFAULT_SIZES
    totals = [predicted_cost(algorithm, mode, n).total for n in sizes]

    fit = fit_power_law(sizes, totals)

    assert fit.within(SLOPE_WINDOWS[(algorithm, mode)]), fit


def test_periodic_beats_classic_under_ideal_search():
    """With ideal search, periodic updating undercuts the classic update sweep."""

    n = 1024
    periodic = predicted_cost(ALGO_DIJKSTRA_PERIODIC, MODE_IDEAL_QUANTUM, n)
    classic = predicted_cost(ALGO_DIJKSTRA_CLASSIC, MODE_IDEAL_QUANTUM, n)

    assert periodic.total < classic.total


def test_best_flush_period_balances_search_and_update():
    """At n=1024 the cheapest power-of-two k is within a factor 2 of √n."""

    n = 1024
    totals = {
        k: predicted_cost(ALGO_DIJKSTRA_PERIODIC, MODE_IDEAL_QUANTUM, n, k).total
        for k in default_ks(n)
    }
    best = min(totals, key=totals.get)
    target = ceil_sqrt(n)

    assert target / KSWEEP_TOLERANCE_FACTOR <= best <= target * KSWEEP_TOLERANCE_FACTOR


@pytest.mark.parametrize("n1", [4, 8])
def test_bipartite_quantum_advantage_grows_with_n2(n1):
    """The ideal/classical ratio shrinks as V₂ grows."""

    ratios = [
        predicted_cost(ALGO_BIPARTITE, MODE_IDEAL_QUANTUM, n1=n1, n2=n2).total
        / predicted_cost(ALGO_BIPARTITE, MODE_CLASSICAL, n1=n1, n2=n2).total
        for n2 in (16, 32, 64, 128, 256, 512)
    ]

    assert ratios == sorted(ratios, reverse=True)
    assert ratios[-1] < 1


def test_baselines():
    """Floyd–Warshall costs n³ and repeated Dijkstra n·(n−1)²."""

    assert floyd_warshall_cost(10) == 1000
    assert repeated_dijkstra_cost(10) == 10 * 81


@pytest.mark.parametrize(
    ("args", "kwargs"),
    [
        ((ALGO_DIJKSTRA_CLASSIC, MODE_DH_SIM, 8), {}),
        ((ALGO_BIPARTITE, MODE_CLASSICAL), {"n1": 3}),
        ((ALGO_DIJKSTRA_CLASSIC, MODE_CLASSICAL), {}),
        (("bellman-ford", MODE_CLASSICAL, 8), {}),
    ],
)
def test_predictions_reject_bad_requests(args, kwargs):
    """dh-sim, missing sizes and unknown algorithms cannot be predicted."""

    with pytest.raises(RunConfigError):
        predicted_cost(*args, **kwargs)


def test_bipartite_crossover_grid(make_bipartite):
    """With n1=8 ideal search wins at every n2 and its edge keeps growing."""

    grid = (64, 256, 1024, 4096)
    ratios = []
    for n2 in grid:
        ideal = predicted_cost(ALGO_BIPARTITE, MODE_IDEAL_QUANTUM, n1=8, n2=n2).total
        classical = predicted_cost(ALGO_BIPARTITE, MODE_CLASSICAL, n1=8, n2=n2).total
        assert ideal < classical
        ratios.append(ideal / classical)
    assert ratios == sorted(ratios, reverse=True)

    graph = make_bipartite(8, 256, 1)
    assert _measure(ALGO_BIPARTITE, graph, MODE_IDEAL_QUANTUM).total < _measure(
        ALGO_BIPARTITE, graph, MODE_CLASSICAL
    ).total
