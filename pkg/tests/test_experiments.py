"""Tests for run configuration, verification, fits and reports."""

import csv
import io
import json
import math

import pytest

from quantumgraphs import experiments
from quantumgraphs.const import (
    ALGO_BIPARTITE,
    ALGO_DIAMETER,
    ALGO_DIJKSTRA_CLASSIC,
    ALGO_DIJKSTRA_PERIODIC,
    ALGO_PRIM_PERIODIC,
    ALGORITHMS,
    CSV_COLUMNS,
    DEFAULT_DH_SIM_TRIALS,
    DEFAULT_SIZES,
    DIAMETER_SIZES,
    K_AUTO,
    MODES,
)
from quantumgraphs.errors import FitError, RunConfigError
from quantumgraphs.experiments import (
    CostReport,
    CostRow,
    ExponentFit,
    RunConfig,
    cmd_run,
    cmd_scaling,
    cmd_verify,
    default_ks,
    fit_exponent,
    fit_power_law,
    ksweep,
    verify_graph,
    write_csv,
    write_json,
)
from quantumgraphs.graph import GraphGenSpec, generate, save_graph
from quantumgraphs.min_search import FinderMode

from .conftest import ALL_MODES


def _config(**values):
    return RunConfig.from_mapping(values)


def test_defaults_depend_on_mode():
    """dh-sim runs many trials by default, deterministic modes one."""

    assert _config(algorithm=ALGO_DIJKSTRA_CLASSIC, n=8).trials == 1
    assert (
        _config(algorithm=ALGO_DIJKSTRA_CLASSIC, n=8, mode="dh-sim").trials
        == DEFAULT_DH_SIM_TRIALS
    )


def test_k_auto_resolves_to_ceil_sqrt_n():
    """k=auto means ⌈√n⌉ at the run's size."""

    config = _config(algorithm=ALGO_DIJKSTRA_PERIODIC, n=16, k="auto")

    assert config.k == K_AUTO
    assert config.resolve_k(16) == 4
    assert config.resolve_k(17) == 5
    assert _config(algorithm=ALGO_DIJKSTRA_PERIODIC, n=16, k="3").resolve_k(16) == 3


def test_sizes_accept_comma_separated_strings():
    """Sizes come in as '64,128' from the command line."""

    config = _config(algorithm=ALGO_DIJKSTRA_CLASSIC, sizes="64, 128,256")

    assert config.sizes == (64, 128, 256)


@pytest.mark.parametrize(
    "values",
    [
        {"algorithm": "bellman-ford", "n": 8},
        {"algorithm": ALGO_DIJKSTRA_CLASSIC, "n": 8, "mode": "analog"},
        {"algorithm": ALGO_DIJKSTRA_CLASSIC, "n": 0},
        {"algorithm": ALGO_DIJKSTRA_CLASSIC, "n": 8, "seed": -1},
        {"algorithm": ALGO_DIJKSTRA_CLASSIC, "n": 8, "seed": 2**64},
        {"algorithm": ALGO_DIJKSTRA_PERIODIC, "n": 8, "k": 0},
        {"algorithm": ALGO_DIJKSTRA_PERIODIC, "n": 8, "k": "often"},
        {"algorithm": ALGO_DIJKSTRA_CLASSIC, "n": 8, "k": 2},
        {"algorithm": ALGO_DIJKSTRA_CLASSIC, "n": 8, "ks": "1,2"},
        {"algorithm": ALGO_DIAMETER, "n": 8, "inner": ALGO_DIJKSTRA_CLASSIC, "k": 2},
        {"algorithm": ALGO_DIJKSTRA_CLASSIC, "n": 8, "fill_v2": False},
        {"algorithm": ALGO_DIJKSTRA_CLASSIC, "n": 8, "graph_file": "g.txt"},
        {"algorithm": ALGO_DIJKSTRA_CLASSIC, "n": 8, "seed": 2**64 - 1, "trials": 2},
        {"algorithm": ALGO_DIJKSTRA_CLASSIC, "n": 8, "sizes": ""},
    ],
)
def test_invalid_configurations_are_rejected(values):
    """Schema and cross-field errors surface as RunConfigError."""

    with pytest.raises(RunConfigError):
        RunConfig.from_mapping(values)


def test_k_applies_to_periodic_diameter_inner_loop():
    """Diameter accepts k when its inner loop is periodic."""

    config = _config(algorithm=ALGO_DIAMETER, n=9, k=2)

    assert config.resolve_k(9) == 2


def test_runs_are_deterministic():
    """Identical configurations produce identical rows."""

    config = _config(algorithm=ALGO_DIJKSTRA_PERIODIC, n=20, mode="dh-sim", trials=3)

    assert cmd_run(config).rows == cmd_run(config).rows


def test_trials_use_consecutive_graph_seeds():
    """Trial t runs on the graph generated with seed + t."""

    report = cmd_run(_config(algorithm=ALGO_DIJKSTRA_CLASSIC, n=12, seed=5, trials=3))
    single = cmd_run(_config(algorithm=ALGO_DIJKSTRA_CLASSIC, n=12, seed=6))

    assert [row.trial for row in report.rows] == [0, 1, 2]
    assert {row.seed for row in report.rows} == {5}
    assert report.rows[1].checksum == single.rows[0].checksum
    assert report.rows[0].checksum != report.rows[1].checksum
    assert {row.total for row in report.rows} == {121}


def test_dh_sim_trials_draw_independent_streams():
    """Different trials of dh-sim see different random charges."""

    config = _config(algorithm=ALGO_DIJKSTRA_CLASSIC, n=64, mode="dh-sim", trials=4)

    assert config.finder_mode(0) != config.finder_mode(1)
    assert len({row.total for row in cmd_run(config).rows}) > 1


def test_bipartite_rows_report_n2_as_size():
    """Bipartite rows leave n empty and size by n2."""

    (row,) = cmd_run(_config(algorithm=ALGO_BIPARTITE, n1=3, n2=5)).rows

    assert (row.n, row.n1, row.n2, row.k) == (None, 3, 5, None)
    assert row.size == 5


def test_spanning_tree_runs_use_symmetric_graphs():
    """MST configurations generate symmetric weights."""

    graph = _config(algorithm=ALGO_PRIM_PERIODIC, n=6).graph_for_trial(0)

    assert graph.is_symmetric()


def test_run_from_graph_file(tmp_path):
    """A graph file replaces generation."""

    path = tmp_path / "graph.txt"
    save_graph(generate(GraphGenSpec.complete(5, 3)), path)

    (row,) = cmd_run(_config(algorithm=ALGO_DIJKSTRA_CLASSIC, graph_file=str(path))).rows

    assert row.n == 5
    assert row.total == 16


def test_graph_file_shape_must_fit_the_algorithm(tmp_path):
    """A bipartite file cannot feed Dijkstra."""

    path = tmp_path / "graph.txt"
    save_graph(generate(GraphGenSpec.bipartite(2, 3, 3)), path)

    with pytest.raises(RunConfigError):
        cmd_run(_config(algorithm=ALGO_DIJKSTRA_CLASSIC, graph_file=str(path)))


@pytest.mark.parametrize("algorithm", ALGORITHMS)
@pytest.mark.parametrize("mode", MODES)
def test_verify_passes_for_every_algorithm(algorithm, mode):
    """Every algorithm agrees with the oracles in every mode."""

    sizes = {"n1": 3, "n2": 4} if algorithm == ALGO_BIPARTITE else {"n": 6}
    report = cmd_verify(
        _config(algorithm=algorithm, mode=mode, seed=11, trials=2, **sizes)
    )

    assert report.checked == 2
    assert report.passed, report.mismatches
    assert report.exit_code == 0


@pytest.mark.parametrize(
    ("algorithm", "symmetric"),
    [
        (ALGO_DIJKSTRA_CLASSIC, False),
        (ALGO_DIJKSTRA_PERIODIC, False),
        (ALGO_PRIM_PERIODIC, True),
        (ALGO_DIAMETER, False),
    ],
)
def test_verify_reports_a_corrupted_reference(algorithm, symmetric):
    """Checking against a different graph must produce mismatches."""

    graph = generate(GraphGenSpec.complete(6, 1, symmetric=symmetric))
    other = generate(GraphGenSpec.complete(6, 2, symmetric=symmetric))

    mismatches = verify_graph(
        algorithm, graph, FinderMode.classical(), k=2, reference=other
    )

    assert mismatches
    assert all(m.startswith(f"{algorithm}/classical") for m in mismatches)


def test_verify_reports_a_corrupted_bipartite_reference():
    """The bipartite comparison catches a wrong oracle graph too."""

    graph = generate(GraphGenSpec.bipartite(3, 3, 1))
    other = generate(GraphGenSpec.bipartite(3, 3, 2))

    assert verify_graph(ALGO_BIPARTITE, graph, FinderMode.classical(), reference=other)


@pytest.mark.parametrize(("power", "scale"), [(2.0, 1.0), (1.75, 7.0), (3.0, 0.5)])
def test_fit_recovers_exact_power_laws(power, scale):
    """Exact power laws give their exponent and constant back."""

    sizes = [64, 128, 256, 512, 1024]
    fit = fit_power_law(sizes, [scale * n**power for n in sizes])

    assert fit.slope == pytest.approx(power, abs=1e-9)
    assert fit.intercept == pytest.approx(math.log(scale), abs=1e-9)
    assert fit.residual == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize(
    ("sizes", "totals"),
    [([64], [10]), ([64, 128], [10, 20]), ([64, 64, 64], [1, 2, 3]), ([1, 2, 3], [1, 0, 3])],
)
def test_fit_needs_three_positive_sizes(sizes, totals):
    """Too few distinct sizes or non-positive totals cannot be fitted."""

    with pytest.raises(FitError):
        fit_power_law(sizes, totals)


def _row(n, trial, total):
    return CostRow(
        algorithm=ALGO_DIJKSTRA_CLASSIC,
        mode="classical",
        n=n,
        n1=None,
        n2=None,
        k=None,
        seed=1,
        trial=trial,
        search_queries=total,
        update_queries=0,
        total=total,
        checksum="",
    )


def test_fit_exponent_averages_trials_per_size():
    """Trials at one size are averaged before fitting."""

    rows = [_row(n, t, n * n + delta) for n in (8, 16, 32) for t, delta in ((0, -1), (1, 1))]

    assert fit_exponent(rows).slope == pytest.approx(2.0, abs=1e-9)


def test_exponent_fit_window_verdict():
    """A missing window gives no verdict."""

    fit = ExponentFit(1.8, 0.0, 0.0)

    assert fit.within((1.6, 1.9)) is True
    assert fit.within((1.9, 2.1)) is False
    assert fit.within(None) is None


def test_scaling_sweep_fits_classic_dijkstra():
    """A classic classical sweep has slope about 2."""

    result = cmd_scaling(
        _config(algorithm=ALGO_DIJKSTRA_CLASSIC, sizes="64,128,256")
    )

    assert [row.n for row in result.report.rows] == [64, 128, 256]
    assert [row.total for row in result.report.rows] == [63**2, 127**2, 255**2]
    assert result.window == (1.9, 2.1)
    assert result.verdict is True


def test_bipartite_scaling_needs_n1():
    """Bipartite sweeps vary n2 around a fixed n1."""

    with pytest.raises(RunConfigError):
        cmd_scaling(_config(algorithm=ALGO_BIPARTITE, sizes="4,8,16"))

    result = cmd_scaling(_config(algorithm=ALGO_BIPARTITE, n1=3, sizes="4,8,16"))
    assert [row.n2 for row in result.report.rows] == [4, 8, 16]
    assert result.window is None


def test_ksweep_reports_the_cheapest_period():
    """The best k is the one with the lowest total."""

    result = ksweep(_config(algorithm=ALGO_DIJKSTRA_PERIODIC, n=64, mode="ideal-quantum"))
    totals = {row.k: row.total for row in result.report.rows}

    assert sorted(totals) == list(default_ks(64))
    assert totals[result.best_k] == min(totals.values())
    assert result.target_k == 8


def test_ksweep_honours_explicit_periods():
    """A given k list replaces the powers of two."""

    result = ksweep(_config(algorithm=ALGO_PRIM_PERIODIC, n=25, ks="3,5,7"))

    assert sorted(row.k for row in result.report.rows) == [3, 5, 7]


def test_ksweep_needs_a_periodic_algorithm():
    """Non-periodic algorithms have no k to sweep."""

    with pytest.raises(RunConfigError):
        ksweep(_config(algorithm=ALGO_DIJKSTRA_CLASSIC, n=16))


def test_default_ks_are_powers_of_two():
    """Powers of two from 1 up to n."""

    assert default_ks(64) == (1, 2, 4, 8, 16, 32, 64)
    assert default_ks(100) == (1, 2, 4, 8, 16, 32, 64)


def test_report_keeps_rows_sorted():
    """Rows are ordered by size then trial whatever the insertion order."""

    report = CostReport()
    report.add(_row(16, 1, 5))
    report.add(_row(8, 0, 5))
    report.add(_row(16, 0, 5))

    assert [(row.n, row.trial) for row in report.rows] == [(8, 0), (16, 0), (16, 1)]


def test_write_csv(tmp_path):
    """CSV output has the fixed column header and blank cells for None."""

    report = cmd_run(_config(algorithm=ALGO_BIPARTITE, n1=2, n2=3))
    path = tmp_path / "rows.csv"

    text = write_csv(report, path)

    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1][CSV_COLUMNS.index("n")] == ""
    assert rows[1][CSV_COLUMNS.index("n2")] == "3"
    assert path.read_text(encoding="utf-8") == text


def test_write_json_includes_timestamp_and_extra():
    """JSON output carries rows, a timestamp and any extra fields."""

    report = cmd_run(_config(algorithm=ALGO_DIJKSTRA_CLASSIC, n=4))

    payload = json.loads(write_json(report, extra={"best_k": 2}))

    assert payload["best_k"] == 2
    assert payload["rows"][0]["total"] == 9
    assert "generated_at" in payload


@pytest.mark.parametrize("mode", ALL_MODES, ids=lambda mode: mode.kind.value)
def test_verify_graph_without_reference_finds_nothing(mode):
    """Checking a run against its own graph reports no mismatches."""

    graph = generate(GraphGenSpec.complete(5, 9))

    assert verify_graph(ALGO_DIJKSTRA_CLASSIC, graph, mode) == []


def test_csv_output_is_byte_identical_across_runs():
    """Deterministic modes give the same CSV text on every run."""

    config = _config(algorithm=ALGO_PRIM_PERIODIC, n=12, mode="ideal-quantum", trials=2)

    assert write_csv(cmd_run(config)) == write_csv(cmd_run(config))


def test_cmd_verify_fails_on_a_wrong_oracle(monkeypatch):
    """A perturbed all-pairs table fails every trial with located mismatches."""

    real = experiments.floyd_warshall

    def skewed(graph):
        table = real(graph).copy()
        table[0, 2] *= 2
        return table

    monkeypatch.setattr(experiments, "floyd_warshall", skewed)

    report = cmd_verify(_config(algorithm=ALGO_DIJKSTRA_PERIODIC, n=6, seed=3, trials=2))

    assert report.checked == 2
    assert not report.passed
    assert report.exit_code == 1
    assert [m.split(":")[0] for m in report.mismatches] == [
        "dijkstra-periodic/classical seed=3",
        "dijkstra-periodic/classical seed=4",
    ]
    assert all("lambda[2]" in m for m in report.mismatches)


@pytest.mark.parametrize("mode", MODES)
def test_verify_v1_only_bipartite(mode):
    """Skipping the fill pass verifies V1 distances and infinite V2 ones."""

    report = cmd_verify(
        _config(algorithm=ALGO_BIPARTITE, mode=mode, n1=4, n2=5, fill_v2=False, trials=2)
    )

    assert report.passed, report.mismatches


def test_size_grid_defaults_depend_on_algorithm():
    """Diameter sweeps stop at 512; other sweeps run to 1024."""

    assert _config(algorithm=ALGO_DIAMETER).sizes == DIAMETER_SIZES
    assert _config(algorithm=ALGO_DIJKSTRA_CLASSIC).sizes == DEFAULT_SIZES
    assert _config(algorithm=ALGO_DIAMETER, sizes="16,32,64").sizes == (16, 32, 64)
