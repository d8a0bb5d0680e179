"""Command-line entry point: run, verify, scaling, ksweep and gen."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, TextIO

from .const import (
    ALGO_DIAMETER,
    ALGORITHMS,
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
    DEFAULT_SEED,
    FORMAT_CSV,
    FORMAT_JSON,
    MODES,
    SHORTEST_PATH_ALGORITHMS,
)
from .cost_model import floyd_warshall_cost, predicted_cost, repeated_dijkstra_cost
from .errors import QuantumGraphsError, RunConfigError
from .experiments import (
    CostReport,
    RunConfig,
    cmd_run,
    cmd_scaling,
    cmd_verify,
    ksweep,
    write_csv,
    write_json,
)
from .graph import GraphGenSpec, generate, save_graph
from .min_search import FinderKind

_LOGGER = logging.getLogger(__name__)

_CONFIG_ARGUMENTS = {
    "algorithm": CONF_ALGORITHM,
    "mode": CONF_MODE,
    "n": CONF_N,
    "n1": CONF_N1,
    "n2": CONF_N2,
    "k": CONF_K,
    "ks": CONF_KS,
    "seed": CONF_SEED,
    "trials": CONF_TRIALS,
    "sizes": CONF_SIZES,
    "graph_file": CONF_GRAPH_FILE,
    "v0": CONF_V0,
    "inner": CONF_INNER,
}


def _config_from_args(arguments: argparse.Namespace) -> RunConfig:
    """Build a RunConfig from the parsed flags that were actually given."""
    data: dict[str, Any] = {
        key: getattr(arguments, attribute)
        for attribute, key in _CONFIG_ARGUMENTS.items()
        if getattr(arguments, attribute, None) is not None
    }
    if getattr(arguments, "no_fill_v2", False):
        data[CONF_FILL_V2] = False
    return RunConfig.from_mapping(data)


def _emit(
    report: CostReport, arguments: argparse.Namespace, extra: dict[str, Any] | None = None
) -> TextIO:
    """Write rows to --out or stdout; return the stream for human summaries."""
    out: Path | None = arguments.out
    if arguments.format == FORMAT_JSON:
        text = write_json(report, out, extra=extra)
    else:
        text = write_csv(report, out)
    if out is None:
        sys.stdout.write(text)
        return sys.stderr
    print(f"Wrote {len(report.rows)} rows to {out}")
    return sys.stdout


def _handle_run(arguments: argparse.Namespace) -> int:
    _emit(cmd_run(_config_from_args(arguments)), arguments)
    return 0


def _handle_verify(arguments: argparse.Namespace) -> int:
    report = cmd_verify(_config_from_args(arguments))
    for mismatch in report.mismatches:
        print(mismatch)
    verdict = "passed" if report.passed else f"FAILED ({len(report.mismatches)} mismatches)"
    print(f"Verified {report.checked} runs: {verdict}")
    return report.exit_code


def _handle_scaling(arguments: argparse.Namespace) -> int:
    config = _config_from_args(arguments)
    result = cmd_scaling(config)
    fit = result.fit
    stream = _emit(
        result.report,
        arguments,
        extra={"fit": fit._asdict(), "window": result.window},
    )
    print(
        f"slope={fit.slope:.4f} intercept={fit.intercept:.4f} "
        f"residual={fit.residual:.3g}",
        file=stream,
    )
    if result.window is not None:
        low, high = result.window
        verdict = "pass" if result.verdict else "fail"
        print(f"expected slope in [{low}, {high}]: {verdict}", file=stream)

    if config.finder_kind is not FinderKind.DH_SIM:
        for row in result.report.rows:
            if row.trial:
                continue
            predicted = predicted_cost(
                config.algorithm,
                config.mode,
                row.n,
                row.k,
                n1=row.n1,
                n2=row.n2,
                fill_v2=config.fill_v2,
                inner=config.inner,
            )
            line = f"size={row.size} measured={row.total} predicted={predicted.total}"
            if config.algorithm == ALGO_DIAMETER and row.n is not None:
                line += (
                    f" floyd_warshall={floyd_warshall_cost(row.n)}"
                    f" repeated_dijkstra={repeated_dijkstra_cost(row.n)}"
                )
            print(line, file=stream)
    return 0


def _handle_ksweep(arguments: argparse.Namespace) -> int:
    result = ksweep(_config_from_args(arguments))
    stream = _emit(
        result.report,
        arguments,
        extra={"best_k": result.best_k, "target_k": result.target_k},
    )
    within = "yes" if result.within_tolerance else "no"
    print(
        f"n={result.n} best k={result.best_k} target k={result.target_k} "
        f"within factor 2: {within}",
        file=stream,
    )
    return 0


def _handle_gen(arguments: argparse.Namespace) -> int:
    if arguments.n is not None:
        if arguments.n1 is not None or arguments.n2 is not None:
            raise RunConfigError("give either --n or --n1/--n2, not both")
        spec = GraphGenSpec.complete(
            arguments.n, arguments.seed, symmetric=arguments.symmetric
        )
    elif arguments.n1 is not None and arguments.n2 is not None:
        if arguments.symmetric:
            raise RunConfigError("--symmetric applies to complete graphs only")
        spec = GraphGenSpec.bipartite(arguments.n1, arguments.n2, arguments.seed)
    else:
        raise RunConfigError("gen needs --n or both --n1 and --n2")
    save_graph(generate(spec), arguments.out)
    print(f"Wrote {spec.shape} graph {spec.sizes} seed={spec.seed} to {arguments.out}")
    return 0


def _add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="vertex count of a complete graph")
    parser.add_argument("--n1", type=int, help="size of part V1 of a bipartite graph")
    parser.add_argument("--n2", type=int, help="size of part V2 of a bipartite graph")
    parser.add_argument("--seed", type=int, help=f"base seed (default {DEFAULT_SEED})")


def _add_run_arguments(parser: argparse.ArgumentParser) -> None:
    _add_graph_arguments(parser)
    parser.add_argument("--algorithm", required=True, choices=ALGORITHMS)
    parser.add_argument("--mode", choices=MODES, help="finder cost model")
    parser.add_argument("--k", help="flush period: a positive integer or 'auto'")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--graph-file", type=Path)
    parser.add_argument("--v0", type=int, help="source vertex (default 0)")
    parser.add_argument(
        "--inner",
        choices=SHORTEST_PATH_ALGORITHMS,
        help="inner shortest-path algorithm for diameter",
    )
    parser.add_argument(
        "--no-fill-v2",
        action="store_true",
        help="bipartite: skip the final pass that fills V2 distances",
    )


def _add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, help="write rows here instead of stdout")
    parser.add_argument("--format", choices=(FORMAT_CSV, FORMAT_JSON), default=FORMAT_CSV)


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser for every subcommand."""
    parser = argparse.ArgumentParser(
        prog="quantumgraphs",
        description="Graph algorithms under classical and quantum minimum-finding cost models.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log at DEBUG level"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run an algorithm and report its query cost")
    _add_run_arguments(run)
    _add_output_arguments(run)
    run.set_defaults(handler=_handle_run)

    verify = commands.add_parser("verify", help="compare outputs with reference oracles")
    _add_run_arguments(verify)
    verify.set_defaults(handler=_handle_verify)

    scaling = commands.add_parser("scaling", help="sweep sizes and fit the cost exponent")
    _add_run_arguments(scaling)
    _add_output_arguments(scaling)
    scaling.add_argument("--sizes", help="comma-separated sizes (n, or n2 for bipartite)")
    scaling.set_defaults(handler=_handle_scaling)

    sweep = commands.add_parser("ksweep", help="sweep the flush period at fixed n")
    _add_run_arguments(sweep)
    _add_output_arguments(sweep)
    sweep.add_argument("--ks", help="comma-separated flush periods (default powers of 2)")
    sweep.set_defaults(handler=_handle_ksweep)

    gen = commands.add_parser("gen", help="write a generated graph file")
    _add_graph_arguments(gen)
    gen.add_argument("--symmetric", action="store_true")
    gen.add_argument("--out", type=Path, required=True)
    gen.set_defaults(handler=_handle_gen, seed=DEFAULT_SEED)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit status."""
    parser = build_parser()
    arguments = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if arguments.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return arguments.handler(arguments)
    except QuantumGraphsError as err:
        _LOGGER.debug("Command failed", exc_info=True)
        raise SystemExit(str(err)) from None


if __name__ == "__main__":
    raise SystemExit(main())
