from __future__ import annotations

# Define constants for the quantumgraphs package

# Graph shapes
SHAPE_COMPLETE = "complete"
SHAPE_BIPARTITE = "bipartite"

# Weight distribution defaults: uniform on the half-open interval (low, high]
DEFAULT_WEIGHT_LOW = 0.0
DEFAULT_WEIGHT_HIGH = 1.0
# Weights are drawn on a dyadic grid so path sums stay exact in double precision.
WEIGHT_GRID_BITS = 32
INFINITY_TOKEN = "inf"

# Algorithm ids exposed on the command line
ALGO_DIJKSTRA_CLASSIC = "dijkstra-classic"
ALGO_DIJKSTRA_NO_UPDATE = "dijkstra-no-update"
ALGO_DIJKSTRA_PERIODIC = "dijkstra-periodic"
ALGO_PRIM_CLASSIC = "prim-classic"
ALGO_PRIM_NO_UPDATE = "prim-no-update"
ALGO_PRIM_PERIODIC = "prim-periodic"
ALGO_BIPARTITE = "bipartite"
ALGO_DIAMETER = "diameter"

SHORTEST_PATH_ALGORITHMS = (
    ALGO_DIJKSTRA_CLASSIC,
    ALGO_DIJKSTRA_NO_UPDATE,
    ALGO_DIJKSTRA_PERIODIC,
)
SPANNING_TREE_ALGORITHMS = (
    ALGO_PRIM_CLASSIC,
    ALGO_PRIM_NO_UPDATE,
    ALGO_PRIM_PERIODIC,
)
PERIODIC_ALGORITHMS = frozenset({ALGO_DIJKSTRA_PERIODIC, ALGO_PRIM_PERIODIC})
ALGORITHMS = (
    *SHORTEST_PATH_ALGORITHMS,
    *SPANNING_TREE_ALGORITHMS,
    ALGO_BIPARTITE,
    ALGO_DIAMETER,
)
DEFAULT_DIAMETER_INNER = ALGO_DIJKSTRA_PERIODIC

# Finder mode ids
MODE_CLASSICAL = "classical"
MODE_IDEAL_QUANTUM = "ideal-quantum"
MODE_DH_SIM = "dh-sim"
MODES = (MODE_CLASSICAL, MODE_IDEAL_QUANTUM, MODE_DH_SIM)

K_AUTO = "auto"

# Experiment defaults
DEFAULT_SEED = 1
DEFAULT_TRIALS = 1
DEFAULT_DH_SIM_TRIALS = 32
DEFAULT_SIZES = (64, 128, 256, 512, 1024)
MIN_FIT_SIZES = 3
KSWEEP_TOLERANCE_FACTOR = 2

FORMAT_CSV = "csv"
FORMAT_JSON = "json"

CSV_COLUMNS = (
    "algorithm",
    "mode",
    "n",
    "n1",
    "n2",
    "k",
    "seed",
    "trial",
    "search_queries",
    "update_queries",
    "total",
    "checksum",
)

# Exhaustive oracles stay tiny.
BRUTE_FORCE_MAX_N = 8
SPANNING_TREE_ENUMERATION_MAX_N = 7

# Run configuration keys
CONF_ALGORITHM = "algorithm"
CONF_MODE = "mode"
CONF_N = "n"
CONF_N1 = "n1"
CONF_N2 = "n2"
CONF_K = "k"
CONF_KS = "ks"
CONF_SEED = "seed"
CONF_TRIALS = "trials"
CONF_SIZES = "sizes"
CONF_GRAPH_FILE = "graph_file"
CONF_V0 = "v0"
CONF_INNER = "inner"
CONF_FILL_V2 = "fill_v2"

# Accepted log-log slopes on the default size grid, per (algorithm, mode).
SLOPE_WINDOWS = {
    (ALGO_DIJKSTRA_CLASSIC, MODE_CLASSICAL): (1.9, 2.1),
    (ALGO_PRIM_CLASSIC, MODE_CLASSICAL): (1.9, 2.1),
    (ALGO_DIJKSTRA_NO_UPDATE, MODE_CLASSICAL): (2.85, 3.1),
    (ALGO_PRIM_NO_UPDATE, MODE_CLASSICAL): (2.85, 3.1),
    (ALGO_DIJKSTRA_NO_UPDATE, MODE_IDEAL_QUANTUM): (1.85, 2.1),
    (ALGO_PRIM_NO_UPDATE, MODE_IDEAL_QUANTUM): (1.85, 2.1),
    (ALGO_DIJKSTRA_PERIODIC, MODE_IDEAL_QUANTUM): (1.6, 1.9),
    (ALGO_PRIM_PERIODIC, MODE_IDEAL_QUANTUM): (1.6, 1.9),
    (ALGO_DIAMETER, MODE_IDEAL_QUANTUM): (2.05, 2.45),
}
DIAMETER_SIZES = (64, 128, 256, 512)
