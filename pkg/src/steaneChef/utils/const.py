"""Constants used throughout steaneChef."""

# Configuration
CONFIG_SECTION = "steanechef"
DEFAULT_CONFIG_FILENAME = "steanechef.ini"
STEANECHEF_DIR = ".steanechef"

# Config keys
CONFIG_KEY_DATA_DIR = "data_dir"
CONFIG_KEY_LOG_LEVEL = "log_level"
CONFIG_KEY_THREADS = "threads"
CONFIG_KEY_DISTANCE_CAP = "distance_cap"
CONFIG_KEY_WEIGHT_CAP = "weight_cap"
CONFIG_KEY_DISTINCT_CAP = "distinct_cap"
CONFIG_KEY_INJECT_BUDGET = "inject_budget"
CONFIG_KEY_SHOT_CHUNK = "shot_chunk"

# Default values
DEFAULT_LOG_LEVEL = "INFO"
DEFAULT_THREADS = 1
DEFAULT_DISTANCE_CAP = 40
DEFAULT_WEIGHT_CAP = 4
DEFAULT_DISTINCT_CAP = 3
DEFAULT_INJECT_BUDGET = 20_000_000
DEFAULT_SHOT_CHUNK = 100_000

# Environment variables
ENV_DATA_DIR = "STEANECHEF_DATA_DIR"
ENV_LOG_LEVEL = "STEANECHEF_LOG_LEVEL"
ENV_THREADS = "STEANECHEF_THREADS"
ENV_DISTANCE_CAP = "STEANECHEF_DISTANCE_CAP"
ENV_WEIGHT_CAP = "STEANECHEF_WEIGHT_CAP"
ENV_DISTINCT_CAP = "STEANECHEF_DISTINCT_CAP"
ENV_INJECT_BUDGET = "STEANECHEF_INJECT_BUDGET"
ENV_SHOT_CHUNK = "STEANECHEF_SHOT_CHUNK"

# Synthesis config defaults
DEFAULT_SEED = 0
DEFAULT_MAX_BACKTRACKS = 500
DEFAULT_MAX_RESTARTS = 20
DEFAULT_PERTURBATION_PROB = 0.05

# Artifact names
CIRCUIT_FILE_TEMPLATE = "C{index}.circ"
PROTOCOL_FILENAME = "protocol.txt"
METRICS_FILENAME = "metrics.csv"
MANIFEST_FILENAME = "manifest.json"
VERIFY_REPORT_FILENAME = "verify.json"
INJECT_REPORT_FILENAME = "inject.json"
SIM_X_FILENAME = "sim_x.csv"
SIM_Z_FILENAME = "sim_z.csv"
SIM_FIT_FILENAME = "sim_fit.json"
CHECK_FILE_SUFFIX = ".checks"

# Simulation
DEFAULT_SWEEP = (2e-3, 5e-3, 1e-2)
DEFAULT_CONFIDENCE = 0.95

# Return codes
SUCCESS = 0
VIOLATIONS = 1
USAGE_ERROR = 2
SYNTHESIS_EXHAUSTED = 3
